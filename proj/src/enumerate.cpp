#include "enumerate.hpp"

#include <algorithm>
#include <sstream>

namespace dsring {

Base mode_base(Mode m) {
  switch (m) {
    case Mode::H: return Base::Z;
    case Mode::HS: return Base::T;
    case Mode::KS: return Base::Q;
    case Mode::K: return Base::Z;
  }
  return Base::Z;
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::H: return "H";
    case Mode::HS: return "HS";
    case Mode::KS: return "KS";
    case Mode::K: return "K";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  std::string u = s;
  for (char& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u == "H") return Mode::H;
  if (u == "HS") return Mode::HS;
  if (u == "KS") return Mode::KS;
  if (u == "K") return Mode::K;
  throw std::invalid_argument("unknown ring '" + s + "' (expected h, hs or ks)");
}

std::vector<std::string> PipeDream::codes() const {
  std::vector<std::string> out;
  for (const auto& c : cells) out.push_back(c.tile->code());
  return out;
}

bool uses_k_tiles(Mode m) { return m == Mode::KS || m == Mode::K; }
bool allows_equivariant(Mode m) { return m == Mode::HS || m == Mode::KS; }

namespace {

class Enumerator {
 public:
  Enumerator(const Region& r, Mode mode, const EngineOptions& opts)
      : r_(r),
        mode_(mode),
        lower_(catalog(Half::Lower, uses_k_tiles(mode) ? TileMode::K : TileMode::H, opts.crossings)),
        upper_(catalog(Half::Upper, uses_k_tiles(mode) ? TileMode::K : TileMode::H, opts.crossings)),
        grid_(r.a + r.b + 1, std::vector<const Tile*>(r.n + 2, nullptr)) {
    for (int y = 1; y <= r.a + r.b; ++y) {
      if (r.is_lower_row(y))
        for (int x = r.first_col(y); x <= r.last_col(y); ++x) scan_.push_back({x, y});
      else
        for (int x = r.last_col(y); x >= 1; --x) scan_.push_back({x, y});
    }
  }

  std::vector<PipeDream> run() {
    step(0);
    return std::move(out_);
  }

 private:
  struct Cell {
    int x, y;
  };

  char south_of(int x, int y) const {
    if (r_.is_lower_row(y) && x == r_.first_col(y)) return 'R';
    if (!r_.is_lower_row(y) && x == r_.last_col(y)) return r_.stair_south[y - r_.b - 1];
    if (y == 1) return r_.south[x - r_.b - 1];
    return grid_[y - 1][x]->north;
  }

  bool eq_ok(int x, int y) const { return allows_equivariant(mode_) && r_.eq_allowed(x, y); }

  void step(std::size_t i) {
    if (i == scan_.size()) {
      finish();
      return;
    }
    auto [x, y] = scan_[i];
    bool lower = r_.is_lower_row(y);
    std::string side;
    if (lower)
      side = x == r_.first_col(y) ? std::string("0") : grid_[y][x - 1]->east;
    else
      side = x == r_.last_col(y) ? std::string("1") : grid_[y][x + 1]->west;
    char s = south_of(x, y);
    const auto& cands = (lower ? lower_ : upper_).match(side, s);
    bool row_end = lower ? x == r_.last_col(y) : x == 1;
    for (const Tile* t : cands) {
      if (t->is_equivariant() && !eq_ok(x, y)) continue;
      if (row_end) {
        if (lower && t->east != std::string(1, r_.lower_east[y - 1])) continue;
        if (!lower && t->west != std::string(1, r_.upper_west[y - r_.b - 1])) continue;
      }
      grid_[y][x] = t;
      step(i + 1);
    }
    grid_[y][x] = nullptr;
  }

  void finish() {
    PipeDream p;
    for (auto [x, y] : scan_) {
      const Tile* t = grid_[y][x];
      p.cells.push_back({x, y, t});
      p.E += t->is_equivariant();
      p.F += t->is_weighted_fusor();
      p.zone_fusors += t->is_fusor() && r_.eq_allowed(x, y);
      p.fusing += t->fusing_letters();
    }
    int top = r_.a + r_.b;
    if (top == 0)
      p.north = r_.south;
    else
      for (int x = 1; x <= r_.n; ++x) p.north += grid_[top][x]->north;
    if (!is_bit_string(p.north))
      throw InvariantViolation("completed pipe dream has north labels '" + p.north + "' outside {0,1}");
    int zeros = static_cast<int>(std::count(p.north.begin(), p.north.end(), '0'));
    if (zeros != r_.b + r_.d)
      throw InvariantViolation("completed pipe dream has north labels '" + p.north + "' with wrong content");
    p.nu = partition_of(p.north);
    out_.push_back(std::move(p));
  }

  const Region& r_;
  Mode mode_;
  const Catalog& lower_;
  const Catalog& upper_;
  std::vector<std::vector<const Tile*>> grid_;
  std::vector<Cell> scan_;
  std::vector<PipeDream> out_;
};

}  // namespace

std::vector<PipeDream> enumerate_dreams(const Region& r, Mode mode, const EngineOptions& opts) {
  return Enumerator(r, mode, opts).run();
}

DreamStats dream_stats(const PipeDream& p) { return {p.nu, p.E, p.F, p.fusing}; }

Coeff dream_weight(const PipeDream& p, Mode mode, const EngineOptions& opts) {
  switch (mode) {
    case Mode::H:
      if (p.E > 0) throw std::invalid_argument("H weight requested for a dream with equivariant tiles");
      [[fallthrough]];
    case Mode::HS: {
      for (const auto& c : p.cells)
        if (c.tile->is_strict()) throw std::invalid_argument("H/HS weight requested for a dream with K-tiles");
      if (mode == Mode::H) return Coeff::integer(1);
      return Coeff::monomial(Base::T, p.E, 1);
    }
    case Mode::KS: {
      int f = opts.fusor_weight == FusorWeight::InZone ? p.zone_fusors : p.F;
      Coeff w = Coeff::one_minus_q().pow(p.E) * Coeff::monomial(Base::Q, f, 1);
      return p.fusing % 2 ? -w : w;
    }
    case Mode::K:
      if (p.E > 0) throw std::invalid_argument("K weight requested for a dream with equivariant tiles");
      return Coeff::integer(p.fusing % 2 ? -1 : 1);
  }
  return Coeff();
}

void verify_dream(const Region& r, const PipeDream& p, Mode mode, const EngineOptions& opts) {
  TileMode tm = uses_k_tiles(mode) ? TileMode::K : TileMode::H;
  std::vector<std::vector<const Tile*>> g(r.a + r.b + 1, std::vector<const Tile*>(r.n + 2, nullptr));
  for (const auto& c : p.cells) {
    if (!r.contains(c.col, c.row)) throw InvariantViolation("tile outside the region");
    if (g[c.row][c.col]) throw InvariantViolation("cell tiled twice");
    Half h = r.is_lower_row(c.row) ? Half::Lower : Half::Upper;
    if (c.tile->half != h) throw InvariantViolation("tile from the wrong half at " + c.tile->code());
    bool in_cat = false;
    for (const auto& t : catalog(h, tm, opts.crossings).tiles())
      if (t.code() == c.tile->code()) in_cat = true;
    if (!in_cat) throw InvariantViolation("tile " + c.tile->code() + " not in the catalog for this ring");
    if (c.tile->is_equivariant() && (!allows_equivariant(mode) || !r.eq_allowed(c.col, c.row)))
      throw InvariantViolation("equivariant tile outside the allowed zone");
    g[c.row][c.col] = c.tile;
  }
  if (static_cast<int>(p.cells.size()) != r.cell_count()) throw InvariantViolation("region not fully tiled");
  for (int y = 1; y <= r.a + r.b; ++y) {
    for (int x = r.first_col(y); x <= r.last_col(y); ++x) {
      const Tile* t = g[y][x];
      char s;
      if (x == r.first_col(y) && r.is_lower_row(y))
        s = 'R';
      else if (!r.is_lower_row(y) && x == r.last_col(y))
        s = r.stair_south[y - r.b - 1];
      else if (y == 1)
        s = r.south[x - r.b - 1];
      else
        s = g[y - 1][x]->north;
      if (t->south != s) throw InvariantViolation("south label mismatch at " + t->code());
      if (x < r.last_col(y) && t->east != g[y][x + 1]->west)
        throw InvariantViolation("vertical label mismatch at " + t->code());
    }
    if (r.is_lower_row(y)) {
      if (g[y][r.first_col(y)]->west != "0") throw InvariantViolation("lower west boundary mismatch");
      if (g[y][r.last_col(y)]->east != std::string(1, r.lower_east[y - 1]))
        throw InvariantViolation("lower east boundary mismatch");
    } else {
      if (g[y][r.last_col(y)]->east != "1") throw InvariantViolation("upper east boundary mismatch");
      if (g[y][1]->west != std::string(1, r.upper_west[y - r.b - 1]))
        throw InvariantViolation("upper west boundary mismatch");
    }
  }
  std::string north;
  int top = r.a + r.b;
  if (top == 0)
    north = r.south;
  else
    for (int x = 1; x <= r.n; ++x) north += g[top][x]->north;
  if (north != p.north) throw InvariantViolation("recorded north labels disagree with the tiles");
  if (!is_bit_string(north)) throw InvariantViolation("north labels outside {0,1}");
}

std::vector<std::pair<BoxedPartition, Coeff>> Expansion::sorted_terms() const {
  std::vector<std::pair<BoxedPartition, Coeff>> v(terms.begin(), terms.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return bits_of(x.first) < bits_of(y.first); });
  return v;
}

Expansion expand(const BoxedPartition& lambda, const BoxedPartition& mu, Mode mode, const EngineOptions& opts) {
  Expansion e;
  e.mode = mode;
  e.lambda = lambda;
  e.mu = mu;
  Region r = build_region(lambda, mu);
  auto dreams = enumerate_dreams(r, mode, opts);
  e.dream_count = dreams.size();
  for (const auto& p : dreams) {
    auto [it, fresh] = e.terms.try_emplace(p.nu, Coeff(mode_base(mode)));
    it->second += dream_weight(p, mode, opts);
  }
  std::erase_if(e.terms, [](const auto& kv) { return kv.second.is_zero(); });
  return e;
}

namespace {

constexpr int kCellWidth = 18;

std::string center(const std::string& s, int w) {
  int left = (w - static_cast<int>(s.size())) / 2;
  if (left < 0) left = 0;
  std::string out(left, ' ');
  out += s;
  out.resize(std::max<std::size_t>(out.size(), w), ' ');
  return out;
}

std::string cell_mid(const Tile& t) {
  std::string w = t.west, e = t.east;
  std::string s = std::string(3 - std::min<std::size_t>(3, w.size()), ' ') + w + " ";
  s += center(t.code(), 10) + " " + e;
  s.resize(kCellWidth, ' ');
  return s;
}

}  // namespace

std::string render_dream(const Region& r, const PipeDream& p, Mode mode) {
  std::vector<std::vector<const Tile*>> g(r.a + r.b + 1, std::vector<const Tile*>(r.n + 2, nullptr));
  for (const auto& c : p.cells) g[c.row][c.col] = c.tile;
  std::ostringstream os;
  os << "dream ring=" << mode_name(mode) << " lambda=" << r.lambda.parts_text() << " box=" << r.lambda.box_text()
     << " mu=" << r.mu.parts_text() << " box=" << r.mu.box_text() << "\n";
  os << "nu=" << p.north << " (" << p.nu.parts_text() << ") E=" << p.E << " F=" << p.F << " fusing=" << p.fusing
     << "\n";
  for (int y = r.a + r.b; y >= 1; --y) {
    std::string top = "     ", mid = (y <= r.b ? "L" : "U") + std::to_string(y), bot = "     ";
    mid.resize(4, ' ');
    mid += "|";
    for (int x = 1; x <= r.n; ++x) {
      const Tile* t = g[y][x];
      if (!t) {
        top += std::string(kCellWidth + 1, ' ');
        mid += std::string(kCellWidth, ' ') + "|";
        bot += std::string(kCellWidth + 1, ' ');
        continue;
      }
      top += center(std::string(1, t->north), kCellWidth) + " ";
      mid += cell_mid(*t) + "|";
      bot += center(std::string(1, t->south), kCellWidth) + " ";
    }
    auto trim = [](std::string s) {
      s.erase(s.find_last_not_of(' ') + 1);
      return s;
    };
    os << trim(top) << "\n" << mid << "\n" << trim(bot) << "\n";
  }
  return os.str();
}

ParsedDream parse_dream(const std::string& text, const EngineOptions& opts) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("dream ", 0) != 0) throw std::invalid_argument("not a rendered dream");
  std::map<std::string, std::vector<std::string>> kv;
  {
    std::istringstream hs(line.substr(6));
    std::string tok;
    while (hs >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("malformed dream header");
      kv[tok.substr(0, eq)].push_back(tok.substr(eq + 1));
    }
  }
  if (kv["ring"].size() != 1 || kv["lambda"].size() != 1 || kv["mu"].size() != 1 || kv["box"].size() != 2)
    throw std::invalid_argument("malformed dream header");
  auto box = [](const std::string& s) {
    auto x = s.find('x');
    if (x == std::string::npos) throw std::invalid_argument("malformed box '" + s + "'");
    return std::pair{std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
  };
  auto [a, b] = box(kv["box"][0]);
  auto [c, d] = box(kv["box"][1]);
  ParsedDream out{build_region(parse_partition(kv["lambda"][0], a, b), parse_partition(kv["mu"][0], c, d)),
                  parse_mode(kv["ring"][0]),
                  {}};
  const Region& r = out.region;
  std::getline(is, line);  // statistics line, recomputed below
  std::vector<std::vector<const Tile*>> g(r.a + r.b + 1, std::vector<const Tile*>(r.n + 2, nullptr));
  TileMode tm = uses_k_tiles(out.mode) ? TileMode::K : TileMode::H;
  while (std::getline(is, line)) {
    if (line.size() < 5 || (line[0] != 'L' && line[0] != 'U') || line[4] != '|') continue;
    int y = std::stoi(line.substr(1, 3));
    if (y < 1 || y > r.a + r.b) throw std::invalid_argument("row out of range");
    Half h = y <= r.b ? Half::Lower : Half::Upper;
    for (int x = 1; x <= r.n; ++x) {
      std::size_t start = 5 + static_cast<std::size_t>(x - 1) * (kCellWidth + 1);
      if (start + kCellWidth > line.size()) break;
      std::istringstream cs(line.substr(start, kCellWidth));
      std::string w, code, e;
      if (!(cs >> w >> code >> e)) continue;
      Tile t = parse_tile(code);
      const Tile* found = nullptr;
      for (const auto& ct : catalog(h, tm, opts.crossings).tiles())
        if (ct.code() == t.code()) found = &ct;
      if (!found) throw std::invalid_argument("tile " + code + " not legal here");
      g[y][x] = found;
    }
  }
  // Rebuild the dream in scan order.
  PipeDream& p = out.dream;
  for (int y = 1; y <= r.a + r.b; ++y) {
    if (r.is_lower_row(y)) {
      for (int x = r.first_col(y); x <= r.last_col(y); ++x) p.cells.push_back({x, y, g[y][x]});
    } else {
      for (int x = r.last_col(y); x >= 1; --x) p.cells.push_back({x, y, g[y][x]});
    }
  }
  for (const auto& cell : p.cells) {
    if (!cell.tile) throw std::invalid_argument("rendered dream is missing a cell");
    p.E += cell.tile->is_equivariant();
    p.F += cell.tile->is_weighted_fusor();
    p.zone_fusors += cell.tile->is_fusor() && r.eq_allowed(cell.col, cell.row);
    p.fusing += cell.tile->fusing_letters();
  }
  int top = r.a + r.b;
  if (top == 0)
    p.north = r.south;
  else
    for (int x = 1; x <= r.n; ++x) p.north += g[top][x]->north;
  if (!is_bit_string(p.north)) throw std::invalid_argument("rendered dream has non 0/1 north labels");
  p.nu = partition_of(p.north);
  try {
    verify_dream(r, p, out.mode, opts);
  } catch (const InvariantViolation& e) {
    throw std::invalid_argument(std::string("rendered dream is not a legal tiling: ") + e.what());
  }
  return out;
}

}  // namespace dsring
