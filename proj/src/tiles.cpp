#include "tiles.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <set>
#include <stdexcept>

namespace dsring {

namespace {

const std::array<const char*, 9> kLowerWords = {"1", "R", "Q", "RQ", "QR", "R1", "Q1", "RQ1", "QR1"};
const std::string kLetters = "01RQ";

bool is_letter(char c) { return kLetters.find(c) != std::string::npos; }

std::string params(const Tile& t) {
  std::string s = "(";
  switch (t.kind) {
    case Kind::Crossing: s += t.word + ";" + t.letter; break;
    case Kind::Dot: s += t.letter; break;
    case Kind::Fusor: s += t.word; break;
    case Kind::Displacer: s += t.word + ";" + t.letter; break;
  }
  return s + ")";
}

}  // namespace

bool legal_lower_word(const std::string& w) {
  std::set<char> seen;
  for (std::size_t i = 0; i < w.size(); ++i) {
    char c = w[i];
    if (c != '1' && c != 'R' && c != 'Q') return false;
    if (!seen.insert(c).second) return false;
    if (c == '1' && i + 1 != w.size()) return false;
  }
  return true;
}

std::string swap01(const std::string& w) {
  std::string r = w;
  for (char& c : r) {
    if (c == '0')
      c = '1';
    else if (c == '1')
      c = '0';
  }
  return r;
}

bool legal_upper_word(const std::string& w) { return legal_lower_word(swap01(w)); }

std::string Tile::code() const {
  static const char* names[] = {"CR", "DOT", "FU", "DI"};
  std::string s = half == Half::Upper ? "U" : "";
  return s + names[static_cast<int>(kind)] + params(*this);
}

bool Tile::is_equivariant() const { return kind == Kind::Dot && letter == '0'; }

bool Tile::is_strict() const { return west.size() >= 2 || east.size() >= 2; }

int Tile::fusing_letters() const { return kind == Kind::Fusor ? static_cast<int>(word.size()) - 1 : 0; }

bool Tile::is_weighted_fusor() const { return kind == Kind::Fusor && word.size() >= 2; }

Tile make_crossing(const std::string& v, char b) {
  Tile t;
  t.kind = Kind::Crossing;
  t.word = v;
  t.letter = b;
  t.west = t.east = v;
  t.north = t.south = b;
  return t;
}

Tile make_dot(char b) {
  Tile t;
  t.kind = Kind::Dot;
  t.letter = b;
  t.west = "0";
  t.north = '0';
  t.south = b;
  t.east = std::string(1, b);
  return t;
}

Tile make_fusor(const std::string& v) {
  Tile t;
  t.kind = Kind::Fusor;
  t.word = v;
  t.west = v;
  t.north = v.back();
  t.south = '0';
  t.east = "0";
  return t;
}

Tile make_displacer(const std::string& v, char c) {
  Tile t;
  t.kind = Kind::Displacer;
  t.word = v;
  t.letter = c;
  t.west = v;
  t.north = v.back();
  t.south = c;
  t.east = v + c;
  return t;
}

bool blocked_upper_crossing(const Tile& t) {
  return t.half == Half::Upper && t.kind == Kind::Crossing && t.word.back() == 'R' && t.letter == 'Q';
}

Tile tile_mirror(const Tile& t) {
  Tile m = t;
  m.half = t.half == Half::Lower ? Half::Upper : Half::Lower;
  m.west = swap01(t.east);
  m.east = swap01(t.west);
  m.north = swap01(std::string(1, t.north))[0];
  m.south = swap01(std::string(1, t.south))[0];
  return m;
}

static std::vector<Tile> lower_tiles(TileMode mode, CrossingRule rule) {
  std::vector<Tile> out;
  bool k = mode == TileMode::K;
  std::vector<std::string> vs = {"0"};
  for (const char* w : kLowerWords) vs.emplace_back(w);
  for (const auto& v : vs) {
    if (!k && v.size() > 1) continue;
    for (char b : kLetters) {
      if (v == std::string(1, b)) continue;
      if (v == "1" && b != '0') continue;
      if (v.size() > 1 && rule == CrossingRule::Strict && v.find(b) != std::string::npos) continue;
      out.push_back(make_crossing(v, b));
    }
  }
  for (char b : kLetters) out.push_back(make_dot(b));
  for (const char* w : kLowerWords) {
    std::string v = w;
    if (!k && v.size() > 1) continue;
    out.push_back(make_fusor(v));
  }
  if (k)
    for (const char* w : kLowerWords)
      for (char c : std::string("1RQ")) {
        std::string v = w;
        if (legal_lower_word(v + c)) out.push_back(make_displacer(v, c));
      }
  return out;
}

Catalog::Catalog(Half half, TileMode mode, CrossingRule rule) : half_(half), mode_(mode) {
  tiles_ = lower_tiles(mode, rule);
  if (half == Half::Upper) {
    for (auto& t : tiles_) t = tile_mirror(t);
    std::erase_if(tiles_, blocked_upper_crossing);
  }
  for (const auto& t : tiles_) {
    const std::string& side = half == Half::Lower ? t.west : t.east;
    index_[{side, t.south}].push_back(&t);
  }
  for (auto& [key, list] : index_)
    std::sort(list.begin(), list.end(), [](const Tile* x, const Tile* y) { return x->code() < y->code(); });
}

const std::vector<const Tile*>& Catalog::match(const std::string& side, char south) const {
  static const std::vector<const Tile*> empty;
  auto it = index_.find({side, south});
  return it == index_.end() ? empty : it->second;
}

std::vector<Tile> Catalog::match(const std::string& side, char south, bool eq_allowed) const {
  bool legal = half_ == Half::Lower ? (side == "0" || (!side.empty() && legal_lower_word(side)))
                                    : (side == "1" || (!side.empty() && legal_upper_word(side)));
  if (!legal) throw std::invalid_argument("illegal vertical label '" + side + "'");
  if (!is_letter(south)) throw std::invalid_argument(std::string("illegal horizontal label '") + south + "'");
  std::vector<Tile> out;
  for (const Tile* t : match(side, south))
    if (eq_allowed || !t->is_equivariant()) out.push_back(*t);
  return out;
}

const Catalog& catalog(Half half, TileMode mode, CrossingRule rule) {
  static std::once_flag once;
  static std::vector<Catalog>* all = nullptr;
  std::call_once(once, [] {
    all = new std::vector<Catalog>();
    all->reserve(8);
    for (int r = 0; r < 2; ++r)
      for (int h = 0; h < 2; ++h)
        for (int m = 0; m < 2; ++m)
          all->emplace_back(static_cast<Half>(h), static_cast<TileMode>(m), static_cast<CrossingRule>(r));
  });
  return (*all)[static_cast<int>(rule) * 4 + static_cast<int>(half) * 2 + static_cast<int>(mode)];
}

std::vector<Tile> match_lower(const std::string& west, char south, TileMode mode, bool eq_allowed,
                              CrossingRule rule) {
  return catalog(Half::Lower, mode, rule).match(west, south, eq_allowed);
}

std::vector<Tile> match_upper(const std::string& east, char south, TileMode mode, bool eq_allowed,
                              CrossingRule rule) {
  return catalog(Half::Upper, mode, rule).match(east, south, eq_allowed);
}

Tile parse_tile(const std::string& code) {
  std::string s = code;
  bool upper = false;
  if (!s.empty() && s[0] == 'U') {
    upper = true;
    s = s.substr(1);
  }
  auto open = s.find('('), close = s.rfind(')');
  if (open == std::string::npos || close != s.size() - 1) throw std::invalid_argument("malformed tile code '" + code + "'");
  std::string name = s.substr(0, open), inside = s.substr(open + 1, close - open - 1);
  std::string first = inside, second;
  if (auto semi = inside.find(';'); semi != std::string::npos) {
    first = inside.substr(0, semi);
    second = inside.substr(semi + 1);
  }
  auto one_letter = [&](const std::string& x) {
    if (x.size() != 1 || !is_letter(x[0])) throw std::invalid_argument("malformed tile code '" + code + "'");
    return x[0];
  };
  Tile t;
  if (name == "CR" && !second.empty())
    t = make_crossing(first, one_letter(second));
  else if (name == "DOT" && second.empty())
    t = make_dot(one_letter(first));
  else if (name == "FU" && second.empty() && !first.empty())
    t = make_fusor(first);
  else if (name == "DI" && !second.empty() && !first.empty())
    t = make_displacer(first, one_letter(second));
  else
    throw std::invalid_argument("unknown tile code '" + code + "'");
  // Only tiles of the loose K catalog are accepted.
  const auto& cat = catalog(Half::Lower, TileMode::K, CrossingRule::Loose).tiles();
  bool found = false;
  for (const auto& c : cat)
    if (c.code() == t.code()) found = true;
  if (!found) throw std::invalid_argument("tile code '" + code + "' is not in any catalog");
  return upper ? tile_mirror(t) : t;
}

CatalogCounts count_catalog(const Catalog& c) {
  CatalogCounts n;
  for (const auto& t : c.tiles()) {
    switch (t.kind) {
      case Kind::Crossing: ++n.crossings; break;
      case Kind::Dot: ++n.dots; break;
      case Kind::Fusor: ++n.fusors; break;
      case Kind::Displacer: ++n.displacers; break;
    }
  }
  return n;
}

}  // namespace dsring
