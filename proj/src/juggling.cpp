#include "juggling.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace dsring {

namespace {

long floordiv(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

JugglingPattern::JugglingPattern(std::vector<long> w) : window_(std::move(w)) {
  long n = static_cast<long>(window_.size());
  std::set<long> residues;
  for (long i = 1; i <= n; ++i) {
    long v = window_[i - 1];
    if (v - i < 0 || v - i > n)
      throw InvalidPattern("J(" + std::to_string(i) + ") - " + std::to_string(i) + " is outside [0, n]");
    residues.insert(((v % n) + n) % n);
  }
  if (static_cast<long>(residues.size()) != n) throw InvalidPattern("window is not a bijection modulo n");
  long total = 0;
  for (long i = 1; i <= n; ++i) total += window_[i - 1] - i;
  if (n > 0 && total % n != 0) throw InvalidPattern("ball number is not an integer");
}

long JugglingPattern::operator()(long i) const {
  long n = this->n();
  long q = floordiv(i - 1, n);
  return window_[i - 1 - q * n] + q * n;
}

long JugglingPattern::inverse(long m) const {
  long n = this->n();
  for (long i = 1; i <= n; ++i) {
    long v = window_[i - 1];
    if (((m - v) % n + n) % n == 0) return i + (m - v) / n * n;
  }
  throw InvalidPattern("value not hit");
}

int JugglingPattern::ball_number() const {
  if (window_.empty()) return 0;
  long total = 0;
  for (int i = 1; i <= n(); ++i) total += window_[i - 1] - i;
  return static_cast<int>(total / n());
}

JugglingPattern pattern_from_window(const std::vector<long>& w) { return JugglingPattern(w); }

JugglingPattern dual(const JugglingPattern& j) {
  std::vector<long> w;
  for (long i = 1; i <= j.n(); ++i) w.push_back(j.inverse(i + j.n()));
  return JugglingPattern(w);
}

JugglingPattern rotate(const JugglingPattern& j, long m) {
  std::vector<long> w;
  for (long i = 1; i <= j.n(); ++i) w.push_back(j(i - m) + m);
  return JugglingPattern(w);
}

int rank_bound(const JugglingPattern& j, int i, int jj) {
  if (jj < i) return 0;
  int inside = 0;
  for (int x = i; x <= jj; ++x) inside += j(x) <= jj;
  return (jj - i + 1) - inside;
}

RankData rank_and_essential(const JugglingPattern& j) {
  RankData d;
  d.n = j.n();
  d.k = j.ball_number();
  d.r.assign(d.n + 2, std::vector<int>(d.n + 2, 0));
  for (int i = 1; i <= d.n; ++i)
    for (int jj = i; jj <= d.n; ++jj) d.r[i][jj] = rank_bound(j, i, jj);
  for (int i = 1; i <= d.n; ++i)
    for (int jj = i; jj <= d.n; ++jj) {
      int r = d.r[i][jj];
      if (r >= std::min(jj - i + 1, d.k)) continue;  // no condition at all
      bool implied = (i > 1 && d.r[i - 1][jj] <= r) || (jj < d.n && d.r[i][jj + 1] <= r) ||
                     (i < jj && d.r[i + 1][jj] + 1 <= r) || (i < jj && d.r[i][jj - 1] + 1 <= r);
      if (!implied) d.essential.emplace_back(i, jj);
    }
  return d;
}

bool is_sorted(const JugglingPattern& j, int i) {
  int n = j.n();
  std::vector<int> rows;
  for (int r = i + 1; r <= n; ++r)
    if (j(r) <= n) rows.push_back(r);
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (rows[t] != i + 1 + static_cast<int>(t)) return false;
    if (t > 0 && j(rows[t]) < j(rows[t - 1])) return false;
  }
  return true;
}

JugglingPattern complete_west(const std::map<int, int>& dots, int n) {
  std::vector<long> w(n, 0);
  std::set<int> cols;
  for (auto [r, c] : dots) {
    if (r < 1 || r > n || c < r || c > n) throw InvalidPattern("dot outside the West triangle");
    if (!cols.insert(c).second) throw InvalidPattern("two dots in one column");
    w[r - 1] = c;
  }
  std::vector<long> values;
  for (int c = 1; c <= n; ++c)
    if (!cols.count(c)) values.push_back(c + n);
  std::size_t t = 0;
  for (int r = 1; r <= n; ++r)
    if (!dots.count(r)) w[r - 1] = values[t++];
  return JugglingPattern(w);
}

JugglingPattern schubert_pattern(const std::string& bits) {
  if (!is_bit_string(bits)) throw std::invalid_argument("bit string must contain only 0 and 1");
  std::map<int, int> dots;
  int r = 0;
  for (std::size_t pos = 0; pos < bits.size(); ++pos)
    if (bits[pos] == '0') dots[++r] = static_cast<int>(pos + 1);
  return complete_west(dots, static_cast<int>(bits.size()));
}

std::string Slice::to_text() const {
  std::ostringstream os;
  os << "level=" << level << " south=" << south << " east=" << east << " diag=" << diag;
  return os.str();
}

Slice zero_slice(const std::string& bits) { return Slice{0, static_cast<int>(bits.size()), bits, "", ""}; }

JugglingPattern slice_to_pattern(const Slice& s) {
  int i = s.level, n = s.n, lo = std::max(i, 1);
  if (i < 0 || i > n || static_cast<int>(s.south.size()) != n - lo + 1 || static_cast<int>(s.east.size()) != i ||
      static_cast<int>(s.diag.size()) != std::max(i - 1, 0))
    throw std::invalid_argument("slice has the wrong number of labels");
  for (char c : s.south + s.east + s.diag)
    if (std::string("01RQ").find(c) == std::string::npos) throw std::invalid_argument("illegal slice label");
  std::map<int, int> dots;
  for (char letter : std::string("RQ1")) {
    // Vertical rays start at (column, highest row reached).
    std::vector<std::pair<int, int>> cols;
    for (int c = lo; c <= n; ++c)
      if (s.south[c - lo] == letter) cols.emplace_back(c, i);
    for (int r = 1; r < i; ++r)
      if (s.diag[r - 1] == letter) cols.emplace_back(r, r);
    std::sort(cols.begin(), cols.end());
    std::vector<int> rows;
    for (int r = 1; r <= i; ++r)
      if (s.east[r - 1] == letter) rows.push_back(r);
    if (letter != '1' && cols.size() != rows.size())
      throw NonViableSlice(std::string("unequal numbers of ") + letter + " rays");
    if (rows.size() > cols.size()) throw NonViableSlice("more vertical than horizontal 1 rays");
    cols.erase(cols.begin(), cols.begin() + static_cast<long>(cols.size() - rows.size()));
    for (auto [c, top] : cols)
      for (int r : rows)
        if (r > c || r > top) throw NonViableSlice(std::string(1, letter) + " rays do not all meet in the top half");
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (dots.count(rows[t])) throw NonViableSlice("two dots in one row");
      dots[rows[t]] = cols[t].first;
    }
  }
  int t = 0;
  for (int c = lo; c <= n; ++c)
    if (s.south[c - lo] == '0') {
      int r = i + ++t;
      if (r > c) throw NonViableSlice("a South 0 does not land in the bottom half");
      dots[r] = c;
    }
  std::set<int> used;
  for (auto [r, c] : dots)
    if (!used.insert(c).second) throw NonViableSlice("two dots in one column");
  try {
    return complete_west(dots, n);
  } catch (const InvalidPattern& e) {
    throw NonViableSlice(std::string("no bounded completion: ") + e.what());
  }
}

std::vector<Slice> pattern_to_slices(const JugglingPattern& j, int level, const std::string& letters) {
  int n = j.n(), lo = std::max(level, 1);
  // South 0s alone produce the dots below the slice, so their columns are forced.
  std::set<int> zero_cols;
  for (int r = level + 1; r <= n; ++r)
    if (j(r) <= n) zero_cols.insert(static_cast<int>(j(r)));
  std::string others;
  for (char c : letters)
    if (c != '0') others += c;
  std::vector<Slice> out;
  Slice s{level, n, std::string(n - lo + 1, '0'), std::string(level, '0'), std::string(std::max(level - 1, 0), '0')};
  std::vector<char*> free;
  for (int c = lo; c <= n; ++c)
    if (!zero_cols.count(c)) free.push_back(&s.south[c - lo]);
  std::vector<char*> any;
  for (auto& ch : s.east) any.push_back(&ch);
  for (auto& ch : s.diag) any.push_back(&ch);
  if (letters.find('0') == std::string::npos && !zero_cols.empty()) return out;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    std::size_t total = free.size() + any.size();
    if (k == total) {
      try {
        if (slice_to_pattern(s) == j) out.push_back(s);
      } catch (const NonViableSlice&) {
      }
      return;
    }
    const std::string& pool = k < free.size() ? others : letters;
    char* slot = k < free.size() ? free[k] : any[k - free.size()];
    for (char c : pool) {
      *slot = c;
      go(k + 1);
    }
  };
  go(0);
  return out;
}

namespace {

// Generic point of a Schubert variety: a set is independent iff every prefix
// holds no more columns than the bit string has 1s there.
struct SchubertBlock {
  std::string bits;
  std::vector<int> where;  // local position p (0-based) -> global column (1-based)
};

int block_rank(const SchubertBlock& blk, const std::set<int>& cols) {
  int len = static_cast<int>(blk.bits.size());
  std::vector<int> ones(len + 1, 0);
  for (int p = 0; p < len; ++p) ones[p + 1] = ones[p] + (blk.bits[p] == '1');
  std::vector<int> taken(len + 1, 0);
  int rank = 0;
  for (int p = len - 1; p >= 0; --p) {
    if (!cols.count(blk.where[p])) continue;
    bool ok = true;
    for (int q = p + 1; q <= len && ok; ++q)
      if (taken[q] + 1 > ones[q]) ok = false;
    if (!ok) continue;
    for (int q = p + 1; q <= len; ++q) ++taken[q];
    ++rank;
  }
  return rank;
}

JugglingPattern pattern_of_blocks(const std::vector<SchubertBlock>& blocks, int n) {
  auto rank = [&](const std::set<int>& cols) {
    int r = 0;
    for (const auto& b : blocks) r += block_rank(b, cols);
    return r;
  };
  std::vector<long> w;
  for (int i = 1; i <= n; ++i) {
    long ji = i + n;
    if (rank({i}) == 0) {
      ji = i;
    } else {
      std::set<int> span;
      for (int jj = i + 1; jj < i + n; ++jj) {
        span.insert((jj - 1) % n + 1);
        std::set<int> with = span;
        with.insert(i);
        if (rank(with) == rank(span)) {
          ji = jj;
          break;
        }
      }
    }
    w.push_back(ji);
  }
  return JugglingPattern(w);
}

std::vector<SchubertBlock> blocks_for(const BoxedPartition& lambda, const BoxedPartition& mu, bool primed) {
  int a = lambda.rows, b = lambda.cols, c = mu.rows, d = mu.cols, n = a + b + c + d;
  SchubertBlock l{bits_of(lambda), {}}, m{bits_of(mu), {}};
  // lambda's columns are [B | A] with B of width b and A of width a; both are
  // reversed in place. Primed: [A B 0 0 / 0 0 D C]; plain: [B 0 0 A / 0 D C 0].
  for (int p = 1; p <= b + a; ++p) {
    int col;
    if (p <= b)
      col = primed ? a + (b - p + 1) : b - p + 1;
    else
      col = primed ? a - (p - b) + 1 : n - (p - b) + 1;
    l.where.push_back(col);
  }
  for (int p = 1; p <= d + c; ++p) m.where.push_back(primed ? a + b + p : b + p);
  return {l, m};
}

}  // namespace

JugglingPattern sigma(const BoxedPartition& lambda, const BoxedPartition& mu) {
  int n = lambda.rows + lambda.cols + mu.rows + mu.cols;
  return pattern_of_blocks(blocks_for(lambda, mu, false), n);
}

JugglingPattern sigma_prime(const BoxedPartition& lambda, const BoxedPartition& mu) {
  int n = lambda.rows + lambda.cols + mu.rows + mu.cols;
  return pattern_of_blocks(blocks_for(lambda, mu, true), n);
}

std::string render_pattern(const JugglingPattern& j) {
  int n = j.n();
  std::ostringstream os;
  os << "n=" << n << " k=" << j.ball_number() << " window=";
  for (int i = 1; i <= n; ++i) os << (i > 1 ? "," : "") << j(i);
  os << "\n";
  for (int i = 1; i <= n; ++i) {
    std::string line;
    for (int c = 1; c <= 2 * n; ++c) {
      if (c == n + 1) line += '|';
      if (c < i || c > i + n)
        line += ' ';
      else
        line += j(i) == c ? '*' : '.';
    }
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
  }
  return os.str();
}

}  // namespace dsring
