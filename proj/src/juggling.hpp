#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partitions.hpp"

namespace dsring {

struct InvalidPattern : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonViableSlice : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bounded juggling pattern of period n, stored by its window J(1..n).
class JugglingPattern {
 public:
  JugglingPattern() = default;
  explicit JugglingPattern(std::vector<long> window);  // validates

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<long>& window() const { return window_; }
  long operator()(long i) const;
  long inverse(long m) const;
  int ball_number() const;

  bool operator==(const JugglingPattern&) const = default;

 private:
  std::vector<long> window_;
};

JugglingPattern pattern_from_window(const std::vector<long>& w);
JugglingPattern dual(const JugglingPattern& j);
JugglingPattern rotate(const JugglingPattern& j, long m);

struct RankData {
  int n = 0, k = 0;
  std::vector<std::vector<int>> r;  // r[i][j] for 1 <= i <= j <= n
  std::vector<std::pair<int, int>> essential;
};
int rank_bound(const JugglingPattern& j, int i, int jj);
RankData rank_and_essential(const JugglingPattern& j);

bool is_sorted(const JugglingPattern& j, int i);

// Complete West-triangle dots (row -> column, both in 1..n) to a bounded
// juggling pattern whose East triangle runs NW/SE.
JugglingPattern complete_west(const std::map<int, int>& dots, int n);

JugglingPattern schubert_pattern(const std::string& bits);

// An i-slice: labels below row i (columns max(i,1)..n), on the East side of
// rows 1..i, and below the diagonal squares of rows 1..i-1.
struct Slice {
  int level = 0;
  int n = 0;
  std::string south;
  std::string east;
  std::string diag;

  bool operator==(const Slice&) const = default;
  std::string to_text() const;
};

Slice zero_slice(const std::string& bits);
JugglingPattern slice_to_pattern(const Slice& s);
// Every slice at level i, over the given letters, mapping to j. Exhaustive.
std::vector<Slice> pattern_to_slices(const JugglingPattern& j, int level, const std::string& letters = "01RQ");

// Direct-sum patterns for lambda (a x b) and mu (c x d), built from a generic
// point of the direct sum of the two Schubert varieties.
JugglingPattern sigma(const BoxedPartition& lambda, const BoxedPartition& mu);
JugglingPattern sigma_prime(const BoxedPartition& lambda, const BoxedPartition& mu);

std::string render_pattern(const JugglingPattern& j);

}  // namespace dsring
