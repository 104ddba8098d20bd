#pragma once

#include <string>
#include <vector>

#include "partitions.hpp"

namespace dsring {

// The staircase region for a product of lambda (a x b) and mu (c x d).
// Rows are counted from the bottom, columns from the west. Rows 1..b form the
// lower half, rows b+1..b+a the upper half.
struct Region {
  BoxedPartition lambda, mu;
  int a = 0, b = 0, c = 0, d = 0;
  int n = 0;      // b + d + c + a
  int width = 0;  // b + d + c

  std::string south;             // labels below row 1, columns b+1..width
  std::vector<char> lower_east;  // index y-1, east edge of lower row y
  std::vector<char> upper_west;  // index k-1, west edge of upper row k
  std::vector<char> stair_south; // index k-1, south edge of the last cell of upper row k
  int qstar = 0;

  int row_count() const { return a + b; }
  bool is_lower_row(int y) const { return y <= b; }
  int first_col(int y) const { return y <= b ? b - y + 1 : 1; }
  int last_col(int y) const { return y <= b ? width : width + (y - b); }
  bool contains(int x, int y) const { return y >= 1 && y <= a + b && x >= first_col(y) && x <= last_col(y); }
  bool eq_allowed(int x, int y) const;
  int cell_count() const;

  std::string render() const;
};

Region build_region(const BoxedPartition& lambda, const BoxedPartition& mu);

}  // namespace dsring
