#include "region.hpp"

#include <sstream>

namespace dsring {

Region build_region(const BoxedPartition& lambda, const BoxedPartition& mu) {
  Region r;
  r.lambda = lambda;
  r.mu = mu;
  r.a = lambda.rows;
  r.b = lambda.cols;
  r.c = mu.rows;
  r.d = mu.cols;
  r.n = r.a + r.b + r.c + r.d;
  r.width = r.b + r.d + r.c;
  r.south = bits_of(mu);
  std::string lb = bits_of(lambda);
  for (int y = 0; y < r.b; ++y) r.lower_east.push_back(lb[y] == '0' ? 'R' : '0');
  // lambda2 is read top to bottom, so row k takes letter a-k of it.
  std::string l2 = lb.substr(r.b);
  for (int k = 1; k <= r.a; ++k) r.upper_west.push_back(l2[r.a - k] == '0' ? 'R' : 'Q');
  for (char ch : l2) r.qstar += ch == '1';
  for (int k = 1; k <= r.a; ++k) r.stair_south.push_back(k <= r.qstar ? 'Q' : '0');
  return r;
}

bool Region::eq_allowed(int x, int y) const {
  if (y <= b) return x >= b + d + 1 && x <= b + d + c;
  return x >= 1 && x <= b + d;
}

int Region::cell_count() const {
  int s = 0;
  for (int y = 1; y <= a + b; ++y) s += last_col(y) - first_col(y) + 1;
  return s;
}

std::string Region::render() const {
  std::ostringstream os;
  os << "region lambda=(" << lambda.parts_text() << ") in " << lambda.box_text() << ", mu=(" << mu.parts_text()
     << ") in " << mu.box_text() << ", n=" << n << "\n";
  for (int y = a + b; y >= 1; --y) {
    os << (y <= b ? "L" : "U") << y << " ";
    for (int x = 1; x <= n; ++x) {
      if (!contains(x, y)) {
        os << "   ";
        continue;
      }
      os << (eq_allowed(x, y) ? "[*]" : "[ ]");
    }
    if (y <= b)
      os << "  west 0, east " << lower_east[y - 1] << ", first cell south R";
    else
      os << "  west " << upper_west[y - b - 1] << ", east 1, stair south " << stair_south[y - b - 1];
    os << "\n";
  }
  os << "S  ";
  for (int x = 1; x <= n; ++x) {
    if (x > b && x <= width)
      os << " " << south[x - b - 1] << " ";
    else
      os << "   ";
  }
  os << "\n";
  return os.str();
}

}  // namespace dsring
