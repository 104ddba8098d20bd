#include "partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dsring {

BoxedPartition::BoxedPartition(std::vector<int> p, int a, int b) : rows(a), cols(b) {
  if (a < 0 || b < 0) throw std::invalid_argument("box dimensions must be nonnegative");
  while (static_cast<int>(p.size()) > a && p.back() == 0) p.pop_back();
  if (static_cast<int>(p.size()) > a)
    throw std::invalid_argument("partition has more nonzero parts than the box has rows");
  p.resize(a, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) throw std::invalid_argument("negative part");
    if (p[i] > b) throw std::invalid_argument("part exceeds the box width");
    if (i > 0 && p[i] > p[i - 1]) throw std::invalid_argument("parts are not weakly decreasing");
  }
  parts = std::move(p);
}

int BoxedPartition::size() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

std::string BoxedPartition::bits() const { return bits_of(*this); }

std::string BoxedPartition::parts_text() const {
  std::ostringstream os;
  bool first = true;
  for (int x : parts) {
    if (x == 0) break;
    if (!first) os << ",";
    os << x;
    first = false;
  }
  return os.str();
}

std::string BoxedPartition::box_text() const { return std::to_string(rows) + "x" + std::to_string(cols); }

std::string bits_of(const BoxedPartition& p) {
  std::string s(p.rows + p.cols, '0');
  for (int i = 1; i <= p.rows; ++i) s[p.cols + i - p.parts[i - 1] - 1] = '1';
  return s;
}

std::string bits_by_walk(const BoxedPartition& p) {
  // Start at the NE corner (row 0, column b) and walk to the SW corner (row a,
  // column 0), keeping the shape to the NW. A step west is a horizontal edge.
  std::string s;
  int row = 0, col = p.cols;
  while (row < p.rows || col > 0) {
    int here = row < p.rows ? p.parts[row] : 0;
    if (row < p.rows && here >= col) {
      s += '1';
      ++row;
    } else {
      s += '0';
      --col;
    }
  }
  return s;
}

BoxedPartition partition_of(const std::string& bits) {
  if (!is_bit_string(bits)) throw std::invalid_argument("bit string must contain only 0 and 1");
  int a = static_cast<int>(std::count(bits.begin(), bits.end(), '1'));
  int b = static_cast<int>(bits.size()) - a;
  std::vector<int> parts;
  int i = 0;
  for (std::size_t pos = 0; pos < bits.size(); ++pos)
    if (bits[pos] == '1') {
      ++i;
      parts.push_back(b + i - static_cast<int>(pos + 1));
    }
  return BoxedPartition(parts, a, b);
}

long inversions(const std::string& bits) {
  long ones = 0, inv = 0;
  for (char ch : bits) {
    if (ch == '1')
      ++ones;
    else
      inv += ones;
  }
  return inv;
}

BoxedPartition parse_partition(const std::string& text, int rows, int cols) {
  std::vector<int> parts;
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' ' || c == '(' || c == ')'; }), t.end());
  if (!t.empty() && t != "0" && t != "-") {
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed partition '" + text + "'");
      if (item.size() > 6) throw std::invalid_argument("part too large in '" + text + "'");
      parts.push_back(std::stoi(item));
    }
  }
  return BoxedPartition(parts, rows, cols);
}

std::vector<BoxedPartition> partitions_in(int rows, int cols) {
  std::vector<BoxedPartition> out;
  std::string s = std::string(cols, '0') + std::string(rows, '1');
  do {
    out.push_back(partition_of(s));
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

bool is_bit_string(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

}  // namespace dsring
