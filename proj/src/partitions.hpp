#pragma once

#include <compare>
#include <string>
#include <vector>

namespace dsring {

// A partition inside an a x b box (a rows, b columns). parts always has
// exactly a entries, padded with zeros.
struct BoxedPartition {
  std::vector<int> parts;
  int rows = 0;
  int cols = 0;

  BoxedPartition() = default;
  // Validates and pads; throws std::invalid_argument.
  BoxedPartition(std::vector<int> parts, int rows, int cols);

  int size() const;
  std::string bits() const;
  std::string parts_text() const;  // "1,1" style, trailing zeros dropped
  std::string box_text() const;    // "2x2"

  auto operator<=>(const BoxedPartition&) const = default;
};

// Positions of the 1s (1-indexed) are b + i - parts[i].
std::string bits_of(const BoxedPartition& p);
// Walk from the NE corner of the box to the SW corner along the boundary.
std::string bits_by_walk(const BoxedPartition& p);
BoxedPartition partition_of(const std::string& bits);
long inversions(const std::string& bits);

// Parse "1,1" (empty string is the empty partition) and pad to the box.
BoxedPartition parse_partition(const std::string& text, int rows, int cols);

// All partitions in an a x b box, in bit-string order.
std::vector<BoxedPartition> partitions_in(int rows, int cols);

bool is_bit_string(const std::string& s);

}  // namespace dsring
