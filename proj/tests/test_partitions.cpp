#include <doctest.h>

#include <stdexcept>

#include "partitions.hpp"

using namespace dsring;

TEST_CASE("bit strings of small partitions") {
  CHECK(bits_of(BoxedPartition({}, 2, 2)) == "0011");
  CHECK(bits_of(BoxedPartition({1, 1}, 2, 2)) == "0110");
  CHECK(bits_of(BoxedPartition({1, 0}, 2, 1)) == "101");
  CHECK(BoxedPartition({2, 1}, 2, 2).bits() == "1010");
}

TEST_CASE("partitions from bit strings") {
  CHECK(partition_of("0101011") == BoxedPartition({2, 1, 0, 0}, 4, 3));
  CHECK(partition_of("0011101") == BoxedPartition({1, 1, 1, 0}, 4, 3));
  CHECK(partition_of("0011") == BoxedPartition({}, 2, 2));
  CHECK(partition_of("") == BoxedPartition({}, 0, 0));
  CHECK(partition_of("000") == BoxedPartition({}, 0, 3));
  CHECK(partition_of("11") == BoxedPartition({0, 0}, 2, 0));
  CHECK_THROWS_AS(partition_of("012"), std::invalid_argument);
}

TEST_CASE("inversions") {
  CHECK(inversions("0011") == 0);
  CHECK(inversions("1100") == 4);
  CHECK(inversions("0110") == 2);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(BoxedPartition({3}, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(BoxedPartition({1, 2}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(BoxedPartition({1, 1, 1}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(BoxedPartition({-1}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(BoxedPartition({}, -1, 1), std::invalid_argument);
  CHECK(BoxedPartition({1, 0, 0}, 2, 1) == BoxedPartition({1}, 2, 1));
}

TEST_CASE("parsing") {
  CHECK(parse_partition("1,1", 2, 2) == BoxedPartition({1, 1}, 2, 2));
  CHECK(parse_partition("", 2, 2) == BoxedPartition({}, 2, 2));
  CHECK(parse_partition("(2, 1)", 3, 2) == BoxedPartition({2, 1}, 3, 2));
  CHECK_THROWS_AS(parse_partition("1,x", 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,,1", 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("3", 2, 2), std::invalid_argument);
}

TEST_CASE("text forms") {
  BoxedPartition p({1, 1, 0}, 3, 2);
  CHECK(p.parts_text() == "1,1");
  CHECK(p.box_text() == "3x2");
  CHECK(BoxedPartition({}, 1, 1).parts_text() == "");
}

TEST_CASE("zero-sized boxes") {
  CHECK(bits_of(BoxedPartition({}, 0, 1)) == "0");
  CHECK(bits_of(BoxedPartition({0}, 1, 0)) == "1");
  CHECK(partitions_in(0, 0).size() == 1);
  CHECK(partitions_in(3, 0).size() == 1);
}

TEST_CASE("exhaustive properties for boxes up to 6x6") {
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      auto all = partitions_in(a, b);
      long binom = 1;
      for (int i = 1; i <= a; ++i) binom = binom * (b + i) / i;
      CHECK(static_cast<long>(all.size()) == binom);
      for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& p = all[i];
        auto bits = bits_of(p);
        CHECK(partition_of(bits) == p);
        CHECK(inversions(bits) == p.size());
        CHECK(bits_by_walk(p) == bits);
        if (i) CHECK(bits_of(all[i - 1]) < bits);
      }
    }
  }
}
