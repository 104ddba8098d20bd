#pragma once

#include <string>

namespace dsring {

struct SelftestResult {
  std::string report;
  int passed = 0;
  int failed = 0;
};

SelftestResult run_selftest();

}  // namespace dsring
