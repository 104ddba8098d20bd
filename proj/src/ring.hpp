#pragma once

#include <map>
#include <string>

#include "enumerate.hpp"

namespace dsring {

// Formal linear combination of Schubert classes over all boxes.
struct RingElement {
  Mode mode = Mode::H;
  std::map<BoxedPartition, Coeff> terms;

  bool operator==(const RingElement&) const = default;
  void add(const BoxedPartition& p, const Coeff& c);
};

enum class Specialization { HsT0, KsQ1 };

RingElement schubert(const BoxedPartition& p, Mode mode);
RingElement from_expansion(const Expansion& e);
RingElement multiply(const RingElement& x, const RingElement& y, const EngineOptions& opts = {});
RingElement specialize(const RingElement& x, Specialization s);

std::string to_text(const RingElement& x);
std::string to_latex(const RingElement& x);

}  // namespace dsring
