#include "ring.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace dsring {

void RingElement::add(const BoxedPartition& p, const Coeff& c) {
  auto [it, fresh] = terms.try_emplace(p, Coeff(c.base()));
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

RingElement schubert(const BoxedPartition& p, Mode mode) {
  RingElement r;
  r.mode = mode;
  r.terms.emplace(p, Coeff(mode_base(mode), 1));
  return r;
}

RingElement from_expansion(const Expansion& e) {
  RingElement r;
  r.mode = e.mode;
  r.terms = e.terms;
  return r;
}

RingElement multiply(const RingElement& x, const RingElement& y, const EngineOptions& opts) {
  if (x.mode != y.mode) throw std::invalid_argument("cannot multiply elements of different rings");
  RingElement r;
  r.mode = x.mode;
  for (const auto& [p, cp] : x.terms)
    for (const auto& [q, cq] : y.terms) {
      Expansion e = expand(p, q, x.mode, opts);
      Coeff scale = cp * cq;
      for (const auto& [nu, c] : e.terms) r.add(nu, scale * c);
    }
  return r;
}

RingElement specialize(const RingElement& x, Specialization s) {
  RingElement r;
  if (s == Specialization::HsT0) {
    if (x.mode != Mode::HS) throw std::invalid_argument("t = 0 specialization needs an HS element");
    r.mode = Mode::H;
    for (const auto& [p, c] : x.terms) r.add(p, Coeff::integer(c.at_t_zero()));
  } else {
    if (x.mode != Mode::KS) throw std::invalid_argument("q = 1 specialization needs a KS element");
    r.mode = Mode::K;
    for (const auto& [p, c] : x.terms) r.add(p, Coeff::integer(c.at_q_one()));
  }
  return r;
}

static std::vector<std::pair<BoxedPartition, Coeff>> ordered(const RingElement& x) {
  std::vector<std::pair<BoxedPartition, Coeff>> v(x.terms.begin(), x.terms.end());
  std::sort(v.begin(), v.end(), [](const auto& s, const auto& t) {
    auto ks = std::tuple(s.first.rows, s.first.cols, bits_of(s.first));
    auto kt = std::tuple(t.first.rows, t.first.cols, bits_of(t.first));
    return ks < kt;
  });
  return v;
}

static std::string parts_all(const BoxedPartition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.parts.size(); ++i) s += (i ? "," : "") + std::to_string(p.parts[i]);
  return s;
}

std::string to_text(const RingElement& x) {
  std::ostringstream os;
  if (x.terms.empty()) os << "0\n";
  for (const auto& [p, c] : ordered(x))
    os << c.to_text() << "  [" << bits_of(p) << "]  (" << parts_all(p) << ") in " << p.box_text() << "\n";
  return os.str();
}

std::string to_latex(const RingElement& x) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : ordered(x)) {
    std::string body = "[X^{(" + parts_all(p) + ")}]";
    bool single = c.terms().size() == 1;
    if (single && c.terms().begin()->first == 0) {
      std::int64_t v = c.terms().begin()->second;
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << "-";
      std::int64_t mag = v < 0 ? -v : v;
      if (mag != 1) os << mag;
      os << body;
    } else if (single) {
      std::string t = c.to_latex();
      bool neg = t[0] == '-';
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      os << (neg ? t.substr(1) : t) << " " << body;
    } else {
      if (!first) os << " + ";
      os << "(" << c.to_latex() << ") " << body;
    }
    first = false;
  }
  if (first) os << "0";
  os << "\n";
  return os.str();
}

}  // namespace dsring
