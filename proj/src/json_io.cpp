#include "json_io.hpp"

#include <algorithm>

namespace dsring {

using nlohmann::json;

json coeff_to_json(const Coeff& c) {
  if (c.base() == Base::Z) return c.at(0);
  json terms = json::array();
  for (auto [e, v] : c.terms()) terms.push_back({e, v});
  return {{"var", base_var(c.base())}, {"terms", terms}};
}

Coeff coeff_from_json(const json& j, Base expected) {
  if (j.is_number_integer()) return Coeff(expected, j.get<std::int64_t>());
  if (j.is_string()) return Coeff(expected, std::stoll(j.get<std::string>()));
  std::string var = j.at("var").get<std::string>();
  Base b = var == "t" ? Base::T : var == "q" ? Base::Q : throw std::invalid_argument("unknown variable " + var);
  if (b != expected) throw std::invalid_argument("coefficient is over the wrong ring");
  Coeff c(b);
  for (const auto& t : j.at("terms")) c += Coeff::monomial(b, t.at(0).get<int>(), t.at(1).get<std::int64_t>());
  return c;
}

json partition_to_json(const BoxedPartition& p) { return {{"parts", p.parts}, {"box", {p.rows, p.cols}}}; }

BoxedPartition partition_from_json(const json& j) {
  return BoxedPartition(j.at("parts").get<std::vector<int>>(), j.at("box").at(0).get<int>(),
                        j.at("box").at(1).get<int>());
}

json dream_to_json(const PipeDream& p) {
  json cells = json::array();
  for (const auto& c : p.cells) cells.push_back({{"col", c.col}, {"row", c.row}, {"tile", c.tile->code()}});
  return {{"cells", cells},
          {"nu", partition_to_json(p.nu)},
          {"north", p.north},
          {"E", p.E},
          {"F", p.F},
          {"fusing", p.fusing}};
}

json expansion_to_json(const Expansion& e) {
  json terms = json::array();
  for (const auto& [nu, c] : e.sorted_terms()) terms.push_back({{"nu", partition_to_json(nu)}, {"coeff", coeff_to_json(c)}});
  return {{"ring", mode_name(e.mode)},
          {"lambda", partition_to_json(e.lambda)},
          {"mu", partition_to_json(e.mu)},
          {"terms", terms}};
}

json ring_to_json(const RingElement& x) {
  std::vector<std::pair<BoxedPartition, Coeff>> v(x.terms.begin(), x.terms.end());
  std::sort(v.begin(), v.end(), [](const auto& s, const auto& t) {
    return std::tuple(s.first.rows, s.first.cols, bits_of(s.first)) <
           std::tuple(t.first.rows, t.first.cols, bits_of(t.first));
  });
  json terms = json::array();
  for (const auto& [nu, c] : v) terms.push_back({{"nu", partition_to_json(nu)}, {"coeff", coeff_to_json(c)}});
  return {{"ring", mode_name(x.mode)}, {"terms", terms}};
}

json pattern_to_json(const JugglingPattern& j) {
  return {{"n", j.n()}, {"ball_number", j.ball_number()}, {"window", j.window()}};
}

}  // namespace dsring
