#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "enumerate.hpp"
#include "oracle.hpp"

using namespace dsring;

namespace {

const BoxedPartition kLam({1, 1}, 2, 2);
const BoxedPartition kMu({1, 0}, 2, 1);

Coeff q(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  Coeff c(Base::Q);
  for (auto [e, v] : terms) c += Coeff::monomial(Base::Q, e, v);
  return c;
}

Coeff t(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  Coeff c(Base::T);
  for (auto [e, v] : terms) c += Coeff::monomial(Base::T, e, v);
  return c;
}

std::map<std::string, Coeff> by_bits(const Expansion& e) {
  std::map<std::string, Coeff> out;
  for (const auto& [nu, c] : e.terms) out.emplace(bits_of(nu), c);
  return out;
}

std::multiset<std::string> norths(const std::vector<PipeDream>& ds) {
  std::multiset<std::string> out;
  for (const auto& d : ds) out.insert(d.north);
  return out;
}

}  // namespace

TEST_CASE("ring names") {
  CHECK(parse_mode("h") == Mode::H);
  CHECK(parse_mode("HS") == Mode::HS);
  CHECK(parse_mode("ks") == Mode::KS);
  CHECK(parse_mode("k") == Mode::K);
  CHECK_THROWS_AS(parse_mode("x"), std::invalid_argument);
  CHECK(std::string(mode_name(Mode::KS)) == "KS");
}

TEST_CASE("worked example in H: two dreams") {
  auto ds = enumerate_dreams(build_region(kLam, kMu), Mode::H);
  CHECK(ds.size() == 2);
  CHECK(norths(ds) == std::multiset<std::string>{"0011101", "0101011"});
  for (const auto& d : ds) {
    CHECK(d.E == 0);
    CHECK(d.F == 0);
    CHECK(d.fusing == 0);
  }
  auto e = expand(kLam, kMu, Mode::H);
  CHECK(by_bits(e) == std::map<std::string, Coeff>{{"0011101", Coeff::integer(1)}, {"0101011", Coeff::integer(1)}});
}

// Expected values below were computed by torus localization (tests/oracle/localization.py).
TEST_CASE("worked example in HS") {
  auto ds = enumerate_dreams(build_region(kLam, kMu), Mode::HS);
  CHECK(ds.size() == 5);
  auto e = expand(kLam, kMu, Mode::HS);
  CHECK(by_bits(e) == std::map<std::string, Coeff>{{"0011101", t({{0, 1}})},
                                                   {"0101011", t({{0, 1}})},
                                                   {"0101101", t({{1, 1}})},
                                                   {"0110011", t({{1, 1}})},
                                                   {"0110101", t({{2, 1}})}});
  auto eq = std::find_if(ds.begin(), ds.end(), [](const PipeDream& d) { return d.north == "0101101"; });
  REQUIRE(eq != ds.end());
  CHECK(eq->nu == BoxedPartition({2, 1, 1, 0}, 4, 3));
  CHECK(eq->E == 1);
  CHECK(eq->F == 0);
  CHECK(eq->fusing == 0);
}

TEST_CASE("worked example in KS") {
  auto ds = enumerate_dreams(build_region(kLam, kMu), Mode::KS);
  CHECK(ds.size() == 7);
  auto e = expand(kLam, kMu, Mode::KS);
  CHECK(by_bits(e) == std::map<std::string, Coeff>{{"0011011", q({{1, -1}})},
                                                   {"0011101", q({{1, 1}})},
                                                   {"0101011", q({{2, 1}})},
                                                   {"0101101", q({{1, 1}, {2, -1}})},
                                                   {"0110011", q({{1, 1}, {2, -1}})},
                                                   {"0110101", q({{0, 1}, {1, -2}, {2, 1}})}});
  auto k = std::find_if(ds.begin(), ds.end(), [](const PipeDream& d) { return d.north == "0011011"; });
  REQUIRE(k != ds.end());
  CHECK(k->nu == BoxedPartition({1, 1, 0, 0}, 4, 3));
  CHECK(k->E == 0);
  CHECK(k->F == 1);
  CHECK(k->fusing == 1);
}

TEST_CASE("swapped factors give the same expansion") {
  for (Mode m : {Mode::H, Mode::HS, Mode::KS, Mode::K})
    CHECK(expand(kLam, kMu, m).terms == expand(kMu, kLam, m).terms);
  CHECK(expand(kMu, kLam, Mode::KS).dream_count == 6);
}

TEST_CASE("dream weights") {
  PipeDream p;
  CHECK(dream_weight(p, Mode::H) == Coeff::integer(1));
  p.E = 1;
  CHECK(dream_weight(p, Mode::HS) == t({{1, 1}}));
  CHECK_THROWS_AS(dream_weight(p, Mode::H), std::invalid_argument);
  p.F = 1;
  p.fusing = 1;
  p.zone_fusors = 1;
  CHECK(dream_weight(p, Mode::KS) == -(Coeff::one_minus_q() * q({{1, 1}})));
  EngineOptions word;
  word.fusor_weight = FusorWeight::NonemptyWord;
  p.zone_fusors = 2;
  CHECK(dream_weight(p, Mode::KS) == -(Coeff::one_minus_q() * q({{2, 1}})));
  CHECK(dream_weight(p, Mode::KS, word) == -(Coeff::one_minus_q() * q({{1, 1}})));
  p.E = 0;
  CHECK(dream_weight(p, Mode::K) == Coeff::integer(-1));
}

TEST_CASE("every enumerated dream verifies and renders back") {
  auto r = build_region(kLam, kMu);
  for (Mode m : {Mode::H, Mode::HS, Mode::KS}) {
    for (const auto& d : enumerate_dreams(r, m)) {
      CHECK_NOTHROW(verify_dream(r, d, m));
      auto text = render_dream(r, d, m);
      auto back = parse_dream(text);
      CHECK(back.mode == m);
      CHECK(back.dream.codes() == d.codes());
      CHECK(back.dream.north == d.north);
      CHECK(back.dream.E == d.E);
      CHECK(back.dream.fusing == d.fusing);
      CHECK(render_dream(back.region, back.dream, back.mode) == text);
    }
  }
}

TEST_CASE("render has one tile code per cell") {
  auto r = build_region(kLam, kMu);
  auto d = enumerate_dreams(r, Mode::H).front();
  auto text = render_dream(r, d, Mode::H);
  CHECK(text.rfind("dream ring=H lambda=1,1 box=2x2 mu=1 box=2x1\n", 0) == 0);
  for (const auto& code : d.codes()) CHECK(text.find(code) != std::string::npos);
  std::size_t bars = std::count(text.begin(), text.end(), '|');
  CHECK(bars == static_cast<std::size_t>(4 * (7 + 1)));
}

TEST_CASE("tampered dreams are rejected") {
  auto r = build_region(kLam, kMu);
  auto d = enumerate_dreams(r, Mode::HS);
  auto eq = std::find_if(d.begin(), d.end(), [](const PipeDream& p) { return p.E > 0; });
  REQUIRE(eq != d.end());
  CHECK_THROWS_AS(verify_dream(r, *eq, Mode::H), InvariantViolation);
  auto broken = d.front();
  broken.cells.pop_back();
  CHECK_THROWS_AS(verify_dream(r, broken, Mode::HS), InvariantViolation);
  auto swapped = d.front();
  std::swap(swapped.cells[0].tile, swapped.cells[1].tile);
  CHECK_THROWS(verify_dream(r, swapped, Mode::HS));
  CHECK_THROWS_AS(parse_dream("not a dream"), std::invalid_argument);
}

TEST_CASE("empty boxes") {
  BoxedPartition e0({}, 0, 0);
  auto e = expand(e0, e0, Mode::KS);
  CHECK(e.dream_count == 1);
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms.begin()->first == e0);
  for (auto [a, b, c, d] : std::vector<std::array<int, 4>>{{0, 1, 1, 0}, {1, 0, 0, 1}, {2, 1, 1, 2}, {1, 1, 1, 1}}) {
    BoxedPartition x({}, a, b), y({}, c, d);
    for (Mode m : {Mode::H, Mode::HS, Mode::KS}) {
      auto ex = expand(x, y, m);
      CHECK(ex.dream_count == 1);
      REQUIRE(ex.terms.size() == 1);
      CHECK(ex.terms.begin()->first == BoxedPartition({}, a + c, b + d));
      CHECK(ex.terms.begin()->second == Coeff(mode_base(m), 1));
    }
  }
}

TEST_CASE("H agrees with the tableau rule for boxes up to 2x2") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d)
          for (const auto& lam : partitions_in(a, b))
            for (const auto& mu : partitions_in(c, d)) {
              auto e = expand(lam, mu, Mode::H);
              for (const auto& nu : partitions_in(a + c, b + d)) {
                auto it = e.terms.find(nu);
                std::int64_t got = it == e.terms.end() ? 0 : it->second.at(0);
                CHECK(got == lr_coefficient(strip(lam.parts), strip(mu.parts), strip(nu.parts)));
              }
            }
}

TEST_CASE("loose crossings admit an extra dream") {
  EngineOptions loose;
  loose.crossings = CrossingRule::Loose;
  BoxedPartition lam({1}, 1, 1), mu({1, 1}, 2, 1);
  auto strict = expand(lam, mu, Mode::KS);
  auto extra = expand(lam, mu, Mode::KS, loose);
  CHECK(extra.dream_count > strict.dream_count);
}
