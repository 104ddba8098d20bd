#include "selftest.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "enumerate.hpp"
#include "juggling.hpp"
#include "oracle.hpp"
#include "ring.hpp"

namespace dsring {

namespace {

using Terms = std::map<std::string, Coeff>;

Terms by_bits(const Expansion& e) {
  Terms t;
  for (const auto& [nu, c] : e.terms) t.emplace(bits_of(nu), c);
  return t;
}

Coeff q_poly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  Coeff c(Base::Q);
  for (auto [e, v] : terms) c += Coeff::monomial(Base::Q, e, v);
  return c;
}

Coeff t_mono(int e) { return Coeff::monomial(Base::T, e, 1); }

std::string show(const Terms& t) {
  std::string s;
  for (const auto& [bits, c] : t) s += (s.empty() ? "" : ", ") + bits + ": " + c.to_text();
  return "{" + s + "}";
}

template <class F>
void sweep_pairs(int maxv, F f) {
  for (int a = 0; a <= maxv; ++a)
    for (int b = 0; b <= maxv; ++b)
      for (int c = 0; c <= maxv; ++c)
        for (int d = 0; d <= maxv; ++d)
          for (const auto& l : partitions_in(a, b))
            for (const auto& m : partitions_in(c, d)) f(l, m);
}

}  // namespace

SelftestResult run_selftest() {
  SelftestResult res;
  std::ostringstream os;
  auto check = [&](const std::string& name, const std::function<std::string()>& body) {
    std::string err;
    try {
      err = body();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    if (err.empty()) {
      ++res.passed;
      os << "ok    " << name << "\n";
    } else {
      ++res.failed;
      os << "FAIL  " << name << ": " << err << "\n";
    }
  };

  const BoxedPartition lam({1, 1}, 2, 2), mu({1, 0}, 2, 1);

  check("worked example, H", [&] {
    auto e = expand(lam, mu, Mode::H);
    Terms want{{"0101011", Coeff::integer(1)}, {"0011101", Coeff::integer(1)}};
    if (e.dream_count != 2) return "expected 2 dreams, got " + std::to_string(e.dream_count);
    return by_bits(e) == want ? std::string() : "got " + show(by_bits(e));
  });
  // Expected values below come from equivariant localization on Gr(4,7).
  check("worked example, HS (localization values)", [&] {
    auto e = expand(lam, mu, Mode::HS);
    Terms want{{"0011101", Coeff(Base::T, 1)}, {"0101011", Coeff(Base::T, 1)}, {"0101101", t_mono(1)},
               {"0110011", t_mono(1)},         {"0110101", t_mono(2)}};
    return by_bits(e) == want ? std::string() : "got " + show(by_bits(e));
  });
  check("worked example, KS (localization values)", [&] {
    auto e = expand(lam, mu, Mode::KS);
    Terms want{{"0011011", q_poly({{1, -1}})},         {"0011101", q_poly({{1, 1}})},
               {"0101011", q_poly({{2, 1}})},          {"0101101", q_poly({{1, 1}, {2, -1}})},
               {"0110011", q_poly({{1, 1}, {2, -1}})}, {"0110101", q_poly({{0, 1}, {1, -2}, {2, 1}})}};
    return by_bits(e) == want ? std::string() : "got " + show(by_bits(e));
  });
  check("worked example, factors swapped", [&] {
    for (Mode m : {Mode::H, Mode::HS, Mode::KS})
      if (by_bits(expand(lam, mu, m)) != by_bits(expand(mu, lam, m)))
        return std::string("ring ") + mode_name(m) + " differs";
    return std::string();
  });
  check("q = 1 and t = 0 specializations of the worked example", [&] {
    auto ks = specialize(from_expansion(expand(lam, mu, Mode::KS)), Specialization::KsQ1);
    auto k = from_expansion(expand(lam, mu, Mode::K));
    auto hs = specialize(from_expansion(expand(lam, mu, Mode::HS)), Specialization::HsT0);
    auto h = from_expansion(expand(lam, mu, Mode::H));
    if (!(ks == k)) return std::string("KS at q = 1 differs from K");
    if (!(hs == h)) return std::string("HS at t = 0 differs from H");
    return std::string();
  });
  check("LR agreement, boxes up to 1x1", [&] {
    std::string err;
    sweep_pairs(1, [&](const BoxedPartition& l, const BoxedPartition& m) {
      auto e = expand(l, m, Mode::H);
      for (const auto& [nu, c] : e.terms)
        if (c.at(0) != lr_coefficient(l.parts, m.parts, nu.parts)) err = "mismatch at " + bits_of(nu);
    });
    return err;
  });
  check("commutativity, boxes up to 1x1", [&] {
    std::string err;
    sweep_pairs(1, [&](const BoxedPartition& l, const BoxedPartition& m) {
      for (Mode md : {Mode::H, Mode::HS, Mode::KS})
        if (by_bits(expand(l, m, md)) != by_bits(expand(m, l, md))) err = bits_of(l) + " x " + bits_of(m);
    });
    return err;
  });
  check("fusing identity, boxes up to 1x1", [&] {
    std::string err;
    sweep_pairs(1, [&](const BoxedPartition& l, const BoxedPartition& m) {
      for (const auto& p : enumerate_dreams(build_region(l, m), Mode::KS))
        if (p.fusing != l.size() + m.size() - p.nu.size() + p.E) err = bits_of(l) + " x " + bits_of(m);
    });
    return err;
  });
  check("duality is an involution, n <= 4", [&] {
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        std::string s = std::string(n - k, '0') + std::string(k, '1');
        do {
          auto j = schubert_pattern(s);
          if (!(dual(dual(j)) == j)) return "failed for " + s;
          if (j.ball_number() != k || dual(j).ball_number() != n - k) return "ball number for " + s;
        } while (std::next_permutation(s.begin(), s.end()));
      }
    return std::string();
  });
  check("H catalog has 17 lower tiles", [&] {
    auto n = catalog(Half::Lower, TileMode::H).tiles().size();
    return n == 17 ? std::string() : "got " + std::to_string(n);
  });

  os << "reference: the printed HS expansion of the worked example has 3 dreams, "
     << expand(lam, mu, Mode::HS).dream_count << " are enumerated here\n";
  os << "reference: the printed KS expansion of the worked example has 5 dreams, "
     << expand(lam, mu, Mode::KS).dream_count << " are enumerated here\n";
  os << res.passed << " passed, " << res.failed << " failed\n";
  res.report = os.str();
  return res;
}

}  // namespace dsring
