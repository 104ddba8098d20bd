#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "coeffs.hpp"

namespace dsring {

Partition strip(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < 0 || (i > 0 && p[i] > p[i - 1])) throw std::invalid_argument("not a partition");
  return p;
}

std::int64_t lr_coefficient(const Partition& lambda_in, const Partition& mu_in, const Partition& nu_in) {
  Partition lambda = strip(lambda_in), mu = strip(mu_in), nu = strip(nu_in);
  auto sum = [](const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
  };
  if (sum(nu) != sum(lambda) + sum(mu)) return 0;
  if (lambda.size() > nu.size()) return 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] > nu[i]) return 0;
  std::size_t rows = nu.size();
  auto lam = [&](std::size_t r) { return r < lambda.size() ? lambda[r] : 0; };
  // Cells in reading order: rows top to bottom, each row right to left.
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < rows; ++r)
    for (int c = nu[r] - 1; c >= lam(r); --c) cells.emplace_back(static_cast<int>(r), c);
  std::vector<std::vector<int>> t(rows);
  for (std::size_t r = 0; r < rows; ++r) t[r].assign(nu[r], 0);
  std::vector<int> used(mu.size() + 1, 0);
  std::int64_t count = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      count = checked_add(count, 1);
      return;
    }
    auto [r, c] = cells[k];
    int hi = static_cast<int>(mu.size());
    if (c + 1 < nu[r]) hi = std::min(hi, t[r][c + 1]);
    int lo = 1;
    if (r > 0 && c >= lam(r - 1)) lo = t[r - 1][c] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (used[v] == mu[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      t[r][c] = v;
      ++used[v];
      fill(k + 1);
      --used[v];
    }
    t[r][c] = 0;
  };
  fill(0);
  return count;
}

std::map<Partition, std::int64_t> lr_expand(const Partition& lambda_in, const Partition& mu_in) {
  Partition lambda = strip(lambda_in), mu = strip(mu_in);
  int total = 0;
  for (int x : lambda) total += x;
  for (int x : mu) total += x;
  std::map<Partition, std::int64_t> out;
  // nu ranges over partitions of total containing lambda.
  std::function<void(Partition&, int, int)> gen = [&](Partition& p, int left, int maxpart) {
    if (left == 0) {
      if (auto c = lr_coefficient(lambda, mu, p)) out[p] = c;
      return;
    }
    for (int x = std::min(left, maxpart); x >= 1; --x) {
      p.push_back(x);
      gen(p, left - x, x);
      p.pop_back();
    }
  };
  Partition p;
  gen(p, total, total);
  if (total == 0) out[{}] = 1;
  return out;
}

namespace {

using Exponent = std::vector<int>;
using Poly = std::map<Exponent, std::int64_t>;

// Schur polynomial as a sum over semistandard tableaux.
Poly schur_poly(const Partition& lambda, int nvars) {
  Poly out;
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::vector<std::vector<int>> t(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) t[r].assign(lambda[r], 0);
  Exponent e(nvars, 0);
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      out[e] = checked_add(out[e], 1);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= nvars; ++v) {
      t[r][c] = v;
      ++e[v - 1];
      fill(k + 1);
      --e[v - 1];
    }
  };
  if (static_cast<int>(lambda.size()) <= nvars) fill(0);
  return out;
}

Poly mul(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) {
      Exponent e(ex.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
      auto& slot = out[e];
      slot = checked_add(slot, checked_mul(cx, cy));
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

std::map<Partition, std::int64_t> schur_product_bruteforce(const Partition& lambda_in, const Partition& mu_in,
                                                           int nvars) {
  Partition lambda = strip(lambda_in), mu = strip(mu_in);
  if (nvars < static_cast<int>(lambda.size() + mu.size()))
    throw std::invalid_argument("too few variables for a faithful Schur expansion");
  Poly f = mul(schur_poly(lambda, nvars), schur_poly(mu, nvars));
  std::map<Partition, std::int64_t> out;
  while (!f.empty()) {
    // The lexicographically largest exponent is a partition.
    auto [lead, c] = *f.rbegin();
    Partition nu = strip(lead);
    out[nu] = c;
    for (const auto& [e, v] : schur_poly(nu, nvars)) {
      auto& slot = f[e];
      slot = checked_add(slot, -checked_mul(c, v));
    }
    std::erase_if(f, [](const auto& kv) { return kv.second == 0; });
  }
  return out;
}

}  // namespace dsring
