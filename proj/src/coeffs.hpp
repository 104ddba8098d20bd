#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace dsring {

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);
std::int64_t checked_neg(std::int64_t x);

// Base ring of a coefficient: Z, Z[t], or Z[q, 1/q] where q stands for exp(t).
enum class Base { Z, T, Q };

// Sparse polynomial in one formal variable. For Base::Z only exponent 0 occurs,
// for Base::T exponents are nonnegative. Zero coefficients are never stored.
class Coeff {
 public:
  Coeff() = default;
  explicit Coeff(Base base) : base_(base) {}
  Coeff(Base base, std::int64_t constant);

  static Coeff integer(std::int64_t v) { return Coeff(Base::Z, v); }
  static Coeff monomial(Base base, int exp, std::int64_t c);
  static Coeff one_minus_q();

  Base base() const { return base_; }
  const std::map<int, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t at(int exp) const;
  int min_exp() const;
  int max_exp() const;

  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff operator-() const;
  friend Coeff operator+(Coeff x, const Coeff& y) { return x += y; }
  friend Coeff operator-(Coeff x, const Coeff& y) { return x -= y; }
  friend Coeff operator*(const Coeff& x, const Coeff& y);
  bool operator==(const Coeff& o) const = default;

  Coeff pow(unsigned e) const;

  // q -> 1, giving an integer.
  std::int64_t at_q_one() const;
  // q -> 1 - t, expanded exactly. Negative powers of q are rejected.
  Coeff q_to_one_minus_t() const;
  // t -> 0 (constant term of a Z[t] element).
  std::int64_t at_t_zero() const;
  // Reinterpret in another base; fails when an exponent is illegal there.
  Coeff rebase(Base to) const;

  std::string to_text() const;
  std::string to_latex() const;

 private:
  void add_term(int exp, std::int64_t c);
  void check_exp(int exp) const;

  Base base_ = Base::Z;
  std::map<int, std::int64_t> terms_;
};

const char* base_var(Base b);

}  // namespace dsring
