#include "coeffs.hpp"

#include <sstream>

namespace dsring {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

std::int64_t checked_neg(std::int64_t x) {
  std::int64_t r;
  if (__builtin_sub_overflow(std::int64_t{0}, x, &r)) throw OverflowError("integer overflow in negation");
  return r;
}

const char* base_var(Base b) {
  switch (b) {
    case Base::Z: return "";
    case Base::T: return "t";
    case Base::Q: return "q";
  }
  return "";
}

Coeff::Coeff(Base base, std::int64_t constant) : base_(base) { add_term(0, constant); }

Coeff Coeff::monomial(Base base, int exp, std::int64_t c) {
  Coeff r(base);
  r.check_exp(exp);
  r.add_term(exp, c);
  return r;
}

Coeff Coeff::one_minus_q() {
  Coeff r(Base::Q, 1);
  r.add_term(1, -1);
  return r;
}

void Coeff::check_exp(int exp) const {
  if (base_ == Base::Z && exp != 0) throw std::invalid_argument("integer coefficient with nonzero exponent");
  if (base_ == Base::T && exp < 0) throw std::invalid_argument("negative power of t");
}

void Coeff::add_term(int exp, std::int64_t c) {
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t Coeff::at(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

int Coeff::min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int Coeff::max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

static void require_same(const Coeff& x, const Coeff& y) {
  if (x.base() != y.base()) throw std::invalid_argument("coefficients from different base rings");
}

Coeff& Coeff::operator+=(const Coeff& o) {
  require_same(*this, o);
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  require_same(*this, o);
  for (auto [e, c] : o.terms_) add_term(e, checked_neg(c));
  return *this;
}

Coeff Coeff::operator-() const {
  Coeff r(base_);
  for (auto [e, c] : terms_) r.terms_.emplace(e, checked_neg(c));
  return r;
}

Coeff operator*(const Coeff& x, const Coeff& y) {
  require_same(x, y);
  Coeff r(x.base_);
  for (auto [e1, c1] : x.terms_)
    for (auto [e2, c2] : y.terms_) {
      int e;
      if (__builtin_add_overflow(e1, e2, &e)) throw OverflowError("exponent overflow");
      r.add_term(e, checked_mul(c1, c2));
    }
  return r;
}

Coeff Coeff::pow(unsigned e) const {
  Coeff r(base_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::int64_t Coeff::at_q_one() const {
  std::int64_t s = 0;
  for (auto [e, c] : terms_) s = checked_add(s, c);
  return s;
}

std::int64_t Coeff::at_t_zero() const { return at(0); }

Coeff Coeff::q_to_one_minus_t() const {
  if (base_ != Base::Q) throw std::invalid_argument("q_to_one_minus_t needs a Laurent polynomial in q");
  Coeff r(Base::T);
  for (auto [e, c] : terms_) {
    if (e < 0) throw std::invalid_argument("negative power of q has no polynomial image under q = 1 - t");
    // (1 - t)^e = sum_j binom(e, j) (-t)^j
    std::int64_t binom = 1;
    for (int j = 0; j <= e; ++j) {
      std::int64_t term = checked_mul(c, binom);
      r.add_term(j, j % 2 ? checked_neg(term) : term);
      binom = checked_mul(binom, e - j) / (j + 1);
    }
  }
  return r;
}

Coeff Coeff::rebase(Base to) const {
  Coeff r(to);
  for (auto [e, c] : terms_) {
    r.check_exp(e);
    r.terms_.emplace(e, c);
  }
  return r;
}

static std::string render(const Coeff& x, bool latex) {
  if (x.is_zero()) return "0";
  const char* v = base_var(x.base());
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : x.terms()) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << (latex ? "" : "*");
    os << v;
    if (e != 1) {
      if (latex)
        os << "^{" << e << "}";
      else
        os << "^" << e;
    }
  }
  return os.str();
}

std::string Coeff::to_text() const { return render(*this, false); }
std::string Coeff::to_latex() const { return render(*this, true); }

}  // namespace dsring
