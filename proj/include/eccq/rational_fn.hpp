// rational_fn.hpp: quotients of Laurent polynomials kept in a canonical
// reduced form, so that structural equality is mathematical equality.

#pragma once

#include "eccq/laurent.hpp"

#include <stdexcept>
#include <string>

namespace eccq {

// Canonical form: gcd(num, den) is a unit, den has minimal exponent 0 and
// constant coefficient 1. The zero function is 0/1.
class RationalFn {
public:
  RationalFn() : den_(Laurent::one()) {}
  RationalFn(const Laurent& p) : num_(p), den_(Laurent::one()) {}

  RationalFn(const Laurent& num, const Laurent& den) {
    if (den.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    if (num.is_zero()) {
      den_ = Laurent::one();
      return;
    }
    Laurent g = laurent_gcd(num, den);
    num_ = num.divide_exact(g);
    den_ = den.divide_exact(g);
    const int k = den_.min_exp();
    num_ = num_.shifted(-k);
    den_ = den_.shifted(-k);
    const Rational c = den_.coeff(0);
    num_ = num_.scaled(Rational(1) / c);
    den_ = den_.scaled(Rational(1) / c);
  }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == Laurent::one(); }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("RationalFn: division by zero");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFn operator-() const {
    RationalFn r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  bool operator==(const RationalFn& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  // The polynomial value; throws when the denominator is not 1.
  // q -> q^k on numerator and denominator; canonical form is restored
  // by the constructor.
  RationalFn substituted(int k) const {
    return RationalFn(num_.substituted(k), den_.substituted(k));
  }

  Laurent as_polynomial() const {
    if (!is_polynomial())
      throw std::domain_error("RationalFn: not a Laurent polynomial: (" +
                              num_.str() + ") / (" + den_.str() + ")");
    return num_;
  }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

private:
  Laurent num_;
  Laurent den_;
};

} // namespace eccq
