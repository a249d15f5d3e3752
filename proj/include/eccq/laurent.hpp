// laurent.hpp: sparse Laurent polynomials in one variable q with exact
// rational coefficients. Supports ring arithmetic, exact division, gcd,
// a canonical text rendering and a parser for that rendering.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace eccq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Laurent {
public:
  // exponent -> coefficient, zero coefficients never stored
  using TermMap = std::map<int, Rational>;

  Laurent() = default;

  static Laurent monomial(const Rational& c, int e) {
    Laurent r;
    if (c != 0) r.terms_[e] = c;
    return r;
  }

  static Laurent constant(const Rational& c) { return monomial(c, 0); }
  static Laurent q_power(int e) { return monomial(1, e); }
  static Laurent one() { return constant(1); }

  // [m]_q = (q^m - q^-m) / (q - q^-1); [-m]_q = -[m]_q, [0]_q = 0
  static Laurent quantum_integer(int m) {
    Laurent r;
    int a = m < 0 ? -m : m;
    for (int k = 0; k < a; ++k) r.terms_[a - 1 - 2 * k] = m < 0 ? -1 : 1;
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  int min_exp() const {
    require_nonzero();
    return terms_.begin()->first;
  }
  int max_exp() const {
    require_nonzero();
    return terms_.rbegin()->first;
  }

  Rational coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool integer_coefficients() const {
    for (const auto& [e, c] : terms_)
      if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent scaled(const Rational& c) const {
    Laurent r;
    if (c != 0)
      for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
  }

  // multiply by q^k
  Laurent shifted(int k) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
  }

  // q -> 1/q
  Laurent bar() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  // q -> q^k, k != 0 (k = -1 coincides with bar()).
  Laurent substituted(int k) const {
    if (k == 0) throw std::domain_error("Laurent: substitution exponent must be nonzero");
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e * k] = c;
    return r;
  }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Exact division in the Laurent ring: sets quot and returns true iff
  // *this = d * quot. Monomials are units, so only the ordinary
  // polynomial parts matter.
  bool try_divide(const Laurent& d, Laurent& quot) const {
    if (d.is_zero()) throw std::domain_error("Laurent: division by zero");
    if (is_zero()) {
      quot = Laurent();
      return true;
    }
    const int shift = min_exp() - d.min_exp();
    Laurent rem = shifted(-min_exp());
    const Laurent div = d.shifted(-d.min_exp());
    const int dn = div.max_exp();
    const Rational dlead = div.terms_.rbegin()->second;
    Laurent q;
    while (!rem.is_zero()) {
      const int rn = rem.max_exp();
      if (rn < dn) return false;
      const Rational c = rem.terms_.rbegin()->second / dlead;
      q.add_term(rn - dn, c);
      rem -= div.scaled(c).shifted(rn - dn);
      if (!rem.is_zero() && rem.min_exp() < 0) return false;
    }
    quot = q.shifted(shift);
    return true;
  }

  Laurent divide_exact(const Laurent& d) const {
    Laurent q;
    if (!try_divide(d, q))
      throw std::domain_error("Laurent: inexact division");
    return q;
  }

  // Polynomial remainder of the min-exponent-normalized parts (used by gcd).
  Laurent poly_mod(const Laurent& d) const {
    if (d.is_zero()) throw std::domain_error("Laurent: mod by zero");
    Laurent rem = is_zero() ? Laurent() : shifted(-min_exp());
    const Laurent div = d.shifted(-d.min_exp());
    const int dn = div.max_exp();
    const Rational dlead = div.terms_.rbegin()->second;
    while (!rem.is_zero() && rem.max_exp() >= dn) {
      const int k = rem.max_exp() - dn;
      rem -= div.scaled(rem.terms_.rbegin()->second / dlead).shifted(k);
    }
    return rem;
  }

  // Rendering, descending exponents: "-q^4+2q^2-1", "q", "0", "3/2q^2".
  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool neg = c < 0;
      const Rational a = neg ? Rational(-c) : c;
      if (!s.empty())
        s += neg ? "-" : "+";
      else if (neg)
        s += "-";
      const bool unit = (a == 1) && e != 0;
      if (!unit) s += a.str();
      if (e != 0) {
        s += "q";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

  // Parses the str() format (integer or a/b coefficients, q^e with e
  // possibly negative). Throws std::invalid_argument on malformed input.
  static Laurent parse(const std::string& in) {
    Laurent r;
    size_t i = 0;
    auto skip_ws = [&] {
      while (i < in.size() && std::isspace(static_cast<unsigned char>(in[i]))) ++i;
    };
    auto read_int = [&]() -> Int {
      skip_ws();
      size_t start = i;
      if (i < in.size() && (in[i] == '+' || in[i] == '-')) ++i;
      size_t digits = i;
      while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) ++i;
      if (i == digits) throw std::invalid_argument("Laurent::parse: expected integer in '" + in + "'");
      return Int(in.substr(start, i - start));
    };
    skip_ws();
    if (i < in.size() && in[i] == '0' && i + 1 == in.size()) return r;
    bool first = true;
    while (true) {
      skip_ws();
      if (i >= in.size()) break;
      int sign = 1;
      if (in[i] == '+' || in[i] == '-') {
        sign = in[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        throw std::invalid_argument("Laurent::parse: expected sign in '" + in + "'");
      }
      first = false;
      skip_ws();
      Rational coeff(1);
      bool have_coeff = false;
      if (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) {
        Int num = read_int();
        Int den(1);
        skip_ws();
        if (i < in.size() && in[i] == '/') {
          ++i;
          den = read_int();
        }
        coeff = Rational(num, den);
        have_coeff = true;
      }
      int exp = 0;
      skip_ws();
      if (i < in.size() && in[i] == 'q') {
        ++i;
        exp = 1;
        skip_ws();
        if (i < in.size() && in[i] == '^') {
          ++i;
          Int e = read_int();
          exp = static_cast<int>(e);
        }
      } else if (!have_coeff) {
        throw std::invalid_argument("Laurent::parse: dangling sign in '" + in + "'");
      }
      r.add_term(exp, sign * coeff);
    }
    return r;
  }

private:
  void require_nonzero() const {
    if (is_zero()) throw std::domain_error("Laurent: zero polynomial has no exponents");
  }

  void add_term(int e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

// Invariance under q -> 1/q.
inline bool is_bar_symmetric(const Laurent& f) { return f == f.bar(); }

// Gcd up to units, returned with minimal exponent 0 and leading
// (highest-exponent) coefficient 1. gcd(0, 0) = 0.
inline Laurent laurent_gcd(Laurent a, Laurent b) {
  auto normalize = [](Laurent& f) {
    if (f.is_zero()) return;
    f = f.shifted(-f.min_exp());
    f = f.scaled(Rational(1) / f.terms().rbegin()->second);
  };
  normalize(a);
  normalize(b);
  while (!b.is_zero()) {
    Laurent r = a.poly_mod(b);
    a = std::move(b);
    b = std::move(r);
    normalize(b);
  }
  normalize(a);
  return a;
}

} // namespace eccq
