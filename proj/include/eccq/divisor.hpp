// divisor.hpp: divisors of elliptic central characters.  The character
// xi_ij(z) attached to a pair of fundamental representations is a meromorphic
// function on the elliptic curve C*/q^{pZ}; all its zeros and poles sit at
// integer powers of q, so the divisor is stored as an integer vector indexed
// by the residue classes 0..p-1 of the exponent.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eccq/laurent.hpp"

namespace eccq {

struct Divisor {
  int period = 0;
  std::vector<long long> ord; // ord[t] = order of vanishing at the class of q^t

  Divisor() = default;
  explicit Divisor(int p) : period(p), ord(p, 0) {}

  long long at(long long t) const { return ord[static_cast<size_t>(((t % period) + period) % period)]; }

  bool is_zero() const {
    for (long long v : ord)
      if (v != 0) return false;
    return true;
  }

  long long degree() const {
    long long s = 0;
    for (long long v : ord) s += v;
    return s;
  }

  // Divisor of xi(z q^{-u}): the singularity at q^t moves to q^{t+u}.
  Divisor shifted(long long u) const {
    Divisor r(period);
    for (int t = 0; t < period; ++t)
      r.ord[static_cast<size_t>(((t + u) % period + period) % period)] = ord[t];
    return r;
  }

  Divisor& operator+=(const Divisor& o) {
    if (period != o.period) throw std::invalid_argument("Divisor: period mismatch");
    for (int t = 0; t < period; ++t) ord[t] += o.ord[t];
    return *this;
  }
  Divisor& operator-=(const Divisor& o) {
    if (period != o.period) throw std::invalid_argument("Divisor: period mismatch");
    for (int t = 0; t < period; ++t) ord[t] -= o.ord[t];
    return *this;
  }
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  Divisor operator-() const {
    Divisor r(period);
    for (int t = 0; t < period; ++t) r.ord[t] = -ord[t];
    return r;
  }
  Divisor scaled(long long k) const {
    Divisor r(period);
    for (int t = 0; t < period; ++t) r.ord[t] = k * ord[t];
    return r;
  }

  bool operator==(const Divisor& o) const { return period == o.period && ord == o.ord; }
  bool operator!=(const Divisor& o) const { return !(*this == o); }

  // Classes in [0, p/2] carrying a pole.  By the palindrome symmetry of the
  // underlying polynomial the full pole set is this window united with its
  // negative, see symmetric_pole_set().
  std::vector<int> pole_half_window() const {
    std::vector<int> out;
    for (int t = 0; t <= period / 2; ++t)
      if (ord[t] < 0) out.push_back(t);
    return out;
  }

  // All integer exponents k with a pole at q^k, listed as {..,-k,..,k,..}.
  std::vector<int> symmetric_pole_set() const {
    std::vector<int> half = pole_half_window();
    std::vector<int> out;
    for (auto it = half.rbegin(); it != half.rend(); ++it)
      if (*it != 0) out.push_back(-*it);
    for (int k : half) out.push_back(k);
    return out;
  }

  std::string str() const {
    std::string s;
    for (int t = 0; t < period; ++t) {
      if (ord[t] == 0) continue;
      if (!s.empty()) s += ' ';
      s += "q^" + std::to_string(t) + ":" + (ord[t] > 0 ? "+" : "") + std::to_string(ord[t]);
    }
    return s.empty() ? "(empty)" : s;
  }
};

// The polynomial pi carries one factor (1 - q^m z)^{-c} per monomial c q^m
// (times the mirror factor in 1/z); telescoping the product over the lattice
// q^{pZ} leaves, for each monomial with 0 <= m < p, a singularity of order -c
// at the class of q^m, the m = 0 monomial contributing doubly (once from the
// z side and once from the 1/z side) and the m = p monomial not at all.
inline Divisor xi_divisor_from_pi(const Laurent& pi, int p) {
  Divisor d(p);
  if (pi.is_zero()) return d;
  for (const auto& [m, coeff] : pi.terms()) {
    if (boost::multiprecision::denominator(coeff) != 1)
      throw std::invalid_argument("xi_divisor_from_pi: non-integer coefficient");
    const long long c = boost::multiprecision::numerator(coeff).convert_to<long long>();
    const int t1 = static_cast<int>(((m % p) + p) % p);
    if (m <= t1) d.ord[t1] -= c;
    const int t0 = static_cast<int>(((-m % p) + p) % p);
    if (m <= -t0) d.ord[t0] -= c;
  }
  return d;
}

// Sanity conditions satisfied by every pi produced by the pairing matrix:
// exponents within [0, p], coefficients forming a palindrome about p/2
// (which makes the divisor well defined on the curve), and total degree zero.
inline void validate_pi(const Laurent& pi, int p) {
  if (pi.is_zero()) throw std::logic_error("validate_pi: zero polynomial");
  if (pi.min_exp() < 0 || pi.max_exp() > p)
    throw std::logic_error("validate_pi: exponent out of range [0,p]: " + pi.str());
  for (int m = 0; m <= p; ++m)
    if (pi.coeff(m) != pi.coeff(p - m))
      throw std::logic_error("validate_pi: coefficients not palindromic: " + pi.str());
  if (xi_divisor_from_pi(pi, p).degree() != 0)
    throw std::logic_error("validate_pi: divisor has nonzero degree: " + pi.str());
}

// Multiplicities of the factors (1 - q^m z)^{e_m} of the building block
// rho(z) with xi(z) = const * prod_{l>=0} rho(q^{pl} z) rho(q^{pl} z^{-1}):
// e_m = -c_m per monomial c_m q^m of pi.
inline std::map<int, long long> rho_factor_exponents(const Laurent& pi) {
  std::map<int, long long> out;
  for (const auto& [m, coeff] : pi.terms())
    out[m] = -boost::multiprecision::numerator(coeff).convert_to<long long>();
  return out;
}

// Matrix whose row s lists the orders of xi(z q^{-2s}) at the points
// q^0, q^2, ..., q^{2(window-1)}; the linear-independence analysis of the
// shifted characters reduces to integer linear algebra on these rows.
inline std::vector<std::vector<long long>> singularity_rows(const Divisor& d, int count,
                                                            int window) {
  std::vector<std::vector<long long>> rows(count, std::vector<long long>(window));
  for (int s = 0; s < count; ++s)
    for (int t = 0; t < window; ++t)
      rows[s][t] = d.at(2LL * (t - s));
  return rows;
}

} // namespace eccq
