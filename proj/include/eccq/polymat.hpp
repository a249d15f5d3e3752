// polymat.hpp: exact linear algebra over Laurent polynomials, used to invert
// the quantized Cartan matrix B(q) and assemble the pairing matrix
// M(q) = D(q) B(q)^{-1} D(q) together with the Laurent polynomials
//   pi_ij(q) = m_ij(q) (q - q^{-1}) (1 - q^p),     p = 2 r^v h^v,
// whose monomials encode the singularities of the normalized R-matrix
// between fundamental representations i and j.

#pragma once

#include <stdexcept>
#include <vector>

#include "eccq/cartan.hpp"
#include "eccq/laurent.hpp"
#include "eccq/rational_fn.hpp"

namespace eccq {

using LaurentMatrix = std::vector<std::vector<Laurent>>;
using RationalFnMatrix = std::vector<std::vector<RationalFn>>;

inline LaurentMatrix laurent_identity(int n) {
  LaurentMatrix m(n, std::vector<Laurent>(n));
  for (int i = 0; i < n; ++i) m[i][i] = Laurent::one();
  return m;
}

// B(q): entry (i,j) is the quantum integer [d_i c_ij]_q.
inline LaurentMatrix quantized_cartan(const CartanData& cd) {
  LaurentMatrix b(cd.n, std::vector<Laurent>(cd.n));
  for (int i = 1; i <= cd.n; ++i)
    for (int j = 1; j <= cd.n; ++j)
      b[i - 1][j - 1] = Laurent::quantum_integer(cd.sym(i) * cd.c(i, j));
  return b;
}

// Determinant by fraction-free (Bareiss) elimination; all divisions are exact
// in the Laurent polynomial ring.
inline Laurent laurent_det(LaurentMatrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return Laurent::one();
  Laurent prev = Laurent::one();
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!a[r][k].is_zero()) { pivot = r; break; }
      if (pivot < 0) return Laurent();
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev);
    prev = a[k][k];
  }
  return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

// Adjugate via cofactor expansion; adj(A) * A = det(A) * I.
inline LaurentMatrix laurent_adjugate(const LaurentMatrix& a) {
  const int n = static_cast<int>(a.size());
  LaurentMatrix adj(n, std::vector<Laurent>(n));
  if (n == 1) {
    adj[0][0] = Laurent::one();
    return adj;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      LaurentMatrix minor(n - 1, std::vector<Laurent>(n - 1));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[rr][cc] = a[r][c];
          ++cc;
        }
        ++rr;
      }
      Laurent cof = laurent_det(std::move(minor));
      adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return adj;
}

// M(q) = D(q) B(q)^{-1} D(q) with D(q) = diag([d_i]_q).  The inverse is
// computed as adj(B)/det(B) and the identity B * adj(B) = det(B) * I is
// re-checked to guard the elimination code.
inline RationalFnMatrix pairing_matrix(const CartanData& cd) {
  const LaurentMatrix b = quantized_cartan(cd);
  const Laurent det = laurent_det(b);
  if (det.is_zero()) throw std::domain_error("pairing_matrix: singular B(q)");
  const LaurentMatrix adj = laurent_adjugate(b);
  const int n = cd.n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Laurent s;
      for (int k = 0; k < n; ++k) s += b[i][k] * adj[k][j];
      if (s != (i == j ? det : Laurent()))
        throw std::logic_error("pairing_matrix: adjugate check failed");
    }
  }
  RationalFnMatrix m(n, std::vector<RationalFn>(n));
  for (int i = 0; i < n; ++i) {
    const Laurent di = Laurent::quantum_integer(cd.d[i]);
    for (int j = 0; j < n; ++j) {
      const Laurent dj = Laurent::quantum_integer(cd.d[j]);
      m[i][j] = RationalFn(di * adj[i][j] * dj, det);
    }
  }
  return m;
}

// pi_ij(q) = m_ij(q) (q - q^{-1}) (1 - q^p).  Always a Laurent polynomial
// with integer coefficients; both properties are enforced here.
inline LaurentMatrix pi_matrix(const CartanData& cd, const RationalFnMatrix& m) {
  const Laurent factor = (Laurent::q_power(1) - Laurent::q_power(-1)) *
                         (Laurent::one() - Laurent::q_power(cd.period));
  const int n = cd.n;
  LaurentMatrix pi(n, std::vector<Laurent>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      pi[i][j] = (m[i][j] * RationalFn(factor)).as_polynomial();
      if (!pi[i][j].integer_coefficients())
        throw std::logic_error("pi_matrix: non-integer coefficients at (" +
                               std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
  return pi;
}

inline LaurentMatrix pi_matrix(const CartanData& cd) {
  return pi_matrix(cd, pairing_matrix(cd));
}

} // namespace eccq
