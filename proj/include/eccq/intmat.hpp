// intmat.hpp: exact integer linear algebra (arbitrary precision) for the
// relation analysis: determinants, ranks, Hermite normal form, left kernel
// lattices and lattice comparison.

#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "eccq/laurent.hpp" // for Int

namespace eccq {

using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;

inline IntMatrix int_identity(int n) {
  IntMatrix m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Fraction-free (Bareiss) determinant.
inline Int int_det(IntMatrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("int_det: matrix not square");
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) { pivot = r; break; }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

namespace detail {

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

} // namespace detail

// Row-style Hermite normal form of the lattice spanned by the rows.
// If `transform` is non-null it receives a unimodular U with U * A = H.
// Zero rows are kept at the bottom (U stays square); pivots are positive and
// entries above each pivot are reduced into [0, pivot).
inline IntMatrix hermite_normal_form(IntMatrix a, IntMatrix* transform = nullptr) {
  const int m = static_cast<int>(a.size());
  const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
  IntMatrix u = int_identity(m);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    // Chase the column below row r to a single nonzero entry via Euclid.
    while (true) {
      int best = -1;
      for (int i = r; i < m; ++i) {
        if (a[i][c] == 0) continue;
        if (best < 0 || abs(a[i][c]) < abs(a[best][c])) best = i;
      }
      if (best < 0) break;
      std::swap(a[r], a[best]);
      std::swap(u[r], u[best]);
      bool done = true;
      for (int i = r + 1; i < m; ++i) {
        if (a[i][c] == 0) continue;
        const Int q = detail::floor_div(a[i][c], a[r][c]);
        for (int j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
        for (int j = 0; j < m; ++j) u[i][j] -= q * u[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < m && a[r][c] != 0) {
      if (a[r][c] < 0) {
        for (int j = 0; j < n; ++j) a[r][j] = -a[r][j];
        for (int j = 0; j < m; ++j) u[r][j] = -u[r][j];
      }
      for (int i = 0; i < r; ++i) {
        const Int q = detail::floor_div(a[i][c], a[r][c]);
        if (q == 0) continue;
        for (int j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
        for (int j = 0; j < m; ++j) u[i][j] -= q * u[r][j];
      }
      ++r;
    }
  }
  if (transform) *transform = std::move(u);
  return a;
}

inline bool is_zero_row(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

inline int matrix_rank(const IntMatrix& a) {
  IntMatrix h = hermite_normal_form(a);
  int r = 0;
  for (const auto& row : h)
    if (!is_zero_row(row)) ++r;
  return r;
}

// Basis of the lattice {x : x A = 0} (all integer vectors, since the rows of
// a unimodular transform hitting zero rows of the HNF span a saturated
// sublattice).
inline IntMatrix left_kernel_basis(const IntMatrix& a) {
  IntMatrix u;
  IntMatrix h = hermite_normal_form(a, &u);
  IntMatrix out;
  for (size_t i = 0; i < h.size(); ++i)
    if (is_zero_row(h[i])) out.push_back(u[i]);
  return out;
}

// Canonical form for lattice comparison: HNF rows with zero rows dropped.
inline IntMatrix lattice_canonical(const IntMatrix& rows) {
  IntMatrix h = hermite_normal_form(rows);
  IntMatrix out;
  for (auto& row : h)
    if (!is_zero_row(row)) out.push_back(std::move(row));
  return out;
}

inline bool lattice_equal(const IntMatrix& rows_a, const IntMatrix& rows_b) {
  if (!rows_a.empty() && !rows_b.empty() && rows_a[0].size() != rows_b[0].size())
    return false;
  return lattice_canonical(rows_a) == lattice_canonical(rows_b);
}

// Whether v lies in the lattice spanned by the given rows.
inline bool lattice_contains(const IntMatrix& rows, IntVec v) {
  if (rows.empty()) return is_zero_row(v);
  const int n = static_cast<int>(rows[0].size());
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("lattice_contains: dimension mismatch");
  IntMatrix h = lattice_canonical(rows);
  size_t r = 0;
  for (int c = 0; c < n; ++c) {
    if (r < h.size() && h[r][c] != 0) {
      if (v[c] % h[r][c] == 0) {
        const Int q = v[c] / h[r][c];
        for (int j = 0; j < n; ++j) v[j] -= q * h[r][j];
      }
      ++r;
    }
    if (v[c] != 0) return false;
  }
  return true;
}

inline std::string matrix_str(const IntMatrix& a) {
  std::string s;
  for (const auto& row : a) {
    s += "[";
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) s += ' ';
      s += row[j].str();
    }
    s += "]\n";
  }
  return s;
}

} // namespace eccq
