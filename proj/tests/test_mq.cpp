// The pairing matrix M(q) = D adj(B)/det(B) D: inverse identities at the
// rational-function level, determinant fixtures, and agreement between the
// elimination route and the recorded closed forms.

#include <catch2/catch_amalgamated.hpp>

#include "eccq/cartan.hpp"
#include "eccq/polymat.hpp"
#include "eccq/reference.hpp"

using namespace eccq;

namespace {

// Verifies B * M' = I at the rational-function level, where M' is M with the
// diagonal q-integer factors stripped: M'_kj = M_kj / ([d_k][d_j]).
void check_rational_inverse(const LieType& type) {
  const CartanData cd = cartan_data(type);
  const LaurentMatrix b = quantized_cartan(cd);
  const RationalFnMatrix m = pairing_matrix(cd);
  for (int i = 0; i < cd.n; ++i) {
    for (int j = 0; j < cd.n; ++j) {
      RationalFn sum;
      for (int k = 0; k < cd.n; ++k) {
        const RationalFn factor(Laurent::one(),
                                Laurent::quantum_integer(cd.sym(k + 1)) *
                                    Laurent::quantum_integer(cd.sym(j + 1)));
        sum = sum + RationalFn(b[i][k]) * m[k][j] * factor;
      }
      const RationalFn want =
          (i == j) ? RationalFn(Laurent::one(), Laurent::one()) : RationalFn();
      INFO(type.str() << " entry (" << i + 1 << "," << j + 1 << ")");
      REQUIRE(sum == want);
    }
  }
}

} // namespace

TEST_CASE("rational-function inverse identity on small types") {
  for (const char* name : {"A1", "A2", "A3", "B2", "C3", "D4", "G2", "F4"})
    check_rational_inverse(LieType::parse(name));
}

TEST_CASE("determinant fixtures") {
  for (const char* name : {"E6", "E7", "E8", "G2", "F4"}) {
    const LieType t = LieType::parse(name);
    const auto want = reference::expected_det_b(t);
    REQUIRE(want.has_value());
    INFO(name);
    REQUIRE(laurent_det(quantized_cartan(cartan_data(t))) == *want);
  }
  // E6 and G2 share the same determinant.
  REQUIRE(*reference::expected_det_b(LieType::parse("E6")) ==
          *reference::expected_det_b(LieType::parse("G2")));
}

TEST_CASE("determinants are bar-invariant") {
  for (const LieType& t : all_types(8)) {
    const Laurent det = laurent_det(quantized_cartan(cartan_data(t)));
    INFO(t.str());
    REQUIRE_FALSE(det.is_zero());
    REQUIRE(det.bar() == det);
  }
}

TEST_CASE("pairing matrix is symmetric") {
  for (const char* name : {"A3", "B3", "C3", "D4", "F4", "G2"}) {
    const CartanData cd = cartan_data(LieType::parse(name));
    const RationalFnMatrix m = pairing_matrix(cd);
    for (int i = 0; i < cd.n; ++i)
      for (int j = 0; j < cd.n; ++j) REQUIRE(m[i][j] == m[j][i]);
  }
}

TEST_CASE("closed forms agree with the elimination route") {
  // Classical families carry per-entry closed forms; check a representative
  // of each, entry by entry, through the recorded-numerator path.
  for (const char* name : {"A3", "B3", "C3", "D4", "G2"}) {
    const CartanData cd = cartan_data(LieType::parse(name));
    const LaurentMatrix pi = pi_matrix(cd);
    for (int i = 1; i <= cd.n; ++i) {
      for (int j = i; j <= cd.n; ++j) {
        const auto want = reference::expected_pi(cd, i, j);
        REQUIRE(want.has_value());
        INFO(name << " (" << i << "," << j << ")");
        REQUIRE(pi[i - 1][j - 1] == *want);
      }
    }
  }
}

TEST_CASE("numerators are polynomials with integer coefficients") {
  for (const char* name : {"A5", "B4", "C4", "D5", "E6", "F4", "G2"}) {
    const CartanData cd = cartan_data(LieType::parse(name));
    const LaurentMatrix pi = pi_matrix(cd);
    for (int i = 0; i < cd.n; ++i) {
      for (int j = 0; j < cd.n; ++j) {
        REQUIRE(pi[i][j].integer_coefficients());
        REQUIRE_FALSE(pi[i][j].is_zero());
        REQUIRE(pi[i][j].min_exp() >= 0);
        REQUIRE(pi[i][j].max_exp() <= cd.period);
        // Symmetric in (i,j).
        REQUIRE(pi[i][j] == pi[j][i]);
      }
    }
  }
}
