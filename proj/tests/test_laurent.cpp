// Exact Laurent-polynomial arithmetic: ring axioms on randomized inputs,
// parsing/printing round trips, substitution, and exact division.

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "eccq/laurent.hpp"

using eccq::Int;
using eccq::Laurent;
using eccq::Rational;

namespace {

Laurent random_laurent(std::mt19937& gen) {
  Laurent f;
  const int terms = static_cast<int>(gen() % 5u);
  for (int k = 0; k < terms; ++k) {
    const int e = static_cast<int>(gen() % 13u) - 6;
    const int num = static_cast<int>(gen() % 9u) - 4;
    const int den = 1 + static_cast<int>(gen() % 3u);
    f += Laurent::monomial(Rational(num, den), e);
  }
  return f;
}

} // namespace

TEST_CASE("ring axioms hold on randomized Laurent polynomials") {
  std::mt19937 gen(20240915u);
  for (int trial = 0; trial < 100; ++trial) {
    const Laurent a = random_laurent(gen);
    const Laurent b = random_laurent(gen);
    const Laurent c = random_laurent(gen);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + Laurent() == a);
    REQUIRE(a * Laurent::one() == a);
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE("rendering and parsing round-trip") {
  std::mt19937 gen(7u);
  for (int trial = 0; trial < 100; ++trial) {
    const Laurent a = random_laurent(gen);
    REQUIRE(Laurent::parse(a.str()) == a);
  }
  REQUIRE(Laurent::parse("q^-4 + 2q - 3").str() == "2q-3+q^-4");
  REQUIRE(Laurent::parse("0").is_zero());
  REQUIRE_THROWS_AS(Laurent::parse("q^"), std::invalid_argument);
  REQUIRE_THROWS_AS(Laurent::parse("2x"), std::invalid_argument);
}

TEST_CASE("quantum integers") {
  REQUIRE(Laurent::quantum_integer(1) == Laurent::one());
  REQUIRE(Laurent::quantum_integer(2).str() == "q+q^-1");
  REQUIRE(Laurent::quantum_integer(3).str() == "q^2+1+q^-2");
  // [m]*[n] telescopes: [2]*[3] = [4] + [2].
  REQUIRE(Laurent::quantum_integer(2) * Laurent::quantum_integer(3) ==
          Laurent::quantum_integer(4) + Laurent::quantum_integer(2));
  // Bar invariance (q -> 1/q).
  for (int m = 1; m <= 6; ++m)
    REQUIRE(Laurent::quantum_integer(m).bar() == Laurent::quantum_integer(m));
}

TEST_CASE("exponent substitution is a ring homomorphism") {
  std::mt19937 gen(99u);
  for (int trial = 0; trial < 50; ++trial) {
    const Laurent a = random_laurent(gen);
    const Laurent b = random_laurent(gen);
    REQUIRE((a + b).substituted(2) == a.substituted(2) + b.substituted(2));
    REQUIRE((a * b).substituted(2) == a.substituted(2) * b.substituted(2));
    REQUIRE(a.substituted(-1) == a.bar());
    REQUIRE(a.substituted(2).substituted(3) == a.substituted(6));
    REQUIRE(a.bar().bar() == a);
  }
  REQUIRE_THROWS_AS(Laurent::one().substituted(0), std::domain_error);
}

TEST_CASE("exact division succeeds exactly on multiples") {
  std::mt19937 gen(5150u);
  for (int trial = 0; trial < 100; ++trial) {
    Laurent a = random_laurent(gen);
    Laurent b = random_laurent(gen);
    if (b.is_zero()) b = Laurent::one();
    const Laurent prod = a * b;
    REQUIRE(prod.divide_exact(b) == a);
    Laurent quotient;
    REQUIRE(prod.try_divide(b, quotient));
    REQUIRE(quotient == a);
  }
  // Non-multiples are rejected.
  const Laurent p = Laurent::parse("q^2+1");
  const Laurent d = Laurent::parse("q+1");
  Laurent q;
  REQUIRE_FALSE(p.try_divide(d, q));
  REQUIRE_THROWS_AS(p.divide_exact(d), std::domain_error);
  REQUIRE_THROWS_AS(p.divide_exact(Laurent()), std::domain_error);
}

TEST_CASE("integer coefficient detection") {
  REQUIRE(Laurent::parse("q^3-2q+5").integer_coefficients());
  Laurent f = Laurent::monomial(Rational(1, 2), 0);
  REQUIRE_FALSE(f.integer_coefficients());
}
