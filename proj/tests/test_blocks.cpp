// Tensor specs, elliptic central characters, linkage, the shifted-character
// matrices, fundamental matching and the product search.

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "eccq/blocks.hpp"
#include "eccq/reference.hpp"

using namespace eccq;

// ---------------------------------------------------------------------------
// Tensor spec grammar.
// ---------------------------------------------------------------------------

TEST_CASE("tensor spec parsing and canonical rendering") {
  const TensorSpec s = parse_tensor_spec("E8: V1@0, V1@12 | orbit=b: V7@3", std::nullopt);
  REQUIRE(s.type.str() == "E8");
  REQUIRE(s.factors.size() == 3);
  REQUIRE(render_tensor_spec(s) == "E8: V1@0, V1@12 | orbit=b: V7@3");

  // Order within an orbit is canonicalized.
  const TensorSpec t = parse_tensor_spec("E8: V1@12, V1@0 | orbit=b: V7@3", std::nullopt);
  REQUIRE(render_tensor_spec(t) == render_tensor_spec(s));

  // A default type fills in when the prefix is omitted.
  const TensorSpec u = parse_tensor_spec("V1@0, V2@-3", LieType::parse("A2"));
  REQUIRE(u.type.str() == "A2");
  REQUIRE(u.factors.size() == 2);
  REQUIRE(u.factors[1].exp == -3);

  // Round trip through the renderer.
  REQUIRE(render_tensor_spec(parse_tensor_spec(render_tensor_spec(u), std::nullopt)) ==
          render_tensor_spec(u));
}

TEST_CASE("tensor spec rejections") {
  REQUIRE_THROWS_AS(parse_tensor_spec("V1@0", std::nullopt), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_tensor_spec("A2: V5@0", std::nullopt), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_tensor_spec("A2: V0@0", std::nullopt), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_tensor_spec("A2: W1@0", std::nullopt), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_tensor_spec("A2: V1", std::nullopt), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_tensor_spec("H9: V1@0", std::nullopt), std::invalid_argument);
  // Conflicting explicit types.
  REQUIRE_THROWS_AS(parse_tensor_spec("A3: V1@0", LieType::parse("A2")), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// ECC and linkage.
// ---------------------------------------------------------------------------

TEST_CASE("the ECC of a single factor is the probe divisor") {
  const XiTable& xt = xi_table(LieType::parse("A2"));
  const Ecc e = ecc(parse_tensor_spec("A2: V1@0", std::nullopt));
  REQUIRE(e.parts.size() == 1);
  REQUIRE(e.parts.at({1, ""}) == xt.xi_at(1, 1));
  // Shifting the factor shifts the part.
  const Ecc f = ecc(parse_tensor_spec("A2: V1@2", std::nullopt));
  REQUIRE(f.parts.at({1, ""}) == xt.xi_at(1, 1).shifted(2));
}

TEST_CASE("basic linkage verdicts") {
  const auto spec = [](const char* text) { return parse_tensor_spec(text, std::nullopt); };
  REQUIRE_FALSE(linked(spec("A2: V1@0"), spec("A2: V1@2")));
  REQUIRE(linked(spec("A2: V1@0"), spec("A2: V1@0")));
  // Orbits are nominal: the same factor in different orbits is not linked.
  REQUIRE_FALSE(linked(spec("A2: V1@0"), spec("A2: orbit=b: V1@0")));
  // Mismatched types are a domain error.
  REQUIRE_THROWS_AS(linked(spec("A2: V1@0"), spec("A3: V1@0")), std::invalid_argument);
}

TEST_CASE("the A-series full cycle is ECC-trivial") {
  for (int n = 1; n <= 8; ++n) {
    const LieType t{Series::A, n};
    const XiTable& xt = xi_table(t);
    Divisor sum(xt.cd.period);
    for (int s = 0; s < xt.cd.dual_coxeter; ++s) sum += xt.xi_at(1, 1).shifted(2 * s);
    INFO("A" << n);
    REQUIRE(sum.is_zero());

    // As a linkage statement: appending the cycle leaves any spec linked.
    TensorSpec base;
    base.type = t;
    base.factors.push_back({1, "", 1});
    TensorSpec extended = base;
    for (int s = 0; s < xt.cd.dual_coxeter; ++s) extended.factors.push_back({1, "", 2 * s});
    REQUIRE(linked(base, extended));
  }
}

TEST_CASE("linkage is an equivalence relation on random specs") {
  std::mt19937 gen(4242u);
  const LieType t = LieType::parse("B3");
  const CartanData cd = cartan_data(t);
  const auto random_spec = [&]() {
    TensorSpec s;
    s.type = t;
    const int nf = 1 + static_cast<int>(gen() % 3u);
    for (int k = 0; k < nf; ++k)
      s.factors.push_back({1 + static_cast<int>(gen() % 3u), "",
                           static_cast<int>(gen() % static_cast<unsigned>(cd.period))});
    return s;
  };
  for (int trial = 0; trial < 25; ++trial) {
    const TensorSpec a = random_spec(), b = random_spec(), c = random_spec();
    REQUIRE(linked(a, a));
    REQUIRE(linked(a, b) == linked(b, a));
    if (linked(a, b) && linked(b, c)) REQUIRE(linked(a, c));
    // Permuting factors never changes the ECC.
    TensorSpec p = a;
    std::reverse(p.factors.begin(), p.factors.end());
    REQUIRE(linked(a, p));
  }
}

// ---------------------------------------------------------------------------
// Shifted-character matrices.
// ---------------------------------------------------------------------------

TEST_CASE("T-matrix rows against frozen fixtures") {
  for (int n = 1; n <= 8; ++n) {
    const IntMatrix t = build_t(cartan_data(LieType{Series::A, n}));
    REQUIRE(static_cast<int>(t.size()) == n);
    for (size_t j = 0; j < t[0].size(); ++j)
      REQUIRE(t[0][j] == Int(reference::a_series_row0(n)[j]));
  }
  const IntMatrix e6 = build_t(cartan_data(LieType::parse("E6")));
  for (size_t j = 0; j < 12; ++j) REQUIRE(e6[0][j] == Int(reference::e6_row0()[j]));

  const IntMatrix g2 = build_t(cartan_data(LieType::parse("G2")));
  const auto g2_want = reference::g2_rows();
  REQUIRE(g2.size() == g2_want.size());
  for (size_t s = 0; s < g2.size(); ++s)
    for (size_t j = 0; j < g2[s].size(); ++j) REQUIRE(g2[s][j] == Int(g2_want[s][j]));
}

TEST_CASE("T matrices are symmetric and circulant-like") {
  for (const char* name : {"A4", "B3", "C4", "D5", "E6", "F4", "G2"}) {
    const IntMatrix t = build_t(cartan_data(LieType::parse(name)));
    for (size_t s = 0; s < t.size(); ++s)
      for (size_t u = 0; u < t.size(); ++u) {
        REQUIRE(t[s][u] == t[u][s]);
        // Entries depend only on the difference of indices.
        if (s + 1 < t.size() && u + 1 < t.size()) REQUIRE(t[s][u] == t[s + 1][u + 1]);
      }
  }
}

TEST_CASE("relation analysis matches the recorded invariants everywhere") {
  for (const LieType& t : all_types(8)) {
    const RelationReport rep = verify_relations(cartan_data(t));
    INFO(t.str());
    REQUIRE(rep.ok());
  }
}

TEST_CASE("B-series determinant stays 2n beyond the recorded range") {
  // The matrix is the identity plus a rank-one alternating perturbation, so
  // the determinant formula extends past the recorded ranks.
  for (int n = 7; n <= 8; ++n) {
    const IntMatrix t = build_t(cartan_data(LieType{Series::B, n}));
    REQUIRE(int_det(t) == 2 * n);
  }
}

// ---------------------------------------------------------------------------
// Fundamental matching.
// ---------------------------------------------------------------------------

TEST_CASE("A1 pole of the basic pair matches the trivial family") {
  const auto entries = fund_match(LieType::parse("A1"), 1, 1);
  REQUIRE(entries.size() == 1);
  REQUIRE(entries[0].pole == 2);
  REQUIRE(entries[0].trivial);
  REQUIRE(entries[0].label() == "C");
}

TEST_CASE("A2 mixed pair cancels at its half-period pole") {
  // xi_12 has its only half-window pole at residue 3 — the half period — so
  // the combined family vanishes there: duality pairs the two fundamentals.
  const auto entries = fund_match(LieType::parse("A2"), 1, 2);
  REQUIRE(entries.size() == 1);
  REQUIRE(entries[0].pole == 3);
  REQUIRE(entries[0].trivial);
  REQUIRE(entries[0].label() == "C");

  // The diagonal pair (1,1) genuinely matches the other fundamental at its
  // pole 2: xi(m,1) + xi(m,1)q^2 = xi(m,2)q for both probes.
  const auto diag = fund_match(LieType::parse("A2"), 1, 1);
  REQUIRE(diag.size() == 1);
  REQUIRE(diag[0].pole == 2);
  REQUIRE_FALSE(diag[0].trivial);
  REQUIRE(diag[0].label() == "V2");
  REQUIRE(diag[0].shift == 1);
}

TEST_CASE("E8 match rows used in the record") {
  const LieType e8 = LieType::parse("E8");
  REQUIRE(render_match_row(match_row(e8, 1, 1)) ==
          "(1,1)  {q^2,q^12,q^20,q^30}  V2,V7,V1,C");
  REQUIRE(render_match_row(match_row(e8, 7, 8)) == "(7,8)  {q^5,q^23,q^27}  V4,V7,V1");
}

// ---------------------------------------------------------------------------
// Product search.
// ---------------------------------------------------------------------------

TEST_CASE("single-factor search finds the identity match") {
  const auto hit = product_match_search(LieType::parse("A2"), {1}, 1, true);
  REQUIRE(hit.has_value());
  REQUIRE(hit->mode == "single-orbit");
  REQUIRE(hit->shifts == std::vector<int>{0});
  REQUIRE(hit->target_shift == 0);
}

TEST_CASE("the A2 square of a fundamental matches the other fundamental") {
  // xi(m,1) + xi(m,1)q^2 = xi(m,2)q at every probe.
  const auto hit = product_match_search(LieType::parse("A2"), {1, 1}, 2, true);
  REQUIRE(hit.has_value());
  REQUIRE(hit->mode == "single-orbit");
}

TEST_CASE("dual pairs cancel and reduce to the remaining factor") {
  // In A2, V1 (x) V2 shifted by the half period cancels, so a triple
  // containing such a pair matches the third factor alone.
  const auto hit = product_match_search(LieType::parse("A2"), {1, 2, 1}, 1, true);
  REQUIRE(hit.has_value());
}

TEST_CASE("a search with no solution reports none") {
  // A single A2 fundamental never matches the other one at any shift
  // (their divisors have different residue supports mod 2).
  const auto hit = product_match_search(LieType::parse("A2"), {1}, 2, true);
  REQUIRE_FALSE(hit.has_value());
  REQUIRE_THROWS_AS(product_match_search(LieType::parse("A2"), {}, 1, true),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(product_match_search(LieType::parse("A2"), {1, 1, 1, 1}, 1, true),
                    std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Subrepresentation facts.
// ---------------------------------------------------------------------------

TEST_CASE("recorded subrepresentation facts hold exactly") {
  for (const char* name : {"G2", "F4", "E6", "D4"}) {
    const CartanData cd = cartan_data(LieType::parse(name));
    for (const auto& f : reference::subrep_facts(cd)) {
      INFO(name << ": V" << f.sub << "@" << f.sub_exp << " in V" << f.left << " x V" << f.right
                << "@" << f.right_exp);
      const SubrepCheck c =
          check_subrep(cd.type, f.sub, f.sub_exp, f.left, f.right, f.right_exp);
      REQUIRE(c.divisor_identity);
      REQUIRE(c.pole_containment);
    }
  }
}

TEST_CASE("a wrong subrepresentation claim fails the divisor identity") {
  // Perturbing the shift of a true G2 fact must break it.
  const auto facts = reference::subrep_facts(cartan_data(LieType::parse("G2")));
  REQUIRE_FALSE(facts.empty());
  const auto& f = facts.front();
  const SubrepCheck c =
      check_subrep(LieType::parse("G2"), f.sub, f.sub_exp + 1, f.left, f.right, f.right_exp);
  REQUIRE_FALSE(c.divisor_identity);
}
