// Cartan data: structural invariants for every supported type, plus frozen
// spot checks of the individual tables.

#include <catch2/catch_amalgamated.hpp>

#include "eccq/cartan.hpp"

using namespace eccq;

TEST_CASE("type parsing accepts valid names case-insensitively") {
  REQUIRE(LieType::parse("A1").str() == "A1");
  REQUIRE(LieType::parse("e8").str() == "E8");
  REQUIRE(LieType::parse("g2").str() == "G2");
  REQUIRE(LieType::parse("D6").str() == "D6");
  REQUIRE_THROWS_AS(LieType::parse("H4"), std::invalid_argument);
  REQUIRE_THROWS_AS(LieType::parse("A"), std::invalid_argument);
  REQUIRE_THROWS_AS(LieType::parse("E9").validate_rank(), std::invalid_argument);
  REQUIRE_THROWS_AS(LieType::parse("B1").validate_rank(), std::invalid_argument);
}

TEST_CASE("the supported-type roster is complete") {
  const auto types = all_types(8);
  // A1..A8, B2..B8, C2..C8, D4..D8, E6..E8, F4, G2.
  REQUIRE(types.size() == 8 + 7 + 7 + 5 + 3 + 1 + 1);
}

TEST_CASE("structural invariants of every Cartan datum") {
  for (const LieType& t : all_types(8)) {
    const CartanData cd = cartan_data(t);
    INFO(t.str());
    REQUIRE(cd.n == t.rank);
    REQUIRE(cd.period == 2 * cd.lacing * cd.dual_coxeter);
    for (int i = 1; i <= cd.n; ++i) {
      REQUIRE(cd.c(i, i) == 2);
      REQUIRE(cd.sym(i) >= 1);
      REQUIRE(cd.sym(i) <= cd.lacing);
      // The dual map is an involution fixing the symmetrizers.
      REQUIRE(cd.dual_node(cd.dual_node(i)) == i);
      REQUIRE(cd.sym(cd.dual_node(i)) == cd.sym(i));
      for (int j = 1; j <= cd.n; ++j) {
        if (i == j) continue;
        REQUIRE(cd.c(i, j) <= 0);
        REQUIRE(cd.c(i, j) >= -3);
        // Zero pattern is symmetric and D C is symmetric.
        REQUIRE((cd.c(i, j) == 0) == (cd.c(j, i) == 0));
        REQUIRE(cd.sym(i) * cd.c(i, j) == cd.sym(j) * cd.c(j, i));
      }
    }
    for (int b : cd.black) {
      REQUIRE(b >= 1);
      REQUIRE(b <= cd.n);
    }
    REQUIRE_FALSE(cd.black.empty());
  }
}

TEST_CASE("recorded constants per family") {
  struct Row {
    const char* type;
    int lacing, dual_coxeter;
  };
  const Row rows[] = {{"A1", 1, 2},  {"A5", 1, 6},  {"B2", 2, 3},  {"B6", 2, 11},
                      {"C2", 2, 3},  {"C6", 2, 7},  {"D4", 1, 6},  {"D7", 1, 12},
                      {"E6", 1, 12}, {"E7", 1, 18}, {"E8", 1, 30}, {"F4", 2, 9},
                      {"G2", 3, 4}};
  for (const Row& row : rows) {
    const CartanData cd = cartan_data(LieType::parse(row.type));
    INFO(row.type);
    REQUIRE(cd.lacing == row.lacing);
    REQUIRE(cd.dual_coxeter == row.dual_coxeter);
  }
}

TEST_CASE("spot checks of the non-simply-laced tables") {
  const CartanData b3 = cartan_data(LieType::parse("B3"));
  REQUIRE(b3.sym(1) == 2);
  REQUIRE(b3.sym(3) == 1);
  REQUIRE(b3.c(3, 2) == -2); // short root row
  REQUIRE(b3.c(2, 3) == -1);

  const CartanData c3 = cartan_data(LieType::parse("C3"));
  REQUIRE(c3.sym(3) == 2);
  REQUIRE(c3.c(2, 3) == -2); // long root column pulls a -2 in the long row
  REQUIRE(c3.c(3, 2) == -1);

  const CartanData f4 = cartan_data(LieType::parse("F4"));
  REQUIRE(f4.sym(1) == 1);
  REQUIRE(f4.sym(4) == 2);
  REQUIRE(f4.c(2, 3) == -2);
  REQUIRE(f4.c(3, 2) == -1);

  const CartanData g2 = cartan_data(LieType::parse("G2"));
  REQUIRE(g2.sym(1) == 1);
  REQUIRE(g2.sym(2) == 3);
  REQUIRE(g2.c(1, 2) == -3);
  REQUIRE(g2.c(2, 1) == -1);
}

TEST_CASE("black nodes and dual maps per family") {
  REQUIRE(cartan_data(LieType::parse("A4")).black == std::vector<int>{1});
  REQUIRE(cartan_data(LieType::parse("B5")).black == std::vector<int>{5});
  REQUIRE(cartan_data(LieType::parse("C5")).black == std::vector<int>{1});
  REQUIRE(cartan_data(LieType::parse("D5")).black == std::vector<int>{5});
  REQUIRE(cartan_data(LieType::parse("D6")).black == std::vector<int>{5, 6});
  REQUIRE(cartan_data(LieType::parse("E7")).black == std::vector<int>{1});

  // A_n reverses, D_odd swaps the fork, E6 folds; everything else is fixed.
  const CartanData a4 = cartan_data(LieType::parse("A4"));
  REQUIRE(a4.dual_node(1) == 4);
  REQUIRE(a4.dual_node(2) == 3);
  const CartanData d5 = cartan_data(LieType::parse("D5"));
  REQUIRE(d5.dual_node(4) == 5);
  REQUIRE(d5.dual_node(1) == 1);
  const CartanData e6 = cartan_data(LieType::parse("E6"));
  REQUIRE(e6.dual_node(1) == 5);
  REQUIRE(e6.dual_node(2) == 4);
  REQUIRE(e6.dual_node(3) == 3);
  REQUIRE(e6.dual_node(6) == 6);
  const CartanData e8 = cartan_data(LieType::parse("E8"));
  for (int i = 1; i <= 8; ++i) REQUIRE(e8.dual_node(i) == i);
}
