// cartan.hpp: Cartan matrices, symmetrizers and bookkeeping constants for
// the finite simple types, in the node numbering used throughout this
// library (documented per series below).

#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace eccq {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Series series = Series::A;
  int rank = 1;

  std::string str() const {
    return std::string(1, static_cast<char>(series)) + std::to_string(rank);
  }

  // Accepts strings like "A3", "D6", "E8", "G2" (case-insensitive).
  static LieType parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("LieType: bad type '" + s + "'");
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c < 'A' || c > 'G') throw std::invalid_argument("LieType: bad series '" + s + "'");
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("LieType: bad rank in '" + s + "'");
      rank = rank * 10 + (s[i] - '0');
    }
    LieType t{static_cast<Series>(c), rank};
    t.validate_rank();
    return t;
  }

  void validate_rank() const {
    const int n = rank;
    bool ok = false;
    switch (series) {
      case Series::A: ok = n >= 1; break;
      case Series::B: ok = n >= 2; break;
      case Series::C: ok = n >= 2; break;
      case Series::D: ok = n >= 4; break;
      case Series::E: ok = n >= 6 && n <= 8; break;
      case Series::F: ok = n == 4; break;
      case Series::G: ok = n == 2; break;
    }
    if (!ok) throw std::invalid_argument("LieType: rank " + std::to_string(n) +
                                         " not valid for series " +
                                         std::string(1, static_cast<char>(series)));
  }

  bool operator==(const LieType& o) const { return series == o.series && rank == o.rank; }
};

// Node numbering conventions (1-based everywhere in the public interface):
//   A_n  1-2-...-n
//   B_n  1-2-...-n, node n short (d_n = 1, the others 2)
//   C_n  1-2-...-n, node n long (d_n = 2, the others 1)
//   D_n  path 1..n-2 with both n-1 and n attached to n-2
//   E_6  path 1-2-3-4-5 with 6 attached to 3
//   E_7  path 1-2-3-4-5-6 with 7 attached to 4; node 1 carries the
//        56-dimensional fundamental representation, node 6 the adjoint
//   E_8  path 1-2-...-7 with 8 attached to 5; node 1 carries the adjoint
//   F_4  path 1-2-3-4, nodes 1,2 short (d = 1,1,2,2)
//   G_2  node 1 short, node 2 long (d = 1,3)
struct CartanData {
  LieType type;
  int n = 0;                            // rank
  std::vector<std::vector<int>> cartan; // c_ij, 0-based storage
  std::vector<int> d;                   // symmetrizers, 0-based storage
  int lacing = 1;                       // max_i d_i
  int dual_coxeter = 0;
  int period = 0;                       // 2 * lacing * dual_coxeter
  std::vector<int> black;               // probe nodes, 1-based
  std::vector<int> dual;                // involution i -> i*, 1-based values, 0-based index

  int c(int i, int j) const { return cartan[i - 1][j - 1]; }     // 1-based
  int sym(int i) const { return d[i - 1]; }                      // 1-based
  int dual_node(int i) const { return dual[i - 1]; }             // 1-based
  int half_period() const { return lacing * dual_coxeter; }      // r∨ h∨

  bool is_black(int i) const {
    for (int b : black)
      if (b == i) return true;
    return false;
  }
};

namespace detail {

inline std::vector<std::vector<int>> simply_laced_cartan(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (auto [a, b] : edges) {
    c[a - 1][b - 1] = -1;
    c[b - 1][a - 1] = -1;
  }
  return c;
}

} // namespace detail

inline CartanData cartan_data(const LieType& type) {
  type.validate_rank();
  const int n = type.rank;
  CartanData cd;
  cd.type = type;
  cd.n = n;
  cd.d.assign(n, 1);
  cd.dual.resize(n);
  for (int i = 1; i <= n; ++i) cd.dual[i - 1] = i;

  std::vector<std::pair<int, int>> path;
  for (int i = 1; i < n; ++i) path.emplace_back(i, i + 1);

  switch (type.series) {
    case Series::A:
      cd.cartan = detail::simply_laced_cartan(n, path);
      cd.dual_coxeter = n + 1;
      cd.black = {1};
      for (int i = 1; i <= n; ++i) cd.dual[i - 1] = n + 1 - i;
      break;
    case Series::B:
      cd.cartan = detail::simply_laced_cartan(n, path);
      cd.cartan[n - 1][n - 2] = -2; // node n short
      cd.d.assign(n, 2);
      cd.d[n - 1] = 1;
      cd.dual_coxeter = 2 * n - 1;
      cd.black = {n};
      break;
    case Series::C:
      cd.cartan = detail::simply_laced_cartan(n, path);
      cd.cartan[n - 2][n - 1] = -2; // node n long
      cd.d[n - 1] = 2;
      cd.dual_coxeter = n + 1;
      cd.black = {1};
      break;
    case Series::D: {
      std::vector<std::pair<int, int>> edges;
      for (int i = 1; i <= n - 3; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n - 1);
      edges.emplace_back(n - 2, n);
      cd.cartan = detail::simply_laced_cartan(n, edges);
      cd.dual_coxeter = 2 * n - 2;
      if (n % 2 == 0) {
        cd.black = {n - 1, n};
      } else {
        cd.black = {n};
        cd.dual[n - 2] = n;
        cd.dual[n - 1] = n - 1;
      }
      break;
    }
    case Series::E: {
      std::vector<std::pair<int, int>> edges;
      const int path_len = n - 1; // nodes 1..n-1 form the path, node n hangs off it
      for (int i = 1; i < path_len; ++i) edges.emplace_back(i, i + 1);
      const int attach = n == 6 ? 3 : n == 7 ? 4 : 5;
      edges.emplace_back(attach, n);
      cd.cartan = detail::simply_laced_cartan(n, edges);
      cd.dual_coxeter = n == 6 ? 12 : n == 7 ? 18 : 30;
      cd.black = {1};
      if (n == 6) {
        cd.dual[0] = 5;
        cd.dual[4] = 1;
        cd.dual[1] = 4;
        cd.dual[3] = 2;
      }
      break;
    }
    case Series::F:
      cd.cartan = detail::simply_laced_cartan(4, path);
      cd.cartan[1][2] = -2; // nodes 1,2 short, 3,4 long
      cd.d = {1, 1, 2, 2};
      cd.dual_coxeter = 9;
      cd.black = {1};
      break;
    case Series::G:
      cd.cartan = {{2, -3}, {-1, 2}};
      cd.d = {1, 3};
      cd.dual_coxeter = 4;
      cd.black = {1};
      break;
  }

  cd.lacing = 1;
  for (int di : cd.d) cd.lacing = std::max(cd.lacing, di);
  cd.period = 2 * cd.lacing * cd.dual_coxeter;
  return cd;
}

inline CartanData cartan_data(const std::string& type) {
  return cartan_data(LieType::parse(type));
}

// Every type of rank <= max_rank, in a fixed order (used by exhaustive checks).
inline std::vector<LieType> all_types(int max_rank = 8) {
  std::vector<LieType> out;
  for (int k = 1; k <= max_rank; ++k) out.push_back({Series::A, k});
  for (int k = 2; k <= max_rank; ++k) out.push_back({Series::B, k});
  for (int k = 2; k <= max_rank; ++k) out.push_back({Series::C, k});
  for (int k = 4; k <= max_rank; ++k) out.push_back({Series::D, k});
  for (int k = 6; k <= std::min(8, max_rank); ++k) out.push_back({Series::E, k});
  if (max_rank >= 4) out.push_back({Series::F, 4});
  if (max_rank >= 2) out.push_back({Series::G, 2});
  return out;
}

} // namespace eccq
