#pragma once

// blocks.hpp: the block-linkage engine.  A tensor product of shifted
// fundamental representations is described by a TensorSpec; its elliptic
// central character (ECC) is the collection of divisors obtained by probing
// the product with the distinguished ("black") fundamentals, one divisor per
// (probe node, orbit).  Two products lie in the same block exactly when
// their ECCs agree.  The same tables drive the shifted-character rank/kernel
// analysis (build_t / verify_relations) and the fundamental-match searches.

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eccq/cartan.hpp"
#include "eccq/divisor.hpp"
#include "eccq/intmat.hpp"
#include "eccq/polymat.hpp"
#include "eccq/reference.hpp"

namespace eccq {

// ---------------------------------------------------------------------------
// Per-type tables, computed once per process and shared.
// ---------------------------------------------------------------------------

struct XiTable {
  CartanData cd;
  LaurentMatrix pi;                     // 0-based storage
  std::vector<std::vector<Divisor>> xi; // 0-based storage

  const Laurent& pi_at(int i, int j) const {             // 1-based
    return pi[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }
  const Divisor& xi_at(int i, int j) const {             // 1-based
    return xi[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }
};

inline XiTable make_xi_table(const CartanData& cd, const LaurentMatrix& pi) {
  XiTable t;
  t.cd = cd;
  t.pi = pi;
  t.xi.assign(static_cast<size_t>(cd.n), std::vector<Divisor>(static_cast<size_t>(cd.n)));
  for (int i = 0; i < cd.n; ++i) {
    for (int j = 0; j < cd.n; ++j) {
      validate_pi(pi[static_cast<size_t>(i)][static_cast<size_t>(j)], cd.period);
      t.xi[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          xi_divisor_from_pi(pi[static_cast<size_t>(i)][static_cast<size_t>(j)], cd.period);
    }
  }
  return t;
}

inline XiTable make_xi_table(const CartanData& cd) { return make_xi_table(cd, pi_matrix(cd)); }

namespace detail {

inline std::map<std::string, std::unique_ptr<XiTable>>& xi_table_memo() {
  static std::map<std::string, std::unique_ptr<XiTable>> memo;
  return memo;
}

inline std::mutex& xi_table_mutex() {
  static std::mutex mu;
  return mu;
}

} // namespace detail

// Shared per-type table; the expensive matrix inversion runs at most once per
// process for each type.
inline const XiTable& xi_table(const LieType& type) {
  std::lock_guard<std::mutex> lock(detail::xi_table_mutex());
  auto& slot = detail::xi_table_memo()[type.str()];
  if (!slot) slot = std::make_unique<XiTable>(make_xi_table(cartan_data(type)));
  return *slot;
}

// Installs a table built from an externally supplied pi matrix (e.g. loaded
// from the disk cache).  A table already present is kept.
inline const XiTable& seed_xi_table(const CartanData& cd, const LaurentMatrix& pi) {
  std::lock_guard<std::mutex> lock(detail::xi_table_mutex());
  auto& slot = detail::xi_table_memo()[cd.type.str()];
  if (!slot) slot = std::make_unique<XiTable>(make_xi_table(cd, pi));
  return *slot;
}

// ---------------------------------------------------------------------------
// Tensor product specifications.
//
// Text grammar: "E8: V1@0, V1@12 | orbit=b: V7@3".  The leading "TYPE:" is
// optional when the type is supplied separately; '|' separates orbit groups;
// a group may open with "orbit=NAME:"; omitting it means the default orbit.
// ---------------------------------------------------------------------------

struct TensorFactor {
  int node = 0;
  std::string orbit; // "" = default orbit
  int exp = 0;

  bool operator==(const TensorFactor& o) const {
    return node == o.node && orbit == o.orbit && exp == o.exp;
  }
};

struct TensorSpec {
  LieType type;
  std::vector<TensorFactor> factors;
};

namespace detail {

inline std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      out.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return out;
}

inline bool valid_orbit_name(const std::string& s) {
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

inline TensorFactor parse_factor(const std::string& raw, const std::string& orbit) {
  const std::string s = strip(raw);
  if (s.size() < 4 || (s[0] != 'V' && s[0] != 'v'))
    throw std::invalid_argument("TensorSpec: expected factor of the form V<node>@<exp>, got '" + s + "'");
  const size_t at = s.find('@');
  if (at == std::string::npos)
    throw std::invalid_argument("TensorSpec: missing '@' in factor '" + s + "'");
  TensorFactor f;
  f.orbit = orbit;
  try {
    size_t used = 0;
    f.node = std::stoi(s.substr(1, at - 1), &used);
    if (used != at - 1) throw std::invalid_argument("");
    f.exp = std::stoi(s.substr(at + 1), &used);
    if (used != s.size() - at - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("TensorSpec: malformed factor '" + s + "'");
  }
  return f;
}

} // namespace detail

inline TensorSpec parse_tensor_spec(const std::string& text,
                                    std::optional<LieType> default_type = std::nullopt) {
  using detail::strip;
  std::string body = strip(text);
  std::optional<LieType> type = default_type;

  // Optional "TYPE:" prefix (not to be confused with "orbit=NAME:").
  const size_t colon = body.find(':');
  if (colon != std::string::npos) {
    const std::string head = strip(body.substr(0, colon));
    if (head.find('=') == std::string::npos && head.find('@') == std::string::npos &&
        !head.empty() && std::isalpha(static_cast<unsigned char>(head[0]))) {
      const LieType parsed = LieType::parse(head);
      if (type && !(*type == parsed))
        throw std::invalid_argument("TensorSpec: type prefix '" + head +
                                    "' conflicts with requested type " + type->str());
      type = parsed;
      body = strip(body.substr(colon + 1));
    }
  }
  if (!type) throw std::invalid_argument("TensorSpec: no type given (use a 'TYPE:' prefix)");
  type->validate_rank();

  TensorSpec spec;
  spec.type = *type;
  if (body.empty()) return spec;

  for (const std::string& group_raw : detail::split(body, '|')) {
    std::string group = strip(group_raw);
    std::string orbit;
    if (group.rfind("orbit", 0) == 0) {
      const size_t eq = group.find('=');
      const size_t end = group.find(':');
      if (eq == std::string::npos || end == std::string::npos || end < eq)
        throw std::invalid_argument("TensorSpec: malformed orbit header in '" + group + "'");
      orbit = strip(group.substr(eq + 1, end - eq - 1));
      if (!detail::valid_orbit_name(orbit))
        throw std::invalid_argument("TensorSpec: invalid orbit name '" + orbit + "'");
      group = strip(group.substr(end + 1));
    }
    if (group.empty()) continue;
    for (const std::string& f : detail::split(group, ','))
      spec.factors.push_back(detail::parse_factor(f, orbit));
  }
  for (const TensorFactor& f : spec.factors)
    if (f.node < 1 || f.node > spec.type.rank)
      throw std::invalid_argument("TensorSpec: node " + std::to_string(f.node) +
                                  " out of range for " + spec.type.str());
  return spec;
}

// Canonical ordering: by orbit (default first), then node, then exponent.
// The ECC is invariant under factor reordering, so sorting is safe and makes
// rendered output independent of input order.
inline TensorSpec canonical_tensor_spec(TensorSpec spec) {
  std::sort(spec.factors.begin(), spec.factors.end(),
            [](const TensorFactor& a, const TensorFactor& b) {
              if (a.orbit != b.orbit) return a.orbit < b.orbit;
              if (a.node != b.node) return a.node < b.node;
              return a.exp < b.exp;
            });
  return spec;
}

inline std::string render_tensor_spec(const TensorSpec& spec_in) {
  const TensorSpec spec = canonical_tensor_spec(spec_in);
  std::string out = spec.type.str() + ":";
  bool first_group = true;
  size_t k = 0;
  while (k < spec.factors.size()) {
    const std::string& orbit = spec.factors[k].orbit;
    out += first_group ? " " : " | ";
    first_group = false;
    if (!orbit.empty()) out += "orbit=" + orbit + ": ";
    bool first_factor = true;
    for (; k < spec.factors.size() && spec.factors[k].orbit == orbit; ++k) {
      if (!first_factor) out += ", ";
      first_factor = false;
      out += "V" + std::to_string(spec.factors[k].node) + "@" +
             std::to_string(spec.factors[k].exp);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elliptic central characters and linkage.
// ---------------------------------------------------------------------------

struct Ecc {
  int period = 0;
  // (probe node, orbit) -> accumulated divisor; identically-zero parts are
  // pruned so absent orbits and cancelled orbits compare equal.
  std::map<std::pair<int, std::string>, Divisor> parts;

  bool operator==(const Ecc& o) const { return period == o.period && parts == o.parts; }
  bool operator!=(const Ecc& o) const { return !(*this == o); }
};

inline Ecc ecc(const TensorSpec& spec) {
  const XiTable& xt = xi_table(spec.type);
  Ecc e;
  e.period = xt.cd.period;
  for (const TensorFactor& f : spec.factors) {
    if (f.node < 1 || f.node > xt.cd.n)
      throw std::invalid_argument("ecc: node out of range");
    for (int b : xt.cd.black) {
      const auto key = std::make_pair(b, f.orbit);
      auto it = e.parts.find(key);
      if (it == e.parts.end()) it = e.parts.emplace(key, Divisor(e.period)).first;
      it->second += xt.xi_at(b, f.node).shifted(f.exp);
    }
  }
  for (auto it = e.parts.begin(); it != e.parts.end();) {
    if (it->second.is_zero())
      it = e.parts.erase(it);
    else
      ++it;
  }
  return e;
}

// Same block <=> equal ECC.  Requires both specs to be of the same type.
inline bool linked(const TensorSpec& a, const TensorSpec& b) {
  if (!(a.type == b.type))
    throw std::invalid_argument("linked: specs have different types (" + a.type.str() +
                                " vs " + b.type.str() + ")");
  return ecc(a) == ecc(b);
}

// ---------------------------------------------------------------------------
// Shifted-character matrices (T) and the relation analysis.
// ---------------------------------------------------------------------------

struct TPreset {
  int i = 0, j = 0;     // divisor pair feeding the rows
  int window = 0;       // entries per row
  int count = 0;        // number of shifted rows
  bool coupled = false; // D even: rows mix two divisor pairs
};

inline TPreset t_preset(const CartanData& cd) {
  const int n = cd.n;
  const int h = cd.dual_coxeter;
  switch (cd.type.series) {
    case Series::A: return {1, 1, h - 1, h - 1, false};
    case Series::B: return {n, n, h, h, false};
    case Series::C: return {1, 1, h, h, false};
    case Series::D:
      if (n % 2 == 0) return {n - 1, n - 1, h, h, true};
      return {n, n, h, h, false};
    case Series::E:
      if (n == 6) return {1, 1, 12, 12, false};
      if (n == 7) return {1, 1, 9, 9, false};
      return {1, 1, 15, 15, false};
    case Series::F: return {1, 1, 9, 9, false};
    case Series::G: return {1, 1, 6, 6, false};
  }
  throw std::logic_error("t_preset: unreachable");
}

namespace detail {

inline IntMatrix to_int_matrix(const std::vector<std::vector<long long>>& rows) {
  IntMatrix out(rows.size());
  for (size_t r = 0; r < rows.size(); ++r) {
    out[r].reserve(rows[r].size());
    for (long long v : rows[r]) out[r].push_back(Int(v));
  }
  return out;
}

} // namespace detail

// Rows of orders of the shifted characters.  For D even the system couples
// the two spin characters: T = [[V, W], [W, V]] with V from the same-node
// divisor and W from the mixed one, each block of size h/2.
inline IntMatrix build_t(const CartanData& cd) {
  const XiTable& xt = xi_table(cd.type);
  const TPreset pre = t_preset(cd);
  if (!pre.coupled)
    return detail::to_int_matrix(singularity_rows(xt.xi_at(pre.i, pre.j), pre.count, pre.window));
  const int half = cd.dual_coxeter / 2;
  const auto v = singularity_rows(xt.xi_at(cd.n - 1, cd.n - 1), half, half);
  const auto w = singularity_rows(xt.xi_at(cd.n - 1, cd.n), half, half);
  std::vector<std::vector<long long>> rows(static_cast<size_t>(2 * half),
                                           std::vector<long long>(static_cast<size_t>(2 * half)));
  for (int s = 0; s < half; ++s) {
    for (int t = 0; t < half; ++t) {
      rows[s][t] = v[s][t];
      rows[s][half + t] = w[s][t];
      rows[half + s][t] = w[s][t];
      rows[half + s][half + t] = v[s][t];
    }
  }
  return detail::to_int_matrix(rows);
}

struct RelationReport {
  LieType type;
  TPreset preset;
  IntMatrix t;
  Int det;            // of the full (square) system
  int rank = 0;
  IntMatrix kernel;   // canonical basis of {x : x^T T = 0}

  bool det_checked = false, det_ok = false;
  Int expected_det;
  bool block_checked = false, block_ok = false;
  Int block_det, expected_block_det;
  bool rank_ok = false;
  int expected_rank = 0;
  bool kernel_checked = false, kernel_ok = false;
  IntMatrix expected_kernel;
  bool annihilation_ok = true; // every expected vector kills T directly

  bool ok() const {
    return (!det_checked || det_ok) && (!block_checked || block_ok) && rank_ok &&
           (!kernel_checked || kernel_ok) && annihilation_ok;
  }
};

// Full rank/determinant/kernel analysis of the shifted-character system,
// compared against the recorded invariants and relation families.
inline RelationReport verify_relations(const CartanData& cd) {
  RelationReport r;
  r.type = cd.type;
  r.preset = t_preset(cd);
  r.t = build_t(cd);
  r.det = int_det(r.t);
  r.rank = matrix_rank(r.t);
  r.kernel = lattice_canonical(left_kernel_basis(r.t));

  const reference::TInvariants inv = reference::expected_t_invariants(cd);
  r.expected_rank = inv.rank;
  r.rank_ok = (r.rank == inv.rank);
  if (inv.det) {
    r.det_checked = true;
    r.expected_det = Int(*inv.det);
    r.det_ok = (r.det == r.expected_det);
  }
  if (inv.block_det) {
    r.block_checked = true;
    r.expected_block_det = Int(*inv.block_det);
    const int half = cd.dual_coxeter / 2;
    IntMatrix block(static_cast<size_t>(half), IntVec(static_cast<size_t>(half)));
    for (int s = 0; s < half; ++s)
      for (int t = 0; t < half; ++t)
        block[static_cast<size_t>(s)][static_cast<size_t>(t)] =
            r.t[static_cast<size_t>(s)][static_cast<size_t>(t)];
    r.block_det = int_det(block);
    r.block_ok = (r.block_det == r.expected_block_det);
  }

  IntMatrix expected;
  for (const auto& v : reference::expected_kernel_vectors(cd)) {
    IntVec row;
    row.reserve(v.size());
    for (long long x : v) row.push_back(Int(x));
    // Direct oracle: the recorded relation must annihilate T outright.
    const size_t cols = r.t.empty() ? 0 : r.t[0].size();
    for (size_t t = 0; t < cols; ++t) {
      Int acc = 0;
      for (size_t s = 0; s < r.t.size(); ++s) acc += row[s] * r.t[s][t];
      if (acc != 0) r.annihilation_ok = false;
    }
    expected.push_back(std::move(row));
  }
  r.expected_kernel = lattice_canonical(expected);
  r.kernel_checked = true;
  r.kernel_ok = expected.empty() ? r.kernel.empty() : lattice_equal(r.kernel, expected);
  return r;
}

// ---------------------------------------------------------------------------
// Fundamental matches: which V_r(q^u) shares the ECC of V_i (x) V_j(q^k).
// ---------------------------------------------------------------------------

struct FundMatchEntry {
  int pole = 0;       // residue k with a pole of xi_ij (2 <= k <= p/2)
  bool trivial = false;
  int node = 0;       // matched fundamental, when not trivial
  int shift = 0;      // exponent u of the match
  int match_count = 0;

  std::string label() const {
    if (trivial) return "C";
    if (match_count == 0) return "?";
    return "V" + std::to_string(node);
  }
};

// Pole residues of xi_ij in the half window [2, p/2].  The poles of these
// characters never reach residues 0 or 1; hitting one would indicate a
// corrupted table, hence the guard.
inline std::vector<int> pole_classes(const LieType& type, int i, int j) {
  const XiTable& xt = xi_table(type);
  std::vector<int> out = xt.xi_at(i, j).pole_half_window();
  for (int k : out)
    if (k < 2) throw std::logic_error("pole_classes: pole at residue " + std::to_string(k));
  return out;
}

inline std::vector<FundMatchEntry> fund_match(const LieType& type, int i, int j) {
  const XiTable& xt = xi_table(type);
  const int n = xt.cd.n, p = xt.cd.period;
  std::vector<FundMatchEntry> out;
  for (int k : pole_classes(type, i, j)) {
    FundMatchEntry e;
    e.pole = k;
    std::vector<Divisor> family(static_cast<size_t>(n));
    bool all_zero = true;
    for (int m = 1; m <= n; ++m) {
      family[static_cast<size_t>(m - 1)] = xt.xi_at(m, i) + xt.xi_at(m, j).shifted(k);
      all_zero = all_zero && family[static_cast<size_t>(m - 1)].is_zero();
    }
    if (all_zero) {
      e.trivial = true;
      e.match_count = 1;
    } else {
      for (int r = 1; r <= n; ++r) {
        for (int u = 0; u < p; ++u) {
          bool match = true;
          for (int m = 1; m <= n && match; ++m)
            match = family[static_cast<size_t>(m - 1)] == xt.xi_at(m, r).shifted(u);
          if (match) {
            if (e.match_count == 0) {
              e.node = r;
              e.shift = u;
            }
            ++e.match_count;
          }
        }
      }
    }
    out.push_back(e);
  }
  return out;
}

struct MatchRow {
  int i = 0, j = 0;
  std::vector<int> poles;
  std::vector<FundMatchEntry> entries;
};

inline MatchRow match_row(const LieType& type, int i, int j) {
  MatchRow row;
  row.i = i;
  row.j = j;
  row.poles = pole_classes(type, i, j);
  row.entries = fund_match(type, i, j);
  return row;
}

// Canonical one-line rendering shared by the CLI and the verification suite.
inline std::string render_match_row(int i, int j, const std::vector<int>& poles,
                                    const std::vector<std::string>& labels) {
  std::string out = "(" + std::to_string(i) + "," + std::to_string(j) + ")  {";
  for (size_t k = 0; k < poles.size(); ++k) {
    if (k) out += ",";
    out += "q^" + std::to_string(poles[k]);
  }
  out += "}  ";
  for (size_t k = 0; k < labels.size(); ++k) {
    if (k) out += ",";
    out += labels[k];
  }
  return out;
}

inline std::string render_match_row(const MatchRow& row) {
  std::vector<std::string> labels;
  labels.reserve(row.entries.size());
  for (const FundMatchEntry& e : row.entries) labels.push_back(e.label());
  return render_match_row(row.i, row.j, row.poles, labels);
}

// ---------------------------------------------------------------------------
// Product search: can a small product of fundamentals share the ECC of a
// single fundamental?
// ---------------------------------------------------------------------------

struct ProductSearchMatch {
  std::string mode;        // "single-orbit" or "dual-cancellation"
  std::vector<int> shifts; // per input factor
  int target_shift = 0;
};

inline std::optional<ProductSearchMatch> product_match_search(const LieType& type,
                                                              const std::vector<int>& factors,
                                                              int target,
                                                              bool multi_orbit = true) {
  if (factors.empty() || factors.size() > 3)
    throw std::invalid_argument("product_match_search: 1 to 3 factors supported");
  const XiTable& xt = xi_table(type);
  const int n = xt.cd.n, p = xt.cd.period;
  for (int f : factors)
    if (f < 1 || f > n) throw std::invalid_argument("product_match_search: bad factor node");
  if (target < 1 || target > n)
    throw std::invalid_argument("product_match_search: bad target node");
  const int b0 = xt.cd.black.front();
  const size_t nf = factors.size();

  // Precomputed shifted targets at the lead probe.
  std::vector<Divisor> target_shifts(static_cast<size_t>(p));
  for (int u = 0; u < p; ++u)
    target_shifts[static_cast<size_t>(u)] = xt.xi_at(b0, target).shifted(u);

  const auto confirm_all_probes = [&](const std::vector<int>& shifts, int u) {
    for (int m = 1; m <= n; ++m) {
      Divisor sum(p);
      for (size_t a = 0; a < nf; ++a)
        sum += xt.xi_at(m, factors[a]).shifted(shifts[a]);
      if (sum != xt.xi_at(m, target).shifted(u)) return false;
    }
    return true;
  };

  // Single orbit: the global shift symmetry pins s_0 = 0.
  std::vector<int> shifts(nf, 0);
  const auto scan = [&](auto&& self, size_t a, Divisor acc) -> std::optional<ProductSearchMatch> {
    if (a == nf) {
      for (int u = 0; u < p; ++u)
        if (acc == target_shifts[static_cast<size_t>(u)] && confirm_all_probes(shifts, u))
          return ProductSearchMatch{"single-orbit", shifts, u};
      return std::nullopt;
    }
    if (a == 0) {
      shifts[0] = 0;
      return self(self, 1, acc + xt.xi_at(b0, factors[0]));
    }
    for (int s = 0; s < p; ++s) {
      shifts[a] = s;
      if (auto hit = self(self, a + 1, acc + xt.xi_at(b0, factors[a]).shifted(s))) return hit;
    }
    return std::nullopt;
  };
  if (auto hit = scan(scan, 0, Divisor(p))) return hit;

  // Dual cancellation: two mutually dual factors on a side orbit contribute
  // nothing (their divisors cancel at every probe when separated by half a
  // period); the remaining factor must match the target outright.
  if (multi_orbit && nf == 3) {
    const int hp = xt.cd.half_period();
    for (size_t a = 0; a < nf; ++a) {
      for (size_t b = 0; b < nf; ++b) {
        if (a == b) continue;
        if (factors[b] != xt.cd.dual_node(factors[a])) continue;
        bool cancels = true;
        for (int m = 1; m <= n && cancels; ++m)
          cancels = (xt.xi_at(m, factors[a]) + xt.xi_at(m, factors[b]).shifted(hp)).is_zero();
        if (!cancels) continue;
        const size_t c = 3 - a - b;
        for (int u = 0; u < p; ++u) {
          bool match = true;
          for (int m = 1; m <= n && match; ++m)
            match = xt.xi_at(m, factors[c]) == xt.xi_at(m, target).shifted(u);
          if (match) {
            std::vector<int> s(nf, 0);
            s[a] = 0;
            s[b] = hp;
            s[c] = 0;
            return ProductSearchMatch{"dual-cancellation", s, u};
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subrepresentation identities.
// ---------------------------------------------------------------------------

struct SubrepCheck {
  bool divisor_identity = false; // all probes
  bool pole_containment = false; // all probes
  bool ok() const { return divisor_identity && pole_containment; }
};

// Checks the recorded fact V_sub(q^sub_exp) inside V_left (x) V_right(q^right_exp):
// the subquotient's character divisor must equal the product's at every probe,
// and its (shifted) pole set must sit inside the union of the factors'.
inline SubrepCheck check_subrep(const LieType& type, int sub, int sub_exp, int left, int right,
                                int right_exp) {
  const XiTable& xt = xi_table(type);
  const int n = xt.cd.n, p = xt.cd.period;
  const auto residue = [p](int k) { return ((k % p) + p) % p; };
  SubrepCheck out;
  out.divisor_identity = true;
  out.pole_containment = true;
  for (int m = 1; m <= n; ++m) {
    const Divisor lhs = xt.xi_at(m, sub).shifted(sub_exp);
    const Divisor rhs = xt.xi_at(m, left) + xt.xi_at(m, right).shifted(right_exp);
    if (lhs != rhs) out.divisor_identity = false;

    // Pole positions live on the residue lattice, so membership is mod p.
    std::set<int> allowed;
    for (int k : xt.xi_at(m, left).symmetric_pole_set()) allowed.insert(residue(k));
    for (int k : xt.xi_at(m, right).symmetric_pole_set())
      allowed.insert(residue(k + right_exp));
    for (int k : xt.xi_at(m, sub).symmetric_pole_set())
      if (allowed.find(residue(k + sub_exp)) == allowed.end()) out.pole_containment = false;
  }
  return out;
}

} // namespace eccq
