// eccq: command-line front end for the elliptic-central-character toolkit.
//
// One verb per report.  Every verb supports --format {text,json}; output is
// deterministic (byte-identical across runs and across cache states).
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eccq/eccq.hpp"

namespace {

using nlohmann::json;
using namespace eccq;

// ---------------------------------------------------------------------------
// Shared helpers.
// ---------------------------------------------------------------------------

LieType parse_type(const std::string& s) { return LieType::parse(s); }

// Obtains the divisor table for a type, going through the disk cache unless
// disabled: a cache hit seeds the in-process table, a miss computes and
// stores it.  The stored polynomials round-trip exactly, so downstream
// output is identical either way.
const XiTable& acquire_table(const LieType& type, const std::string& cache_dir, bool no_cache) {
  if (no_cache) return xi_table(type);
  const CartanData cd = cartan_data(type);
  const auto dir = cache::resolve_cache_dir(cache_dir);
  if (auto pi = cache::load_pi(dir, cd)) return seed_xi_table(cd, *pi);
  const XiTable& xt = xi_table(type);
  cache::save_pi(dir, cd, xt.pi);
  return xt;
}

std::string orbit_label(const std::string& orbit) {
  return orbit.empty() ? std::string("(default)") : orbit;
}

json divisor_json(const Divisor& d) {
  json parts = json::array();
  for (int t = 0; t < d.period; ++t)
    if (d.ord[static_cast<size_t>(t)] != 0)
      parts.push_back({{"residue", t}, {"order", d.ord[static_cast<size_t>(t)]}});
  return {{"period", d.period}, {"orders", parts}};
}

json int_matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.str());
    rows.push_back(std::move(r));
  }
  return rows;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// Verb implementations.  Each returns the process exit code.
// ---------------------------------------------------------------------------

int run_cartan(const LieType& type, const std::string& format) {
  const CartanData cd = cartan_data(type);
  if (format == "json") {
    json doc{{"type", cd.type.str()},
             {"rank", cd.n},
             {"lacing", cd.lacing},
             {"dual_coxeter", cd.dual_coxeter},
             {"period", cd.period},
             {"symmetrizers", cd.d},
             {"black_nodes", cd.black},
             {"dual_map", cd.dual},
             {"cartan", cd.cartan}};
    emit(doc);
    return 0;
  }
  std::cout << "type: " << cd.type.str() << "\n";
  std::cout << "rank: " << cd.n << "\n";
  std::cout << "lacing: " << cd.lacing << "\n";
  std::cout << "dual coxeter number: " << cd.dual_coxeter << "\n";
  std::cout << "divisor period: " << cd.period << "\n";
  std::cout << "symmetrizers:";
  for (int x : cd.d) std::cout << " " << x;
  std::cout << "\nblack nodes:";
  for (int b : cd.black) std::cout << " " << b;
  std::cout << "\ndual map:";
  for (int x : cd.dual) std::cout << " " << x;
  std::cout << "\ncartan matrix:\n";
  for (int i = 0; i < cd.n; ++i) {
    std::cout << " ";
    for (int j = 0; j < cd.n; ++j) std::cout << " " << cd.c(i + 1, j + 1);
    std::cout << "\n";
  }
  return 0;
}

int run_mq(const LieType& type, bool verify_appendix, const std::string& format,
           const std::string& cache_dir, bool no_cache) {
  const CartanData cd = cartan_data(type);

  if (verify_appendix) {
    acquire_table(type, cache_dir, no_cache);
    const verify::AppendixReport rep = verify::compare_appendix(type);
    if (format == "json") {
      json diffs = json::array();
      for (const auto& e : rep.mismatches)
        diffs.push_back({{"i", e.i}, {"j", e.j}, {"computed", e.computed},
                         {"recorded", e.recorded}});
      emit(json{{"type", type.str()},
                {"entries", rep.total},
                {"matched", rep.matched},
                {"mismatches", diffs}});
    } else {
      std::cout << "type: " << type.str() << "\n";
      std::cout << "entries compared: " << rep.total << "\n";
      std::cout << "matched: " << rep.matched << "\n";
      for (const auto& e : rep.mismatches)
        std::cout << "mismatch (" << e.i << "," << e.j << "): computed " << e.computed
                  << " | recorded " << e.recorded << "\n";
      if (rep.mismatches.empty())
        std::cout << "all entries match the recorded closed forms\n";
    }
    return rep.mismatches.empty() ? 0 : 1;
  }

  const LaurentMatrix b = quantized_cartan(cd);
  const Laurent det = laurent_det(b);
  const RationalFnMatrix m = pairing_matrix(cd);
  if (format == "json") {
    json entries = json::array();
    for (int i = 0; i < cd.n; ++i)
      for (int j = i; j < cd.n; ++j)
        entries.push_back({{"i", i + 1}, {"j", j + 1}, {"value", m[i][j].str()}});
    emit(json{{"type", type.str()}, {"det_b", det.str()}, {"entries", entries}});
    return 0;
  }
  std::cout << "type: " << type.str() << "\n";
  std::cout << "det B(q): " << det.str() << "\n";
  for (int i = 0; i < cd.n; ++i)
    for (int j = i; j < cd.n; ++j)
      std::cout << "m(" << i + 1 << "," << j + 1 << ") = " << m[i][j].str() << "\n";
  return 0;
}

int run_divisor(const LieType& type, int i, int j, const std::string& format,
                const std::string& cache_dir, bool no_cache) {
  const XiTable& xt = acquire_table(type, cache_dir, no_cache);
  if (i < 1 || j < 1 || i > xt.cd.n || j > xt.cd.n)
    throw std::invalid_argument("node out of range for " + type.str());
  const Laurent& pi = xt.pi_at(i, j);
  const Divisor& d = xt.xi_at(i, j);
  if (format == "json") {
    emit(json{{"type", type.str()},
              {"i", i},
              {"j", j},
              {"numerator", pi.str()},
              {"divisor", divisor_json(d)},
              {"poles_half_window", d.pole_half_window()}});
    return 0;
  }
  std::cout << "type: " << type.str() << "  pair: (" << i << "," << j << ")\n";
  std::cout << "period: " << d.period << "\n";
  std::cout << "numerator: " << pi.str() << "\n";
  std::cout << "divisor: " << d.str() << "\n";
  std::cout << "poles (residues in [2," << d.period / 2 << "]):";
  for (int k : d.pole_half_window()) std::cout << " " << k;
  std::cout << "\n";
  return 0;
}

int run_table(const LieType& type, const std::string& format, const std::string& cache_dir,
              bool no_cache) {
  const XiTable& xt = acquire_table(type, cache_dir, no_cache);
  if (format == "json") {
    json rows = json::array();
    for (int i = 1; i <= xt.cd.n; ++i)
      for (int j = i; j <= xt.cd.n; ++j)
        rows.push_back({{"i", i}, {"j", j}, {"divisor", divisor_json(xt.xi_at(i, j))}});
    emit(json{{"type", type.str()}, {"period", xt.cd.period}, {"rows", rows}});
    return 0;
  }
  std::cout << "type: " << type.str() << "\n";
  std::cout << "period: " << xt.cd.period << "\n";
  for (int i = 1; i <= xt.cd.n; ++i)
    for (int j = i; j <= xt.cd.n; ++j)
      std::cout << "(" << i << "," << j << ")  " << xt.xi_at(i, j).str() << "\n";
  return 0;
}

int run_tmatrix(const LieType& type, int window, int count, const std::string& format,
                const std::string& cache_dir, bool no_cache) {
  const XiTable& xt = acquire_table(type, cache_dir, no_cache);
  const TPreset preset = t_preset(xt.cd);
  IntMatrix t;
  int used_window = preset.window, used_count = preset.count;
  if (window > 0 || count > 0) {
    used_window = window > 0 ? window : preset.window;
    used_count = count > 0 ? count : preset.count;
    const auto rows =
        singularity_rows(xt.xi_at(preset.i, preset.j), used_count, used_window);
    t.assign(rows.size(), IntVec());
    for (size_t s = 0; s < rows.size(); ++s)
      for (long long x : rows[s]) t[s].push_back(Int(x));
  } else {
    t = build_t(xt.cd);
    used_count = static_cast<int>(t.size());
    used_window = t.empty() ? 0 : static_cast<int>(t[0].size());
  }
  if (format == "json") {
    emit(json{{"type", type.str()},
              {"pair", {preset.i, preset.j}},
              {"coupled", preset.coupled && window <= 0 && count <= 0},
              {"rows", used_count},
              {"window", used_window},
              {"matrix", int_matrix_json(t)}});
    return 0;
  }
  std::cout << "type: " << type.str() << "  pair: (" << preset.i << "," << preset.j << ")"
            << (preset.coupled && window <= 0 && count <= 0 ? "  [coupled]" : "") << "\n";
  std::cout << "rows: " << used_count << "  window: " << used_window << "\n";
  std::cout << matrix_str(t);
  return 0;
}

int run_relations(const LieType& type, const std::string& format, const std::string& cache_dir,
                  bool no_cache) {
  acquire_table(type, cache_dir, no_cache);
  const RelationReport rep = verify_relations(cartan_data(type));
  if (format == "json") {
    json doc{{"type", rep.type.str()},
             {"rows", static_cast<int>(rep.t.size())},
             {"window", rep.t.empty() ? 0 : static_cast<int>(rep.t[0].size())},
             {"det", rep.det.str()},
             {"rank", rep.rank},
             {"expected_rank", rep.expected_rank},
             {"rank_ok", rep.rank_ok},
             {"kernel", int_matrix_json(rep.kernel)},
             {"annihilation_ok", rep.annihilation_ok},
             {"ok", rep.ok()}};
    if (rep.det_checked) {
      doc["expected_det"] = rep.expected_det.str();
      doc["det_ok"] = rep.det_ok;
    }
    if (rep.block_checked) {
      doc["block_det"] = rep.block_det.str();
      doc["expected_block_det"] = rep.expected_block_det.str();
      doc["block_det_ok"] = rep.block_ok;
    }
    if (rep.kernel_checked) doc["kernel_ok"] = rep.kernel_ok;
    emit(doc);
    return rep.ok() ? 0 : 1;
  }
  std::cout << "type: " << rep.type.str() << "\n";
  std::cout << "rows: " << rep.t.size() << "  window: "
            << (rep.t.empty() ? 0 : rep.t[0].size()) << "\n";
  std::cout << "det T: " << rep.det.str();
  if (rep.det_checked)
    std::cout << "  expected: " << rep.expected_det.str() << "  "
              << (rep.det_ok ? "ok" : "MISMATCH");
  std::cout << "\n";
  if (rep.block_checked)
    std::cout << "block det: " << rep.block_det.str() << "  expected: "
              << rep.expected_block_det.str() << "  " << (rep.block_ok ? "ok" : "MISMATCH")
              << "\n";
  std::cout << "rank: " << rep.rank << "  expected: " << rep.expected_rank << "  "
            << (rep.rank_ok ? "ok" : "MISMATCH") << "\n";
  std::cout << "kernel dimension: " << rep.kernel.size() << "\n";
  if (!rep.kernel.empty()) std::cout << matrix_str(rep.kernel);
  if (rep.kernel_checked)
    std::cout << "kernel lattice "
              << (rep.kernel_ok ? "matches" : "DOES NOT match")
              << " the recorded relation family"
              << (rep.annihilation_ok ? " (annihilation verified)" : " (annihilation FAILED)")
              << "\n";
  std::cout << "verdict: " << (rep.ok() ? "ok" : "MISMATCH") << "\n";
  return rep.ok() ? 0 : 1;
}

int run_linked(std::optional<LieType> type, const std::string& left, const std::string& right,
               const std::string& format, const std::string& cache_dir, bool no_cache) {
  const TensorSpec a = parse_tensor_spec(left, type);
  const TensorSpec b = parse_tensor_spec(right, type);
  acquire_table(a.type, cache_dir, no_cache);
  if (!(a.type == b.type)) acquire_table(b.type, cache_dir, no_cache);
  const bool same = linked(a, b);
  if (format == "json") {
    emit(json{{"left", render_tensor_spec(a)},
              {"right", render_tensor_spec(b)},
              {"linked", same}});
    return 0;
  }
  std::cout << (same ? "LINKED" : "NOT LINKED") << "\n";
  return 0;
}

int run_ecc(std::optional<LieType> type, const std::string& spec_text, const std::string& format,
            const std::string& cache_dir, bool no_cache) {
  const TensorSpec spec = parse_tensor_spec(spec_text, type);
  acquire_table(spec.type, cache_dir, no_cache);
  const Ecc e = ecc(spec);
  if (format == "json") {
    json parts = json::array();
    for (const auto& [key, d] : e.parts)
      parts.push_back({{"probe", key.first}, {"orbit", key.second}, {"divisor", divisor_json(d)}});
    emit(json{{"spec", render_tensor_spec(spec)}, {"period", e.period}, {"parts", parts}});
    return 0;
  }
  std::cout << "spec: " << render_tensor_spec(spec) << "\n";
  std::cout << "period: " << e.period << "\n";
  if (e.parts.empty()) std::cout << "ecc: trivial (all parts vanish)\n";
  for (const auto& [key, d] : e.parts)
    std::cout << "probe " << key.first << "  orbit " << orbit_label(key.second) << ":  "
              << d.str() << "\n";
  return 0;
}

int run_fundmatch(const LieType& type, int i, int j, const std::string& format,
                  const std::string& cache_dir, bool no_cache) {
  const XiTable& xt = acquire_table(type, cache_dir, no_cache);
  if (i < 1 || j < 1 || i > xt.cd.n || j > xt.cd.n)
    throw std::invalid_argument("node out of range for " + type.str());
  const MatchRow row = match_row(type, i, j);
  if (format == "json") {
    json entries = json::array();
    for (const FundMatchEntry& e : row.entries) {
      json item{{"pole", e.pole}, {"label", e.label()}, {"matches", e.match_count}};
      if (!e.trivial && e.match_count > 0) {
        item["node"] = e.node;
        item["shift"] = e.shift;
      }
      entries.push_back(std::move(item));
    }
    emit(json{{"type", type.str()},
              {"i", row.i},
              {"j", row.j},
              {"row", render_match_row(row)},
              {"entries", entries}});
    return 0;
  }
  std::cout << render_match_row(row) << "\n";
  for (const FundMatchEntry& e : row.entries) {
    std::cout << "  q^" << e.pole << ": ";
    if (e.trivial)
      std::cout << "C (the product family vanishes)\n";
    else if (e.match_count == 0)
      std::cout << "? (no single fundamental matches)\n";
    else
      std::cout << "V" << e.node << " @ q^" << e.shift << " (" << e.match_count
                << (e.match_count == 1 ? " match)" : " matches)") << "\n";
  }
  return 0;
}

int run_table2(const LieType& type, const std::string& format, const std::string& cache_dir,
               bool no_cache) {
  if (!(type == LieType{Series::E, 8}))
    throw std::invalid_argument("table2 is only defined for E8");
  acquire_table(type, cache_dir, no_cache);
  int mismatches = 0;
  const auto recorded_rows = reference::e8_match_table();
  if (format == "json") {
    json rows = json::array();
    for (const auto& want : recorded_rows) {
      const std::string recorded = render_match_row(want.i, want.j, want.poles, want.labels);
      const std::string computed = render_match_row(match_row(type, want.i, want.j));
      const bool match = computed == recorded;
      if (!match) ++mismatches;
      rows.push_back({{"i", want.i},
                      {"j", want.j},
                      {"computed", computed},
                      {"recorded", recorded},
                      {"match", match}});
    }
    emit(json{{"type", type.str()},
              {"rows", rows},
              {"matched", static_cast<int>(recorded_rows.size()) - mismatches},
              {"total", static_cast<int>(recorded_rows.size())}});
    return mismatches == 0 ? 0 : 1;
  }
  for (const auto& want : recorded_rows) {
    const std::string recorded = render_match_row(want.i, want.j, want.poles, want.labels);
    const std::string computed = render_match_row(match_row(type, want.i, want.j));
    if (computed == recorded) {
      std::cout << "ok    " << computed << "\n";
    } else {
      ++mismatches;
      std::cout << "DIFF  computed: " << computed << "\n";
      std::cout << "      recorded: " << recorded << "\n";
    }
  }
  std::cout << (static_cast<int>(recorded_rows.size()) - mismatches) << "/"
            << recorded_rows.size() << " rows match the recorded table\n";
  return mismatches == 0 ? 0 : 1;
}

int run_search(const LieType& type, const std::vector<int>& factors, int target,
               const std::string& format, const std::string& cache_dir, bool no_cache) {
  const XiTable& xt = acquire_table(type, cache_dir, no_cache);
  if (factors.empty() || factors.size() > 3)
    throw std::invalid_argument("search takes between 1 and 3 factor nodes (--i, repeatable)");
  for (int f : factors)
    if (f < 1 || f > xt.cd.n) throw std::invalid_argument("factor node out of range");
  if (target < 1 || target > xt.cd.n)
    throw std::invalid_argument("target node out of range");
  const auto hit = product_match_search(type, factors, target, true);
  if (format == "json") {
    json doc{{"type", type.str()}, {"factors", factors}, {"target", target},
             {"found", hit.has_value()}};
    if (hit) {
      doc["mode"] = hit->mode;
      doc["shifts"] = hit->shifts;
      doc["target_shift"] = hit->target_shift;
    }
    emit(doc);
    return 0;
  }
  std::cout << "factors:";
  for (int f : factors) std::cout << " V" << f;
  std::cout << "\ntarget: V" << target << "\n";
  if (!hit) {
    std::cout << "result: no match\n";
  } else {
    std::cout << "result: match (mode " << hit->mode << "; factor shifts";
    for (int s : hit->shifts) std::cout << " " << s;
    std::cout << "; target shift " << hit->target_shift << ")\n";
  }
  return 0;
}

int run_subreps(const LieType& type, const std::string& format, const std::string& cache_dir,
                bool no_cache) {
  const XiTable& xt = acquire_table(type, cache_dir, no_cache);
  const auto facts = reference::subrep_facts(xt.cd);
  int failures = 0;
  json rows = json::array();
  for (const auto& f : facts) {
    const SubrepCheck c = check_subrep(type, f.sub, f.sub_exp, f.left, f.right, f.right_exp);
    if (!c.ok()) ++failures;
    if (format == "json") {
      rows.push_back({{"sub", f.sub},
                      {"sub_exp", f.sub_exp},
                      {"left", f.left},
                      {"right", f.right},
                      {"right_exp", f.right_exp},
                      {"divisor_identity", c.divisor_identity},
                      {"pole_containment", c.pole_containment}});
    } else {
      std::cout << "V" << f.sub << "@q^" << f.sub_exp << " inside V" << f.left << " x V"
                << f.right << "@q^" << f.right_exp << ": divisor identity "
                << (c.divisor_identity ? "ok" : "FAILED") << "; pole containment "
                << (c.pole_containment ? "ok" : "FAILED") << "\n";
    }
  }
  if (format == "json") {
    emit(json{{"type", type.str()},
              {"facts", rows},
              {"failures", failures}});
    return failures == 0 ? 0 : 1;
  }
  if (facts.empty())
    std::cout << "no recorded facts for " << type.str() << "\n";
  else
    std::cout << facts.size() << " facts checked, " << (failures == 0 ? "all hold" : "FAILURES")
              << "\n";
  return failures == 0 ? 0 : 1;
}

int run_cache_inspect(const std::string& cache_dir, const std::string& format) {
  const auto dir = cache::resolve_cache_dir(cache_dir);
  const auto entries = cache::inspect(dir);
  if (format == "json") {
    json rows = json::array();
    for (const auto& e : entries)
      rows.push_back({{"type", e.type}, {"present", e.present},
                      {"size", e.size}, {"path", e.path}});
    emit(json{{"directory", dir.string()}, {"entries", rows}});
    return 0;
  }
  std::cout << "cache directory: " << dir.string() << "\n";
  for (const auto& e : entries) {
    std::cout << e.type << ": ";
    if (e.present)
      std::cout << "present (" << e.size << " bytes)\n";
    else
      std::cout << "absent\n";
  }
  return 0;
}

int run_cache_clear(const std::string& cache_dir, const std::string& type_str,
                    const std::string& format) {
  const auto dir = cache::resolve_cache_dir(cache_dir);
  std::optional<LieType> only;
  if (!type_str.empty()) only = parse_type(type_str);
  const int removed = cache::clear(dir, only);
  if (format == "json") {
    emit(json{{"directory", dir.string()}, {"removed", removed}});
    return 0;
  }
  std::cout << "removed " << removed << (removed == 1 ? " entry\n" : " entries\n");
  return 0;
}

int run_verify_all(const std::string& format, const std::string& cache_dir, bool no_cache) {
  for (const LieType& t : all_types(8)) acquire_table(t, cache_dir, no_cache);
  const auto results = verify::run_all();
  int failures = 0;
  for (const auto& r : results)
    if (!r.pass) ++failures;
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : results)
      rows.push_back({{"index", r.index}, {"name", r.name}, {"pass", r.pass},
                      {"details", r.details}});
    emit(json{{"criteria", rows}, {"failures", failures}});
    return failures == 0 ? 0 : 1;
  }
  for (const auto& r : results) std::cout << verify::render(r);
  std::cout << (11 - failures) << "/11 criteria pass\n";
  return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"eccq: elliptic central characters of quantum affine algebras"};
  app.require_subcommand(1);

  std::string type_str, format = "text", cache_dir, left, right, spec_text;
  std::string cache_type;
  int i = 0, j = 0, window = 0, count = 0;
  bool no_cache = false, verify_appendix = false;
  std::vector<int> factor_nodes;

  const auto add_common = [&](CLI::App* sub, bool with_cache = true) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    if (with_cache) {
      sub->add_option("--cache-dir", cache_dir, "cache directory (env ECCQ_CACHE_DIR)");
      sub->add_flag("--no-cache", no_cache, "bypass the disk cache");
    }
  };
  const auto add_type = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--type", type_str, "Lie type (A1..D8, E6..E8, F4, G2)");
    if (required) opt->required();
  };

  auto* sc_cartan = app.add_subcommand("cartan", "print the Cartan datum of a type");
  add_type(sc_cartan);
  add_common(sc_cartan, false);

  auto* sc_mq = app.add_subcommand("mq", "print the pairing matrix M(q)");
  add_type(sc_mq);
  sc_mq->add_flag("--verify-appendix", verify_appendix,
                  "check M(q) against the recorded closed-form tables");
  add_common(sc_mq);

  auto* sc_divisor = app.add_subcommand("divisor", "print one character divisor");
  add_type(sc_divisor);
  sc_divisor->add_option("--i", i, "first node (1-based)")->required();
  sc_divisor->add_option("--j", j, "second node (1-based)")->required();
  add_common(sc_divisor);

  auto* sc_table = app.add_subcommand("table", "print all character divisors of a type");
  add_type(sc_table);
  add_common(sc_table);

  auto* sc_tmatrix = app.add_subcommand("tmatrix", "print the shifted-character matrix T");
  add_type(sc_tmatrix);
  sc_tmatrix->add_option("--window", window, "entries per row (default: preset)");
  sc_tmatrix->add_option("--count", count, "number of rows (default: preset)");
  add_common(sc_tmatrix);

  auto* sc_relations = app.add_subcommand(
      "relations", "determinant/rank/kernel analysis of the shifted-character system");
  add_type(sc_relations);
  add_common(sc_relations);

  auto* sc_linked = app.add_subcommand("linked", "decide whether two tensor specs are linked");
  add_type(sc_linked, false);
  sc_linked->add_option("--left", left, "left tensor spec")->required();
  sc_linked->add_option("--right", right, "right tensor spec")->required();
  add_common(sc_linked);

  auto* sc_ecc = app.add_subcommand("ecc", "print the elliptic central character of a spec");
  add_type(sc_ecc, false);
  sc_ecc->add_option("--left", spec_text, "tensor spec to evaluate")->required();
  add_common(sc_ecc);

  auto* sc_fundmatch =
      app.add_subcommand("fundmatch", "match pole classes of a pair against fundamentals");
  add_type(sc_fundmatch);
  sc_fundmatch->add_option("--i", i, "first node (1-based)")->required();
  sc_fundmatch->add_option("--j", j, "second node (1-based)")->required();
  add_common(sc_fundmatch);

  auto* sc_table2 =
      app.add_subcommand("table2", "compare the E8 fundamental-match table with the record");
  sc_table2->add_option("--type", type_str, "must be E8")->default_str("E8");
  add_common(sc_table2);

  auto* sc_search =
      app.add_subcommand("search", "search for a product of fundamentals matching a target");
  add_type(sc_search);
  sc_search->add_option("--i", factor_nodes, "factor node (repeat for multiple factors)")
      ->required();
  sc_search->add_option("--j", j, "target node")->required();
  add_common(sc_search);

  auto* sc_subreps =
      app.add_subcommand("subreps", "check the recorded subrepresentation identities");
  add_type(sc_subreps);
  add_common(sc_subreps);

  auto* sc_cache = app.add_subcommand("cache", "inspect or clear the disk cache");
  sc_cache->require_subcommand(1);
  auto* sc_cache_inspect = sc_cache->add_subcommand("inspect", "list cached entries");
  sc_cache_inspect->add_option("--cache-dir", cache_dir, "cache directory");
  sc_cache_inspect->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  auto* sc_cache_clear = sc_cache->add_subcommand("clear", "remove cached entries");
  sc_cache_clear->add_option("--cache-dir", cache_dir, "cache directory");
  sc_cache_clear->add_option("--type", cache_type, "clear a single type only");
  sc_cache_clear->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* sc_verify = app.add_subcommand("verify-all", "run the full verification suite");
  add_common(sc_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sc_cartan->parsed()) return run_cartan(parse_type(type_str), format);
    if (sc_mq->parsed())
      return run_mq(parse_type(type_str), verify_appendix, format, cache_dir, no_cache);
    if (sc_divisor->parsed())
      return run_divisor(parse_type(type_str), i, j, format, cache_dir, no_cache);
    if (sc_table->parsed()) return run_table(parse_type(type_str), format, cache_dir, no_cache);
    if (sc_tmatrix->parsed())
      return run_tmatrix(parse_type(type_str), window, count, format, cache_dir, no_cache);
    if (sc_relations->parsed())
      return run_relations(parse_type(type_str), format, cache_dir, no_cache);
    if (sc_linked->parsed()) {
      std::optional<LieType> t;
      if (!type_str.empty()) t = parse_type(type_str);
      return run_linked(t, left, right, format, cache_dir, no_cache);
    }
    if (sc_ecc->parsed()) {
      std::optional<LieType> t;
      if (!type_str.empty()) t = parse_type(type_str);
      return run_ecc(t, spec_text, format, cache_dir, no_cache);
    }
    if (sc_fundmatch->parsed())
      return run_fundmatch(parse_type(type_str), i, j, format, cache_dir, no_cache);
    if (sc_table2->parsed()) {
      const LieType t = type_str.empty() ? LieType{Series::E, 8} : parse_type(type_str);
      return run_table2(t, format, cache_dir, no_cache);
    }
    if (sc_search->parsed())
      return run_search(parse_type(type_str), factor_nodes, j, format, cache_dir, no_cache);
    if (sc_subreps->parsed())
      return run_subreps(parse_type(type_str), format, cache_dir, no_cache);
    if (sc_cache_inspect->parsed()) return run_cache_inspect(cache_dir, format);
    if (sc_cache_clear->parsed()) return run_cache_clear(cache_dir, cache_type, format);
    if (sc_verify->parsed()) return run_verify_all(format, cache_dir, no_cache);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cerr << "error: no verb selected\n";
  return 2;
}
