#pragma once

// cache.hpp: on-disk cache for the pi matrices.  One JSON document per type,
// each pi entry stored as a list of [exponent, numerator, denominator]
// triples in ascending exponent order.  Writes are atomic (temp file +
// rename) so concurrent readers never observe partial documents.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "eccq/cartan.hpp"
#include "eccq/laurent.hpp"
#include "eccq/polymat.hpp"

namespace eccq {
namespace cache {

constexpr int kFormatVersion = 1;
constexpr const char* kEnvVar = "ECCQ_CACHE_DIR";

// Directory resolution: explicit value, then the ECCQ_CACHE_DIR environment
// variable, then the per-user cache directory.
inline std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv(kEnvVar); env && *env)
    return std::filesystem::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "eccq";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "eccq";
  return std::filesystem::current_path() / ".eccq-cache";
}

inline std::filesystem::path resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return std::filesystem::path(flag_value);
  return default_cache_dir();
}

inline std::filesystem::path entry_path(const std::filesystem::path& dir, const LieType& type) {
  return dir / (type.str() + ".json");
}

namespace detail {

inline nlohmann::json laurent_to_triples(const Laurent& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) {
    const Int num = boost::multiprecision::numerator(c);
    const Int den = boost::multiprecision::denominator(c);
    out.push_back({e, num.convert_to<long long>(), den.convert_to<long long>()});
  }
  return out;
}

inline std::optional<Laurent> laurent_from_triples(const nlohmann::json& arr) {
  if (!arr.is_array()) return std::nullopt;
  Laurent f;
  long long prev_exp = 0;
  bool first = true;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number_integer() || !t[2].is_number_integer())
      return std::nullopt;
    const long long e = t[0].get<long long>();
    const long long num = t[1].get<long long>();
    const long long den = t[2].get<long long>();
    if (den == 0 || num == 0) return std::nullopt;
    if (!first && e <= prev_exp) return std::nullopt;
    first = false;
    prev_exp = e;
    f += Laurent::monomial(Rational(Int(num), Int(den)), static_cast<int>(e));
  }
  return f;
}

} // namespace detail

// Serializes the pi matrix for one type.  Returns false when the directory
// or file cannot be written.
inline bool save_pi(const std::filesystem::path& dir, const CartanData& cd,
                    const LaurentMatrix& pi) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec && !std::filesystem::is_directory(dir)) return false;

  nlohmann::json doc;
  doc["format"] = kFormatVersion;
  doc["type"] = cd.type.str();
  doc["period"] = cd.period;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : pi) {
    nlohmann::json r = nlohmann::json::array();
    for (const Laurent& f : row) r.push_back(detail::laurent_to_triples(f));
    rows.push_back(std::move(r));
  }
  doc["pi"] = std::move(rows);

  const std::filesystem::path final_path = entry_path(dir, cd.type);
  const std::filesystem::path tmp_path =
      final_path.string() + ".tmp." + std::to_string(static_cast<long long>(::getpid()));
  {
    std::ofstream out(tmp_path, std::ios::trunc);
    if (!out) return false;
    out << doc.dump(2) << '\n';
    if (!out) return false;
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) {
    std::filesystem::remove(tmp_path, ec);
    return false;
  }
  return true;
}

// Loads and validates a cached pi matrix.  Any structural mismatch (wrong
// type, period, dimensions, or malformed triples) yields nullopt so the
// caller recomputes and overwrites.
inline std::optional<LaurentMatrix> load_pi(const std::filesystem::path& dir,
                                            const CartanData& cd) {
  std::ifstream in(entry_path(dir, cd.type));
  if (!in) return std::nullopt;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  if (!doc.is_object() || doc.value("format", -1) != kFormatVersion ||
      doc.value("type", std::string()) != cd.type.str() ||
      doc.value("period", -1) != cd.period || !doc.contains("pi"))
    return std::nullopt;
  const nlohmann::json& rows = doc["pi"];
  const size_t n = static_cast<size_t>(cd.n);
  if (!rows.is_array() || rows.size() != n) return std::nullopt;
  LaurentMatrix pi(n, std::vector<Laurent>(n));
  for (size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) return std::nullopt;
    for (size_t j = 0; j < n; ++j) {
      auto f = detail::laurent_from_triples(rows[i][j]);
      if (!f) return std::nullopt;
      pi[i][j] = *f;
    }
  }
  return pi;
}

struct EntryInfo {
  std::string type;
  bool present = false;
  std::uintmax_t size = 0;
  std::string path;
};

inline std::vector<EntryInfo> inspect(const std::filesystem::path& dir, int max_rank = 8) {
  std::vector<EntryInfo> out;
  for (const LieType& t : all_types(max_rank)) {
    EntryInfo info;
    info.type = t.str();
    const std::filesystem::path p = entry_path(dir, t);
    info.path = p.string();
    std::error_code ec;
    if (std::filesystem::is_regular_file(p, ec)) {
      info.present = true;
      info.size = std::filesystem::file_size(p, ec);
    }
    out.push_back(std::move(info));
  }
  return out;
}

// Removes cached documents (only files named after known types are touched).
inline int clear(const std::filesystem::path& dir,
                 std::optional<LieType> only = std::nullopt, int max_rank = 8) {
  int removed = 0;
  for (const LieType& t : all_types(max_rank)) {
    if (only && !(*only == t)) continue;
    std::error_code ec;
    if (std::filesystem::remove(entry_path(dir, t), ec)) ++removed;
  }
  return removed;
}

} // namespace cache
} // namespace eccq
