// Disk cache for the pairing-matrix numerators: exact round trips,
// corruption rejection, directory resolution precedence, inspect/clear.

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "eccq/cache.hpp"
#include "eccq/cartan.hpp"
#include "eccq/polymat.hpp"

using namespace eccq;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("eccq-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

} // namespace

TEST_CASE("save and load round-trip exactly") {
  TempDir tmp;
  const CartanData cd = cartan_data(LieType::parse("B2"));
  const LaurentMatrix pi = pi_matrix(cd);
  REQUIRE(cache::save_pi(tmp.path, cd, pi));
  const auto loaded = cache::load_pi(tmp.path, cd);
  REQUIRE(loaded.has_value());
  REQUIRE(*loaded == pi);
}

TEST_CASE("loading a missing or foreign entry yields nothing") {
  TempDir tmp;
  const CartanData b2 = cartan_data(LieType::parse("B2"));
  const CartanData a2 = cartan_data(LieType::parse("A2"));
  REQUIRE_FALSE(cache::load_pi(tmp.path, b2).has_value());
  // An entry saved for one type does not satisfy another.
  REQUIRE(cache::save_pi(tmp.path, b2, pi_matrix(b2)));
  REQUIRE_FALSE(cache::load_pi(tmp.path, a2).has_value());
}

TEST_CASE("corrupted documents are rejected, not trusted") {
  TempDir tmp;
  const CartanData cd = cartan_data(LieType::parse("A2"));
  REQUIRE(cache::save_pi(tmp.path, cd, pi_matrix(cd)));
  const fs::path entry = cache::entry_path(tmp.path, cd.type);

  const auto overwrite = [&](const std::string& text) {
    std::ofstream out(entry, std::ios::trunc);
    out << text;
  };
  overwrite("not json at all");
  REQUIRE_FALSE(cache::load_pi(tmp.path, cd).has_value());
  overwrite("{}");
  REQUIRE_FALSE(cache::load_pi(tmp.path, cd).has_value());
  overwrite(R"({"format":999,"type":"A2","period":6,"pi":[]})");
  REQUIRE_FALSE(cache::load_pi(tmp.path, cd).has_value());
  // Wrong dimensions.
  overwrite(R"({"format":1,"type":"A2","period":6,"pi":[[[[0,1,1]]]]})");
  REQUIRE_FALSE(cache::load_pi(tmp.path, cd).has_value());
}

TEST_CASE("inspect and clear") {
  TempDir tmp;
  const CartanData a2 = cartan_data(LieType::parse("A2"));
  const CartanData b2 = cartan_data(LieType::parse("B2"));
  REQUIRE(cache::save_pi(tmp.path, a2, pi_matrix(a2)));
  REQUIRE(cache::save_pi(tmp.path, b2, pi_matrix(b2)));

  int present = 0;
  for (const auto& e : cache::inspect(tmp.path))
    if (e.present) ++present;
  REQUIRE(present == 2);

  // Clearing one type leaves the other.
  REQUIRE(cache::clear(tmp.path, LieType::parse("A2")) == 1);
  REQUIRE_FALSE(cache::load_pi(tmp.path, a2).has_value());
  REQUIRE(cache::load_pi(tmp.path, b2).has_value());
  // Clearing everything.
  REQUIRE(cache::clear(tmp.path) == 1);
  REQUIRE(cache::clear(tmp.path) == 0);
}

TEST_CASE("directory resolution precedence: flag over environment") {
  TempDir tmp;
  const std::string env_dir = (tmp.path / "from-env").string();
  const std::string flag_dir = (tmp.path / "from-flag").string();
  ::setenv("ECCQ_CACHE_DIR", env_dir.c_str(), 1);
  REQUIRE(cache::resolve_cache_dir(flag_dir) == fs::path(flag_dir));
  REQUIRE(cache::resolve_cache_dir("") == fs::path(env_dir));
  ::unsetenv("ECCQ_CACHE_DIR");
  REQUIRE(cache::resolve_cache_dir(flag_dir) == fs::path(flag_dir));
}
