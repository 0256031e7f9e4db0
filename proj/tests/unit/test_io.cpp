#include <doctest.h>

#include <filesystem>
#include <random>

#include "sphmra/io.hpp"
#include "sphmra/mra.hpp"
#include "sphmra/transform.hpp"

using namespace sphmra;

TEST_SUITE("io") {
  TEST_CASE("spectrum round trip") {
    const SphereGeometry g(3);
    Spectrum s(g, 3);
    s.entries[{0, {0, 0}, 1}] = {0.1, -0.2};
    s.entries[{3, {2, 1}, -1}] = {1.0 / 3.0, 1e-300};
    const auto back = io::spectrum_from_json(io::to_json(s));
    CHECK(back.geometry == g);
    CHECK(back.level == 3);
    CHECK(back.entries == s.entries);
  }

  TEST_CASE("signal and pyramid round trip") {
    const SphereGeometry g(2);
    std::mt19937 rng(1);
    std::normal_distribution<double> normal;
    GridSignal v(g, 3);
    for (auto& x : v.values) {
      x = {normal(rng), normal(rng)};
    }
    const auto back = io::signal_from_json(io::to_json(v));
    CHECK(back.values == v.values);
    const auto p = transform::pyramid_decompose(mra::synthesize_on_grid(mra::analyze(v), 3));
    const auto q = io::pyramid_from_json(io::to_json(p));
    CHECK(q.base.values == p.base.values);
    REQUIRE(q.details.size() == p.details.size());
    CHECK(q.details[1].values == p.details[1].values);
  }

  TEST_CASE("zonal spectra") {
    const auto z = io::zonal_from_json(io::json::parse(R"({"n": 3, "coeffs": [1, [0.5, -2]]})"));
    CHECK(z.lambda == 1.0);
    CHECK(z.coeffs == std::vector<complex>{1.0, {0.5, -2.0}});
    const auto w = io::zonal_from_json(io::json::parse(R"({"lambda": 2.5, "coeffs": [3]})"));
    CHECK(w.lambda == 2.5);
    CHECK(io::zonal_from_json(io::to_json(w)).coeffs == w.coeffs);
  }

  TEST_CASE("malformed documents") {
    CHECK_THROWS(io::spectrum_from_json(io::json::parse(R"({"n": 2})")));
    CHECK_THROWS(io::signal_from_json(io::json::parse(R"({"n": 2, "j": 1, "values": [[1, 0]]})")));
    CHECK_THROWS(io::spectrum_from_json(io::json::parse(
        R"({"n": 2, "j": 1, "entries": [{"l": 1, "k": [2], "sign": 1, "re": 1, "im": 0}]})")));
    CHECK_THROWS(io::zonal_from_json(io::json::parse(R"({"coeffs": [1]})")));
  }

  TEST_CASE("files") {
    const auto path = std::filesystem::temp_directory_path() / "sphmra_io_test.json";
    io::write_json_file(path.string(), io::json{{"a", 1}});
    CHECK(io::read_json_file(path.string())["a"] == 1);
    std::filesystem::remove(path);
    CHECK_THROWS(io::read_json_file(path.string()));
  }
}
