#include <doctest.h>

#include <singmon/catalog.hpp>
#include <singmon/errors.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

using namespace singmon;

namespace {

std::filesystem::path write_temp(const std::string& stem, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / stem;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("kleinian series entries") {
  const CatalogEntry a1 = kleinian_a(1);
  CHECK(a1.name == "A1");
  CHECK(a1.group == "C_2");
  CHECK(a1.weights == std::vector<std::int64_t>{1, 1, 1});
  CHECK(a1.degrees == std::vector<std::int64_t>{2});
  CHECK(a1.alphas.empty());
  CHECK(a1.genus == 0);
  CHECK(a1.b == 2);
  CHECK(a1.exponent == -1);
  CHECK(a1.pi_a == "2/1");
  CHECK(!a1.pi_m.has_value());

  const CatalogEntry a2 = kleinian_a(2);
  CHECK(a2.group == "C_3");
  CHECK(a2.weights == std::vector<std::int64_t>{2, 3, 3});
  CHECK(a2.alphas == std::vector<std::int64_t>{3, 3});
  CHECK(a2.b == 1);
  CHECK(a2.exponent == -2);
  CHECK(a2.pi_a == "6/2");

  const CatalogEntry a7 = kleinian_a(7);
  CHECK(a7.weights == std::vector<std::int64_t>{1, 4, 4});
  CHECK(a7.degrees == std::vector<std::int64_t>{8});
  CHECK(a7.pi_a == "8/1");

  const CatalogEntry d4 = kleinian_d(4);
  CHECK(d4.name == "D4");
  CHECK(d4.group == "D_2");
  CHECK(d4.weights == std::vector<std::int64_t>{2, 2, 3});
  CHECK(d4.degrees == std::vector<std::int64_t>{6});
  CHECK(d4.alphas == std::vector<std::int64_t>{2, 2, 2});
  CHECK(d4.b == 2);
  CHECK(d4.exponent == -1);

  // The three exceptional rows ride along with the two series.
  const auto entries = kleinian_entries(10, 9);
  CHECK(entries.size() == 19);
  CHECK(entries.front().name == "A1");
  CHECK(entries.back().name == "E8");
}

TEST_CASE("named catalog lookup") {
  const CatalogEntry e8 = lookup("E8");
  CHECK(e8.group == "I");
  CHECK(e8.weights == std::vector<std::int64_t>{6, 10, 15});
  CHECK(e8.degrees == std::vector<std::int64_t>{30});
  CHECK(e8.alphas == std::vector<std::int64_t>{2, 3, 5});
  CHECK(e8.genus == 0);
  CHECK(e8.b == 2);
  CHECK(e8.exponent == -1);
  CHECK(e8.pi_a == "2*3*5*30/1*6*10*15");

  const CatalogEntry elliptic = lookup("E~8");
  CHECK(elliptic.weights == std::vector<std::int64_t>{1, 2, 3});
  CHECK(elliptic.genus == 1);
  CHECK(elliptic.b == 1);
  CHECK(elliptic.exponent == 0);
  CHECK(elliptic.pi_a == "1*6/2*3");
  REQUIRE(elliptic.pi_m.has_value());
  CHECK(*elliptic.pi_m == "2*3*6/1");

  // Decorated names normalize: precomposed and combining-tilde spellings.
  CHECK(lookup("\xE1\xBA\xBC"
               "8") == elliptic);
  CHECK(lookup("E\xCC\x83"
               "8") == elliptic);

  CHECK_THROWS_AS(lookup("Z9"), UnknownEntry);
  CHECK_THROWS_AS(lookup("A9"), UnknownEntry);
}

TEST_CASE("default catalog matches the shipped data file") {
  const auto defaults = default_entries();
  CHECK(defaults.size() == 20);
  CHECK(defaults.front().name == "A1");
  CHECK(defaults.back().name == "D~5");

  const auto elliptics = elliptic_entries();
  REQUIRE(elliptics.size() == 4);
  CHECK(elliptics[0].name == "E~8");
  CHECK(elliptics[3].name == "D~5");

  CHECK(load_catalog_file(SINGMON_CATALOG_JSON) == defaults);
}

TEST_CASE("catalog file error handling") {
  CHECK_THROWS_AS(load_catalog_file("/nonexistent/catalog.json"), ParseError);

  const auto garbled = write_temp("singmon_test_garbled.json", "not json at all");
  CHECK_THROWS_AS(load_catalog_file(garbled.string()), ParseError);

  const auto missing =
      write_temp("singmon_test_missing.json", R"([{"name": "X", "group": ""}])");
  CHECK_THROWS_AS(load_catalog_file(missing.string()), ParseError);

  std::remove(garbled.string().c_str());
  std::remove(missing.string().c_str());
}

TEST_CASE("validation recomputes every entry") {
  const CatalogReport report = validate_all(default_entries());
  CHECK(report.ok);
  REQUIRE(report.checks.size() == 20);
  for (const auto& c : report.checks) {
    CHECK(c.ok);
    CHECK(c.exponent_matches);
    CHECK(c.alphas_match);
    CHECK(c.genus_matches);
    CHECK(c.b_matches);
    CHECK(c.phi_matches);
    CHECK(c.duality_ok);
    CHECK(c.pi_m_matches);
  }
}

TEST_CASE("validation flags corrupted entries") {
  auto entries = default_entries();

  entries[0].pi_a = "3/1";
  CatalogReport report = validate_all(entries);
  CHECK(!report.ok);
  CHECK(!report.checks[0].ok);
  CHECK(!report.checks[0].phi_matches);
  CHECK(report.checks[1].ok);

  entries = default_entries();
  entries[1].b = 7;
  report = validate_all(entries);
  CHECK(!report.checks[1].b_matches);

  entries = default_entries();
  entries[1].alphas = {2, 2};
  report = validate_all(entries);
  CHECK(!report.checks[1].ok);

  // A broken weight system must not abort the whole report.
  entries = default_entries();
  entries[2].weights = {1, 4, 5};
  entries[2].degrees = {10};
  report = validate_all(entries);
  CHECK(!report.checks[2].ok);
  CHECK(report.checks[3].ok);
}
