#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sl2hilb/cli/cache.hpp"
#include "sl2hilb/cli/commands.hpp"
#include "sl2hilb/cli/fixtures.hpp"
#include "sl2hilb/cli/format.hpp"
#include "sl2hilb/cli/hilbert_result.hpp"

using namespace sl2hilb;
using namespace sl2hilb::cli;
using repmodel::parse_rep;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json golden(const std::string& name) {
  std::ifstream in(fs::path(SL2HILB_GOLDEN_DIR) / (name + ".json"));
  REQUIRE(in.good());
  return nlohmann::ordered_json::parse(in);
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("sl2hilb-test-" + std::to_string(std::rand()) + "-" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("JSON matches the golden files") {
    for (const char* r : {"V5", "V2+2V3", "3V1"}) {
      CAPTURE(r);
      CHECK(to_json(compute_result(parse_rep(r))) == golden(r));
    }
  }

  TEST_CASE("JSON round trip") {
    for (const char* r : {"V5", "V2+2V3", "V0+V3", "2V0", "V1+V2", "V12"}) {
      CAPTURE(r);
      HilbertResult a = compute_result(parse_rep(r));
      HilbertResult b = from_json(nlohmann::ordered_json::parse(to_json(a).dump()));
      CHECK(same_result(a, b));
      CHECK(to_json(b) == to_json(a));
    }
  }

  TEST_CASE("malformed JSON is rejected") {
    auto j = to_json(compute_result(parse_rep("V5")));
    auto missing = j;
    missing.erase("gamma");
    CHECK_THROWS_AS(from_json(missing), std::invalid_argument);
    auto bad_gamma = j;
    bad_gamma["gamma"][0] = "1/0";
    CHECK_THROWS_AS(from_json(bad_gamma), std::invalid_argument);
    CHECK_THROWS_AS(from_json(nlohmann::ordered_json::array()), std::invalid_argument);
  }

  TEST_CASE("trivial summands in the JSON form") {
    auto j = to_json(compute_result(parse_rep("V0+V3")));
    CHECK(j["rep"] == nlohmann::ordered_json::array({0, 3}));
    CHECK(j["methods"][0] == "SeriesFallback");
  }

  TEST_CASE("cache round trip") {
    TempDir tmp;
    ResultCache cache(tmp.path / "c");
    auto rep = parse_rep("V3+V4");
    CHECK_FALSE(cache.load(rep).has_value());
    HilbertResult r = compute_result(rep);
    cache.store(r);
    REQUIRE(fs::exists(cache.entry_path(rep)));
    auto back = cache.load(parse_rep("V4+V3"));
    REQUIRE(back.has_value());
    CHECK(same_result(*back, r));
    CHECK_FALSE(cache.load(parse_rep("V3+V5")).has_value());

    // an entry written by an older layout is ignored
    nlohmann::ordered_json stale;
    {
      std::ifstream in(cache.entry_path(rep));
      stale = nlohmann::ordered_json::parse(in);
    }
    stale["cache_version"] = ResultCache::kCacheVersion - 1;
    std::ofstream(cache.entry_path(rep)) << stale.dump();
    CHECK_FALSE(cache.load(rep).has_value());

    std::ofstream(cache.entry_path(rep)) << "{ not json";
    CHECK_FALSE(cache.load(rep).has_value());
  }

  TEST_CASE("cache keyed by the wrong representation") {
    TempDir tmp;
    ResultCache cache(tmp.path);
    HilbertResult r = compute_result(parse_rep("V5"));
    cache.store(r);
    fs::copy_file(cache.entry_path(parse_rep("V5")), cache.entry_path(parse_rep("V6")));
    CHECK_FALSE(cache.load(parse_rep("V6")).has_value());
  }

  TEST_CASE("formatting") {
    using exactalg::FactoredDenominator;
    using exactalg::Polynomial;
    using exactalg::RationalFunction;
    CHECK(format_series(RationalFunction(Polynomial::constant(1), FactoredDenominator(std::map<int, int>{{1, 1}}))) ==
          "1 / (1 - t)");
    CHECK(format_denominator(FactoredDenominator(std::map<int, int>{{2, 2}, {3, 1}})) == "(1 - t^2)^2(1 - t^3)");
    CHECK(format_denominator(FactoredDenominator{}) == "1");
    CHECK(format_polynomial(Polynomial{1, 0, 0, 0, 2}) == "2*t^4 + 1");
    CHECK(format_polynomial(Polynomial{}) == "0");
    CHECK(format_rational(Rational(-3, 4)) == "-3/4");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK(format_rational(Rational(1, 192), Style::Latex) == "\\frac{1}{192}");
    CHECK(format_series(RationalFunction{}) == "0");
  }

  TEST_CASE("table fixtures") {
    CHECK(table_fixtures().size() == 16);
    for (const auto& row : check_table(table_fixtures())) {
      CAPTURE(row.rep);
      CHECK(row.ok());
    }
    auto tampered = table_fixtures();
    tampered[3].gamma[2] = "1/3";
    tampered[7].a_invariant += 1;
    auto reports = check_table(tampered);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      CAPTURE(reports[i].rep);
      CHECK(reports[i].ok() == (i != 3 && i != 7));
    }
  }

  TEST_CASE("exit codes") {
    CHECK(run({"series", "V3+W2"}).code == kExitUsage);
    CHECK(run({"series", "V3+W2"}).err.find("position 3") != std::string::npos);
    CHECK(run({"gamma", "V0+V2"}).code == kExitUsage);
    CHECK(run({"bogus"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"series", "V5", "--terms", "-1"}).code == kExitUsage);
    CHECK(run({"--version"}).code == kExitOk);

    Run table = run({"table"});
    CHECK(table.code == kExitOk);
    CHECK(table.out.find("16/16 rows match") != std::string::npos);

    CHECK(run({"verify", "2V3"}).code == kExitOk);
    CHECK(run({"verify", "V9", "--draws", "100"}).code == kExitOk);
    CHECK(run({"verify", "V0+V4"}).code == kExitOk);
  }

  TEST_CASE("series and expand output") {
    Run v0 = run({"series", "V0"});
    CHECK(v0.code == kExitOk);
    CHECK(v0.out.find("Hilb(V0) = 1 / (1 - t)") != std::string::npos);

    Run e = run({"expand", "V0+V2", "--terms", "5"});
    CHECK(e.out == "1 + t + 2*t^2 + 2*t^3 + 3*t^4 + O(t^5)\n");

    Run j = run({"series", "V5", "--format", "json"});
    CHECK(nlohmann::ordered_json::parse(j.out) == golden("V5"));
  }

  TEST_CASE("verify is deterministic for a fixed seed") {
    VerifyOptions opt;
    opt.seed = 12345;
    auto a = verify_representation(parse_rep("V2+V5"), opt);
    auto b = verify_representation(parse_rep("V2+V5"), opt);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].ok);
      CHECK(a[i].name == b[i].name);
      CHECK(a[i].detail == b[i].detail);
    }
    CHECK(run({"verify", "V6", "--seed", "7"}).out == run({"verify", "V6", "--seed", "7"}).out);
  }
}
