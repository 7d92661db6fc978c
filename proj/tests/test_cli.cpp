#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "curv2k/cli.hpp"
#include "curv2k/descriptor.hpp"
#include "curv2k/error.hpp"
#include "curv2k/examples.hpp"

using namespace curv2k;
using nlohmann::json;

namespace {

const std::string kData = CURV2K_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

json read_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return json::parse(in);
}

// Strings, integers, booleans and keys exactly; floating values to 1e-12
// relative, so goldens survive a different summation order.
bool same_document(const json& a, const json& b, const std::string& where = "$") {
  if (a.is_number_float() || b.is_number_float()) {
    if (!a.is_number() || !b.is_number()) return false;
    const double x = a.get<double>(), y = b.get<double>();
    const bool ok = std::abs(x - y) <= 1e-12 * std::max(1.0, std::max(std::abs(x), std::abs(y)));
    if (!ok) MESSAGE(where << ": " << x << " vs " << y);
    return ok;
  }
  if (a.type() != b.type()) {
    MESSAGE(where << ": type differs");
    return false;
  }
  if (a.is_object()) {
    if (a.size() != b.size()) return false;
    for (const auto& [k, v] : a.items()) {
      if (!b.contains(k) || !same_document(v, b.at(k), where + "." + k)) return false;
    }
    return true;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!same_document(a[i], b[i], where + "[" + std::to_string(i) + "]")) return false;
    return true;
  }
  const bool ok = a == b;
  if (!ok) MESSAGE(where << ": " << a.dump() << " vs " << b.dump());
  return ok;
}

void check_golden(const std::vector<std::string>& args, const std::string& golden) {
  const Result r = run_cli(args);
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(same_document(json::parse(r.out), read_json(data("golden/" + golden))));
  CHECK(run_cli(args).out == r.out);
}

}  // namespace

TEST_CASE("golden reports") {
  check_golden({"classify", data("s3xr.json"), "--alpha", "line", "--alpha", "A", "--alpha", "4",
                "--no-timing"},
               "classify_s3xr.json");
  check_golden({"spectrum", data("cp1xcp1.json"), "--no-timing"}, "spectrum_cp1xcp1.json");
  check_golden({"classify", data("cp1xcp1.json"), "--alpha", "B", "--alpha", "6", "--no-timing"},
               "classify_cp1xcp1.json");
  check_golden({"threshold", data("cp2.json"), "--no-timing"}, "threshold_cp2.json");
  check_golden({"verify", "line", "--samples", "20", "--seed", "5"}, "verify_line.json");
  check_golden({"verify", "product-structure", data("cp2xcp1.json")},
               "verify_product_structure.json");
}

TEST_CASE("classify resolves symbolic alpha") {
  const Result r = run_cli({"classify", data("s3xr.json"), "--alpha", "line"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["classifications"][0]["alpha"].get<double>() == 4.5);
  CHECK(doc["classifications"][0]["verdict"] == "nonnegative");
  CHECK(doc.contains("timing"));
}

TEST_CASE("spectrum report invariants") {
  for (const char* f : {"s3xr.json", "cp1xcp1.json", "cp2.json", "s2xs2.json", "h3xr.json",
                        "cp2xcp1.json", "custom_s2.json"}) {
    const Result r = run_cli({"spectrum", data(f)});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    std::size_t total = 0;
    for (const auto& c : doc["spectrum"]) total += c["multiplicity"].get<std::size_t>();
    CHECK(total == doc["N"].get<std::size_t>());
    // The echoed input re-parses to the same descriptor.
    CHECK(parse_descriptor(doc["input"].dump()) == load_descriptor(data(f)));
    if (!doc["closed_form"].is_null()) CHECK(doc["closed_form"]["match"] == true);
  }
  const json cp = json::parse(run_cli({"spectrum", data("cp1xcp1.json")}).out);
  const json want = json::parse(R"([{"value":-4,"multiplicity":1},{"value":0,"multiplicity":4},
                                     {"value":4,"multiplicity":4}])");
  REQUIRE(cp["spectrum"].size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(cp["spectrum"][k]["multiplicity"] == want[k]["multiplicity"]);
    CHECK(std::abs(cp["spectrum"][k]["value"].get<double>() - want[k]["value"].get<double>()) <
          1e-9);
  }
}

TEST_CASE("descriptor parsing") {
  SUBCASE("round trip") {
    const char* docs[] = {
        R"({"kind":"product","factors":[{"kind":"sphere","dim":3,"kappa":1},{"kind":"euclidean","dim":1}]})",
        R"({"kind":"cp","m":2,"kappa":1})",
        R"({"kind":"ch","m":1,"kappa":0.1})",
        R"({"kind":"product","factors":[{"kind":"hyperbolic","dim":2,"kappa":3},{"kind":"complex_euclidean","m":1},{"kind":"sphere","dim":2,"kappa":0.3333333333333333}]})",
    };
    for (const char* text : docs) {
      const auto d = parse_descriptor(text);
      CHECK(parse_descriptor(to_json(d).dump()) == d);
    }
  }
  SUBCASE("signs and dimensions") {
    const auto h = parse_descriptor(R"({"kind":"hyperbolic","dim":3,"kappa":2})");
    CHECK(build_tensor(h)(0, 1, 0, 1) == -2.0);
    const auto p = parse_descriptor(
        R"({"kind":"product","factors":[{"kind":"cp","m":2,"kappa":1},{"kind":"euclidean","dim":1}]})");
    CHECK(p.real_dim() == 5);
    CHECK(build_tensor(p).dim() == 5);
  }
  SUBCASE("validation errors") {
    CHECK_THROWS_AS(parse_descriptor(R"({"kind":"sphere","dim":1,"kappa":1})"), ValidationError);
    CHECK_THROWS_AS(parse_descriptor(R"({"kind":"sphere","dim":2,"kappa":-1})"), ValidationError);
    CHECK_THROWS_AS(parse_descriptor(R"({"kind":"cp","m":0,"kappa":1})"), ValidationError);
    CHECK_THROWS_AS(parse_descriptor(R"({"kind":"product","factors":[{"kind":"euclidean","dim":1}]})"),
                    ValidationError);
    CHECK_THROWS_AS(load_descriptor(data("bad_custom.json")), ValidationError);
  }
  SUBCASE("parse errors name the path") {
    auto path_of = [](const char* text) {
      try {
        (void)parse_descriptor(text);
      } catch (const ParseError& e) {
        return e.path();
      }
      return std::string("no error");
    };
    CHECK(path_of(R"({"kind":"torus"})") == "$.kind");
    CHECK(path_of(R"({"kind":"sphere","dim":3})") == "$.kappa");
    CHECK(path_of(R"({"kind":"sphere","dim":3,"kappa":1,"extra":0})") == "$.extra");
    CHECK(path_of(R"({"kind":"product","factors":[{"kind":"sphere","dim":2,"kappa":1},{"kind":"sphere","dim":2.5,"kappa":1}]})") ==
          "$.factors[1].dim");
    CHECK(path_of(R"({"kind":"custom","dim":1,"components":[0,"x"]})") == "$.components[1]");
    CHECK(path_of("[1,2") == "$");
    CHECK(path_of("[]") == "$");
  }
  SUBCASE("symbolic alpha") {
    const auto s3xr = load_descriptor(data("s3xr.json"));
    CHECK(resolve_alpha("line", s3xr) == 4.5);
    CHECK(resolve_alpha("A", s3xr) == 4.5);
    CHECK(resolve_alpha("2.25", s3xr) == 2.25);
    CHECK_THROWS_AS(resolve_alpha("B", s3xr), InvalidInput);
    CHECK_THROWS_AS(resolve_alpha("4.5x", s3xr), InvalidInput);
    CHECK(resolve_alpha("B", load_descriptor(data("cp2xcp1.json"))) ==
          doctest::Approx(97.0 / 6.0));
    CHECK_THROWS_AS(resolve_alpha("A", load_descriptor(data("cp2.json"))), InvalidInput);
  }
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == cli::usage);
  CHECK(run_cli({"frobnicate"}).code == cli::usage);
  CHECK(run_cli({"classify", data("s3xr.json")}).code == cli::usage);
  CHECK(run_cli({"spectrum", data("missing.json")}).code == cli::usage);

  const Result bad = run_cli({"spectrum", data("bad_kappa_type.json")});
  CHECK(bad.code == cli::usage);
  CHECK(bad.err.find("$.factors[1].kappa") != std::string::npos);
  CHECK(run_cli({"spectrum", data("bad_sphere_dim.json")}).code == cli::usage);
  CHECK(run_cli({"spectrum", data("bad_syntax.json")}).code == cli::usage);
  CHECK(run_cli({"classify", data("s3xr.json"), "--alpha", "20"}).code == cli::usage);
  CHECK(run_cli({"verify", "line", "--n", "2"}).code == cli::usage);
  CHECK(run_cli({"verify", "nonsense"}).code == cli::usage);
  CHECK(run_cli({"verify", "product-structure", data("cp2.json")}).code == cli::usage);
  CHECK(run_cli({"--help"}).code == cli::ok);

  CHECK(run_cli({"verify", "product-spheres", "--samples", "40"}).code == cli::ok);
  CHECK(run_cli({"verify", "iff-kahler"}).code == cli::ok);
  // The Kaehler product statement is falsified by sampling; see README.
  CHECK(run_cli({"verify", "product-kahler", "--samples", "8"}).code == cli::mismatch);
}

TEST_CASE("examples command") {
  const Result r = run_cli({"examples"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["families"].size() == 12);
  CHECK(doc["mismatches"] == 0);
  CHECK(doc["cases"] == 594);
  for (const auto& f : doc["families"]) {
    CHECK(f["cases"].size() > 0);
    for (const auto& c : f["cases"]) {
      CHECK(c.contains("expected"));
      CHECK(c.contains("computed"));
    }
  }
}

TEST_CASE("closed forms cover each family once, in either factor order") {
  const auto fams = example_families();
  std::set<std::string> seen;
  for (const auto& f : fams) {
    std::set<std::string> names;
    for (const auto& c : f.cases) names.insert(c.expected.family);
    for (const auto& n : names) CHECK(seen.insert(n).second);
  }
  const auto swapped = parse_descriptor(
      R"({"kind":"product","factors":[{"kind":"euclidean","dim":2},{"kind":"sphere","dim":3,"kappa":1}]})");
  REQUIRE(closed_form(swapped));
  CHECK(closed_form(swapped)->family == "S^n1 x R^n2");
  CHECK_FALSE(closed_form(parse_descriptor(
      R"({"kind":"product","factors":[{"kind":"sphere","dim":2,"kappa":1},{"kind":"cp","m":1,"kappa":1}]})")));
}

TEST_CASE("oracle command") {
  const Result r =
      run_cli({"oracle", data("s2xs2.json"), "--alpha", "A", "--samples", "300", "--seed", "3"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["consistent"] == true);
  CHECK(doc["alpha"].get<double>() == 6.0);
  CHECK(doc["gap"].get<double>() >= -1e-8);
  CHECK(run_cli({"oracle", data("s2xs2.json"), "--alpha", "2", "--alpha", "3"}).code ==
        cli::usage);
}
