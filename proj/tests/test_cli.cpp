#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jetclosure/cli.hpp"
#include "jetclosure/errors.hpp"
#include "jetclosure/fixture_suite.hpp"
#include "jetclosure/problem.hpp"

using namespace jetclosure;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = JETCLOSURE_FIXTURES_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.end(), {"--format", "json"});
  return nlohmann::json::parse(run(args).out);
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("jetclosure-test-" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("problem files") {
  auto p = parse_problem_file("# cusp\nideal x^2+y^3\nvars x, y\nfield Q\ncandidate c = x*y^3\n");
  CHECK(p.ring->names() == std::vector<std::string>{"x", "y"});
  CHECK(p.ideal.size() == 1);
  REQUIRE(p.find_candidate("c"));
  CHECK(p.find_candidate("c")->poly.to_string() == "x*y^3");
  CHECK(!p.find_candidate("d"));

  auto q = parse_problem_file("field Fp 7\nvars x\nrelation x^3\nideal 8*x\n");
  CHECK(q.ring->field() == FieldSpec::prime(7));
  CHECK(q.ideal.front().to_string() == "x");
  CHECK(q.problem().combined().generators().size() == 2);
  auto over_q = parse_problem_file("field Fp 7\nvars x\nideal 8*x\n", FieldSpec::rationals());
  CHECK(over_q.ideal.front().to_string() == "8*x");

  CHECK_THROWS_AS(parse_problem_file("vars x\nideal x\n"), ParseError);
  CHECK_THROWS_AS(parse_problem_file("field Q\nideal x\n"), ParseError);
  CHECK_THROWS_AS(parse_problem_file("field Q\nvars x\n"), ParseError);
  CHECK_THROWS_AS(parse_problem_file("field Q\nvars x\nideal y\n"), ParseError);
  CHECK_THROWS_AS(parse_problem_file("field Fp 8\nvars x\nideal x\n"), Error);
  CHECK_THROWS_AS(parse_problem_file("field Q\nvars x, x\nideal x\n"), Error);
  CHECK_THROWS_AS(parse_problem_file("field Q\nvars x\nideal x\nbogus x\n"), ParseError);
  try {
    parse_problem_file("field Q\nvars x\nideal x+\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  CHECK(parse_field_spec("Q") == FieldSpec::rationals());
  CHECK(parse_field_spec("Fp 5") == FieldSpec::prime(5));
  CHECK(parse_field_spec("F5") == FieldSpec::prime(5));
  CHECK_THROWS(parse_field_spec("R"));
}

TEST_CASE("command examples") {
  auto cusp = kFixtures + "/cusp.problem";
  auto closure = run_json({"closure", cusp, "--level", "4"});
  CHECK(closure["generators"] == nlohmann::json({"x^3", "y^3+x^2", "x^2*y^2"}));
  CHECK(run_json({"closure", cusp, "--level", "0"})["generators"] == nlohmann::json({"x", "y"}));
  CHECK(run_json({"closure", kFixtures + "/zero_one_var.problem", "--level", "3"})["generators"] ==
        nlohmann::json({"x^4"}));

  auto jet = run_json({"jet", cusp, "--level", "4", "--local"});
  // Reduced basis as generators; the raw derivations D_2, D_3, D_4 in level_results.
  CHECK(jet["generators"].front() == "x@1^2");
  REQUIRE(jet["level_results"].size() == 3);
  CHECK(jet["level_results"][1]["derivation"] == "y@1^3+2*x@1*x@2");
  auto cone = run_json({"jet", kFixtures + "/quadric_cone.problem", "--level", "2", "--local"});
  CHECK(cone["generators"] == nlohmann::json({"x@1", "x@2", "y@1", "y@2", "z@1^2"}));
  auto zero = run({"jet", kFixtures + "/zero_two_vars.problem", "--level", "2"});
  CHECK(zero.code == 0);
  CHECK(zero.out.find("0") != std::string::npos);

  auto member = run_json({"member", cusp, "--level", "4", "--poly", "x*y^3"});
  CHECK(member["result"] == "true");
  CHECK(member["certificates_verified"] == true);
  CHECK(run_json({"member", cusp, "--level", "4", "--poly", "x^2+y^3"})["result"] == "true");

  auto jsc = run_json({"jsc-member", kFixtures + "/quadric_cone.problem", "--max-level", "4", "--poly", "z"});
  CHECK(jsc["result"] == "non-member");
  CHECK(jsc["level_results"].back()["level"] == 1);

  auto arc = run_json({"arc-approx", kFixtures + "/maximal.problem", "--max-level", "3"});
  for (const auto& level : arc["level_results"]) CHECK(level["cumulative"] == nlohmann::json({"x", "y"}));
  CHECK(run_json({"arc-approx", cusp, "--max-level", "6"})["stabilized_at"] == 5);
}

TEST_CASE("json schema and determinism") {
  auto cusp = kFixtures + "/cusp.problem";
  std::vector<std::string> args{"arc-approx", cusp, "--max-level", "3", "--format", "json"};
  auto first = run(args);
  auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  auto j = nlohmann::ordered_json::parse(first.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "input_digest", "result", "generators",
                                         "certificates_verified", "stabilized_at", "level_results", "timings"});
  CHECK(j["timings"].is_null());
  CHECK(j["input_digest"].get<std::string>().starts_with("fnv1a64:"));
  CHECK(j["generators"].is_array());
  CHECK(j["certificates_verified"].is_boolean());

  auto timed = run_json({"closure", cusp, "--level", "2", "--timings"});
  CHECK(timed["timings"].is_object());
  CHECK(run(args).out == first.out);

  CHECK(cli::fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(cli::fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("exit codes") {
  TempDir dir;
  auto cusp = kFixtures + "/cusp.problem";
  CHECK(run({"closure", dir.write("bad.problem", "field Q\nvars x\nideal x^\n"), "--level", "1"}).code == 2);
  CHECK(run({"closure", (dir.path / "missing.problem").string(), "--level", "1"}).code == 2);
  CHECK(run({"closure", cusp}).code == 2);
  CHECK(run({"member", cusp, "--level", "2", "--poly", "x+"}).code == 2);
  CHECK(run({"member", cusp, "--level", "2", "--candidate", "nope"}).code == 2);
  CHECK(run({"closure", dir.write("far.problem", "field Q\nvars x\nideal x-1\n"), "--level", "1"}).code == 2);
  CHECK(run({"integral-closure", cusp}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);

  // A false verdict is still a successful answer.
  CHECK(run({"member", cusp, "--level", "4", "--poly", "x"}).code == 0);

  auto guarded = run({"closure", cusp, "--level", "4", "--max-pair-degree", "2"});
  CHECK(guarded.code == 3);
  CHECK(!guarded.err.empty());
}

TEST_CASE("timeout environment variable") {
  auto cusp = kFixtures + "/cusp.problem";
  ::setenv(cli::kTimeoutEnv, "soon", 1);
  CHECK(run({"closure", cusp, "--level", "1"}).code == 2);
  ::setenv(cli::kTimeoutEnv, "0", 1);
  CHECK(run({"closure", cusp, "--level", "1"}).code == 2);
  ::setenv(cli::kTimeoutEnv, "0.001", 1);
  CHECK(run({"closure", cusp, "--level", "8"}).code == 3);
  // An explicit flag wins over a valid environment value.
  CHECK(run({"closure", cusp, "--level", "1", "--timeout", "60"}).code == 0);
  ::unsetenv(cli::kTimeoutEnv);
  CHECK(run({"closure", cusp, "--level", "1"}).code == 0);
}

TEST_CASE("fixture suite") {
  TempDir dir;
  fs::copy_file(kFixtures + "/cusp.problem", dir.path / "cusp.problem");
  fs::copy_file(kFixtures + "/cusp_member.expected", dir.path / "cusp_member.expected");

  auto rows = cli::run_fixture_suite(dir.path.string(), std::nullopt);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].status == cli::RowStatus::Pass);
  CHECK(rows[0].tag == "[PUBLISHED]");
  CHECK(run({"verify-paper", "--fixtures", dir.path.string()}).code == 0);

  auto skipped = run({"verify-paper", "--fixtures", dir.path.string(), "--field", "Fp 2"});
  CHECK(skipped.code == 0);
  CHECK(skipped.out.find("SKIPPED cusp_member") != std::string::npos);
  CHECK(skipped.out.find("characteristic 2") != std::string::npos);

  dir.write("cusp_corrupt.expected",
            "#! problem: cusp.problem\n#! tag: [TRIVIAL]\n=== member --level 4 --poly x^2+y^3\nresult = false\n");
  rows = cli::run_fixture_suite(dir.path.string(), std::nullopt);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].name == "cusp_corrupt");
  CHECK(rows[0].status == cli::RowStatus::Fail);
  auto failing = run({"verify-paper", "--fixtures", dir.path.string()});
  CHECK(failing.code == 1);
  CHECK(failing.out.find("FAIL    cusp_corrupt") != std::string::npos);

  dir.write("broken.expected", "no directives here\n");
  rows = cli::run_fixture_suite(dir.path.string(), std::nullopt);
  CHECK(rows[0].name == "broken");
  CHECK(rows[0].status == cli::RowStatus::Fail);
}

TEST_CASE("in-repo fixture suite") {
  auto rows = cli::run_fixture_suite(kFixtures, std::nullopt);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(kFixtures)) files += entry.path().extension() == ".expected";
  CHECK(rows.size() == files);
  for (const auto& row : rows) {
    CAPTURE(row.name);
    // The two published claims that do not hold are kept as failing rows.
    bool published = row.name == "cusp_closure_level4_published" || row.name == "cusp_arc_published";
    CHECK(row.status == (published ? cli::RowStatus::Fail : cli::RowStatus::Pass));
  }
}
