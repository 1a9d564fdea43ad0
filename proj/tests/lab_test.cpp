#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ravenlab/core/errors.hpp"
#include "ravenlab/lab/commands.hpp"
#include "ravenlab/lab/report.hpp"

using namespace ravenlab;
using namespace ravenlab::lab;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

const std::string kCsvHeader =
    "t,symbol,A_lo,A_hi,B_lo,B_hi,C_lo,C_hi,D_lo,D_hi,E_lo,E_hi,posterior_lo,posterior_hi,verdict";

}  // namespace

TEST_CASE("example1 reproduces the disconfirmation") {
  const auto r = run({"example1", "--epsilon", "7/100"});
  REQUIRE(r.code == kExitOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["config"]["epsilon"] == "7/100");
  CHECK(doc["machine"]["tag"] == "ravenlab-register-machine/1");
  CHECK(doc["steps"][0]["verdict"] == "DISCONFIRMS");
  REQUIRE(doc["checks"].size() >= 2);
  for (const auto& c : doc["checks"]) CHECK(c["passed"] == true);
  CHECK(parse_rational(doc["results"]["prior_posterior"][0].get<std::string>()) >= Rational(3, 4));
  CHECK(parse_rational(doc["results"]["posterior_after_K"][1].get<std::string>()) <= Rational(32, 43));
}

TEST_CASE("example2 reports the criterion bounds") {
  auto r = run({"example2", "--epsilon", "7/100"});
  REQUIRE(r.code == kExitOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["steps"][0]["verdict"] == "DISCONFIRMS");
  for (const auto& c : doc["checks"]) CHECK(c["passed"] == true);

  r = run({"example2", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == kCsvHeader);
  CHECK(lines[1].rfind("1,K,", 0) == 0);
  CHECK(lines[1].ends_with(",DISCONFIRMS"));

  // Without any enumerated program the machine term spans [0, ε] and the
  // intervals are exactly the hand-derived ones.
  r = run({"example2", "--lmax", "0", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  lines = split_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1] == "1,K,1/2,57/100,0/1,7/100,1/4,8/25,9/50,1/4,0/1,7/100,1/2,16/25,DISCONFIRMS");
}

TEST_CASE("inconclusive examples exit with 2") {
  CHECK(run({"example1", "--epsilon", "1/5"}).code == kExitUndecided);
  CHECK(run({"example2", "--epsilon", "1/5"}).code == kExitUndecided);
}

TEST_CASE("sampling") {
  auto r = run({"sample", "--length", "0", "--seed", "1"});
  REQUIRE(r.code == kExitOk);
  CHECK(json::parse(r.out)["results"]["sample"] == "");
  r = run({"sample", "--length", "300", "--seed", "4"});
  REQUIRE(r.code == kExitOk);
  const auto sample = json::parse(r.out)["results"]["sample"].get<std::string>();
  CHECK(sample.size() == 300);
  CHECK(sample.find('W') == std::string::npos);
  CHECK(run({"sample", "--length", "300", "--seed", "4"}).out == r.out);
  CHECK(run({"sample", "--length", "300", "--seed", "5"}).out != r.out);
}

TEST_CASE("scan and adversarial") {
  auto r = run({"scan", "--pattern", "G*", "--insert", "K", "--epsilon", "7/100"});
  REQUIRE(r.code == kExitOk);
  auto doc = json::parse(r.out);
  CHECK(doc["steps"].size() == 10);
  CHECK(doc["steps"][0]["t"] == 1);
  CHECK(doc["steps"][0]["verdict"] == "DISCONFIRMS");

  r = run({"adversarial", "--hits", "1", "--epsilon", "7/100"});
  REQUIRE(r.code == kExitOk);
  doc = json::parse(r.out);
  CHECK(doc["results"]["sequence"] == "K");
  CHECK(doc["results"]["hits"] == json::array({1}));
}

TEST_CASE("trajectory and enumerate") {
  auto r = run({"trajectory", "--prior", "lambda_h", "--pattern", "(KBG)*", "--horizon", "6", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 7);
  for (std::size_t i = 1; i < lines.size(); ++i) CHECK(lines[i].ends_with(",1/1,1/1,NO_CHANGE"));

  r = run({"trajectory", "--prior", "rho", "--pattern", "KW*", "--horizon", "3"});
  REQUIRE(r.code == kExitOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["steps"][1]["verdict"] == "REFUTES");
  CHECK(doc["steps"][2]["posterior"] == json::array({"0/1", "0/1"}));

  r = run({"enumerate", "--lmax", "6", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  lines = split_lines(r.out);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "111\tHALTED\t\t1");
  CHECK(lines[1] == "000111\tHALTED\tK\t2");

  r = run({"enumerate", "--lmax", "3"});
  REQUIRE(r.code == kExitOk);
  CHECK(json::parse(r.out).dump().find("1/8") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{},
                                             {"nonsense"},
                                             {"example1", "--bogus"},
                                             {"example1", "--epsilon", "1/0"},
                                             {"example1", "--epsilon", "seven"},
                                             {"example1", "--epsilon", "1/3"},
                                             {"trajectory", "--pattern", "X*"},
                                             {"trajectory", "--pattern", "(K"},
                                             {"trajectory", "--horizon", "0"},
                                             {"scan", "--insert", "W"},
                                             {"example1", "--lmax", "99"},
                                             {"example1", "--steps", "0"},
                                             {"example1", "--max-output", "0"},
                                             {"sample", "--format", "xml"}}) {
    const auto r = run(args);
    CHECK(r.code == kExitError);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("reports are deterministic and written to --out") {
  const std::vector<std::string> args{"trajectory", "--pattern", "KG*", "--horizon", "8", "--lmax", "12"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out).count("wall_clock_seconds") == 0);
  CHECK(json::parse(run({"sample", "--timing"}).out).count("wall_clock_seconds") == 1);

  const auto path = std::filesystem::temp_directory_path() / "ravenlab_lab_test.json";
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", path.string()});
  const auto c = run(with_out);
  REQUIRE(c.code == kExitOk);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  auto echoed = json::parse(file.str());
  auto plain = json::parse(a.out);
  CHECK(echoed["config"]["out"] == path.string());
  echoed["config"].erase("out");
  plain["config"].erase("out");
  CHECK(echoed == plain);
  std::filesystem::remove(path);

  CHECK(run({"sample", "--out", "/nonexistent-dir/x.json"}).code == kExitError);
}

TEST_CASE("config echo") {
  const auto doc = json::parse(run({"trajectory", "--epsilon", "1/20", "--lmax", "9", "--steps", "500", "--max-output",
                                    "32", "--pattern", "(GB)*", "--horizon", "4", "--seed", "3"})
                                   .out);
  const auto& c = doc["config"];
  CHECK(c["command"] == "trajectory");
  CHECK(c["epsilon"] == "1/20");
  CHECK(c["lmax"] == 9);
  CHECK(c["max_steps"] == 500);
  CHECK(c["max_output"] == 32);
  CHECK(c["pattern"] == "(GB)*");
  CHECK(c["horizon"] == 4);
  CHECK(c["seed"] == 3);
  CHECK(c["format"] == "json");
  CHECK(c["prior"] == "xi");
  CHECK(c["normalized"] == false);
  CHECK_FALSE(doc["machine"]["description"].get<std::string>().empty());
}

TEST_CASE("rendering round trips") {
  ExperimentReport empty;
  empty.config = json::object();
  CHECK(render_report(empty, OutputFormat::csv) == kCsvHeader + "\n");
  CHECK(steps_from_csv(render_report(empty, OutputFormat::csv)).empty());

  for (const auto& args : {std::vector<std::string>{"example2"},
                           std::vector<std::string>{"trajectory", "--pattern", "KKW*", "--horizon", "5"},
                           std::vector<std::string>{"scan", "--horizon", "6"}}) {
    const auto r = run(args);
    REQUIRE(r.code == kExitOk);
    const auto report = report_from_json(r.out);
    CHECK(render_report(report, OutputFormat::json) == r.out);
    const auto csv = render_report(report, OutputFormat::csv);
    const auto steps = steps_from_csv(csv);
    CHECK(steps == report.steps);
    ExperimentReport again = report;
    again.steps = steps;
    CHECK(render_report(again, OutputFormat::json) == r.out);
    CHECK(render_report(again, OutputFormat::csv) == csv);
  }
  CHECK_THROWS(steps_from_csv("t,symbol\n1,K\n"));
  CHECK_THROWS(report_from_json("{"));
}

TEST_CASE("checks") {
  CHECK(make_check("x", Rational(1, 2), ">=", Rational(1, 2)).passed);
  CHECK_FALSE(make_check("x", Rational(1, 2), ">", Rational(1, 2)).passed);
  CHECK(make_check("x", Rational(1, 3), "<", Rational(1, 2)).passed);
  CHECK(make_check("x", Rational(1, 2), "==", parse_rational("2/4")).passed);
  CHECK_THROWS(make_check("x", Rational(1), "~", Rational(1)));
}
