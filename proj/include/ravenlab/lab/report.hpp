#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ravenlab/confirm/verdict.hpp"
#include "ravenlab/lab/config.hpp"

namespace ravenlab::lab {

struct StepRecord {
  std::size_t t = 0;
  char symbol = '\0';
  std::optional<std::array<ProbInterval, 5>> abcde;  // A..E
  ProbInterval posterior;
  confirm::VerdictKind verdict = confirm::VerdictKind::undecided;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

/// A named comparison against a reference bound, e.g. "prior_lower >= 3/4".
struct Check {
  std::string name;
  Rational value;
  std::string relation;  // one of <, <=, >, >=, ==
  Rational bound;
  bool passed = false;
};

Check make_check(std::string name, const Rational& value, std::string relation, const Rational& bound);

struct ExperimentReport {
  nlohmann::ordered_json config;
  std::string machine_tag;
  std::string machine_description;
  std::vector<StepRecord> steps;
  std::map<std::string, std::size_t> summary;
  std::vector<Check> checks;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  std::optional<double> wall_clock_seconds;
};

StepRecord make_step(std::size_t t, char symbol, const std::optional<confirm::AbcdeDecomposition>& abcde,
                     const ProbInterval& posterior, confirm::VerdictKind verdict);

/// csv: header plus one row per step. json: one document with every field.
std::string render_report(const ExperimentReport& report, OutputFormat format);

ExperimentReport report_from_json(const std::string& text);
std::vector<StepRecord> steps_from_csv(const std::string& text);

}  // namespace ravenlab::lab
