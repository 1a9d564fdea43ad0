#include "ravenlab/lab/report.hpp"

#include <sstream>

#include "ravenlab/core/errors.hpp"

namespace ravenlab::lab {

using nlohmann::ordered_json;

Check make_check(std::string name, const Rational& value, std::string relation, const Rational& bound) {
  bool passed = false;
  if (relation == "<") passed = value < bound;
  else if (relation == "<=") passed = value <= bound;
  else if (relation == ">") passed = value > bound;
  else if (relation == ">=") passed = value >= bound;
  else if (relation == "==") passed = value == bound;
  else throw PreconditionError("unknown relation " + relation);
  return {std::move(name), value, std::move(relation), bound, passed};
}

StepRecord make_step(std::size_t t, char symbol, const std::optional<confirm::AbcdeDecomposition>& abcde,
                     const ProbInterval& posterior, confirm::VerdictKind verdict) {
  StepRecord r{t, symbol, std::nullopt, posterior, verdict};
  if (abcde) r.abcde = std::array<ProbInterval, 5>{abcde->a, abcde->b, abcde->c, abcde->d, abcde->e};
  return r;
}

namespace {

constexpr const char* kParts[] = {"A", "B", "C", "D", "E"};

ordered_json interval_json(const ProbInterval& v) { return ordered_json::array({ravenlab::to_string(v.lo()), ravenlab::to_string(v.hi())}); }

ProbInterval interval_from_json(const ordered_json& j) {
  return ProbInterval(parse_rational(j.at(0).get<std::string>()), parse_rational(j.at(1).get<std::string>()));
}

confirm::VerdictKind verdict_from(const std::string& token) {
  const auto v = confirm::parse_verdict(token);
  if (!v) throw InputError("unknown verdict token \"" + token + "\"");
  return *v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) cells.push_back(cell);
  if (!line.empty() && line.back() == sep) cells.emplace_back();
  return cells;
}

std::string csv_header() {
  std::string h = "t,symbol";
  for (const char* p : kParts) h += std::string(",") + p + "_lo," + p + "_hi";
  return h + ",posterior_lo,posterior_hi,verdict";
}

std::string render_json(const ExperimentReport& report) {
  ordered_json j;
  j["config"] = report.config;
  j["machine"] = {{"tag", report.machine_tag}, {"description", report.machine_description}};
  ordered_json steps = ordered_json::array();
  for (const auto& s : report.steps) {
    ordered_json row;
    row["t"] = s.t;
    row["symbol"] = std::string(1, s.symbol);
    if (s.abcde) {
      for (std::size_t i = 0; i < 5; ++i) row[kParts[i]] = interval_json((*s.abcde)[i]);
    }
    row["posterior"] = interval_json(s.posterior);
    row["verdict"] = confirm::to_string(s.verdict);
    steps.push_back(std::move(row));
  }
  j["steps"] = std::move(steps);
  j["summary"] = report.summary;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"value", ravenlab::to_string(c.value)},
                      {"relation", c.relation},
                      {"bound", ravenlab::to_string(c.bound)},
                      {"passed", c.passed}});
  }
  j["checks"] = std::move(checks);
  j["results"] = report.extra;
  if (report.wall_clock_seconds) j["wall_clock_seconds"] = *report.wall_clock_seconds;
  return j.dump(2) + "\n";
}

std::string render_csv(const ExperimentReport& report) {
  std::string out = csv_header() + "\n";
  for (const auto& s : report.steps) {
    out += std::to_string(s.t) + "," + std::string(1, s.symbol);
    for (std::size_t i = 0; i < 5; ++i) {
      if (s.abcde) {
        out += "," + ravenlab::to_string((*s.abcde)[i].lo()) + "," + ravenlab::to_string((*s.abcde)[i].hi());
      } else {
        out += ",,";
      }
    }
    out += "," + ravenlab::to_string(s.posterior.lo()) + "," + ravenlab::to_string(s.posterior.hi());
    out += "," + std::string(confirm::to_string(s.verdict)) + "\n";
  }
  return out;
}

}  // namespace

std::string render_report(const ExperimentReport& report, OutputFormat format) {
  return format == OutputFormat::json ? render_json(report) : render_csv(report);
}

ExperimentReport report_from_json(const std::string& text) {
  ExperimentReport report;
  try {
    const auto j = ordered_json::parse(text);
    report.config = j.at("config");
    report.machine_tag = j.at("machine").at("tag").get<std::string>();
    report.machine_description = j.at("machine").at("description").get<std::string>();
    for (const auto& row : j.at("steps")) {
      StepRecord s;
      s.t = row.at("t").get<std::size_t>();
      s.symbol = row.at("symbol").get<std::string>().at(0);
      if (row.contains("A")) {
        std::array<ProbInterval, 5> parts;
        for (std::size_t i = 0; i < 5; ++i) parts[i] = interval_from_json(row.at(kParts[i]));
        s.abcde = parts;
      }
      s.posterior = interval_from_json(row.at("posterior"));
      s.verdict = verdict_from(row.at("verdict").get<std::string>());
      report.steps.push_back(std::move(s));
    }
    report.summary = j.at("summary").get<std::map<std::string, std::size_t>>();
    for (const auto& c : j.at("checks")) {
      report.checks.push_back({c.at("name").get<std::string>(), parse_rational(c.at("value").get<std::string>()),
                               c.at("relation").get<std::string>(), parse_rational(c.at("bound").get<std::string>()),
                               c.at("passed").get<bool>()});
    }
    report.extra = j.at("results");
    if (j.contains("wall_clock_seconds")) report.wall_clock_seconds = j.at("wall_clock_seconds").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return report;
}

std::vector<StepRecord> steps_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != csv_header()) throw InputError("csv report lacks the expected header");
  std::vector<StepRecord> steps;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 15) throw InputError("csv row has " + std::to_string(cells.size()) + " cells, expected 15");
    StepRecord s;
    s.t = std::stoul(cells[0]);
    if (cells[1].size() != 1) throw InputError("csv symbol cell must be one letter");
    s.symbol = cells[1][0];
    if (!cells[2].empty()) {
      std::array<ProbInterval, 5> parts;
      for (std::size_t i = 0; i < 5; ++i) {
        parts[i] = ProbInterval(parse_rational(cells[2 + 2 * i]), parse_rational(cells[3 + 2 * i]));
      }
      s.abcde = parts;
    }
    s.posterior = ProbInterval(parse_rational(cells[12]), parse_rational(cells[13]));
    s.verdict = verdict_from(cells[14]);
    steps.push_back(std::move(s));
  }
  return steps;
}

}  // namespace ravenlab::lab
