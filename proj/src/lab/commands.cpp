#include "ravenlab/lab/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>

#include "ravenlab/confirm/dynamics.hpp"
#include "ravenlab/core/errors.hpp"
#include "ravenlab/core/normalized_prior.hpp"
#include "ravenlab/core/reference_priors.hpp"
#include "ravenlab/core/sampler.hpp"
#include "ravenlab/lab/report.hpp"
#include "ravenlab/machine/machine_prior.hpp"

namespace ravenlab::lab {

namespace {

using confirm::VerdictKind;
using nlohmann::ordered_json;

struct Outcome {
  ExperimentReport report;
  int exit_code = kExitOk;
  std::string diagnostic;
  std::string raw;  // replaces the rendered report when set
};

PriorPtr build_prior(const ExperimentConfig& cfg) {
  PriorPtr prior;
  switch (cfg.prior) {
    case PriorChoice::xi:
      prior = machine::make_reference_prior(machine::ReferencePriorKind::xi, {cfg.epsilon, cfg.machine()});
      break;
    case PriorChoice::rho:
      prior = machine::make_reference_prior(machine::ReferencePriorKind::rho, {cfg.epsilon, std::nullopt});
      break;
    case PriorChoice::lambda_h:
      prior = machine::make_reference_prior(machine::ReferencePriorKind::lambda_h, {});
      break;
    case PriorChoice::machine:
      prior = machine::make_machine_prior(cfg.machine());
      break;
  }
  if (cfg.normalized) prior = std::make_shared<const NormalizedPrior>(prior);
  return prior;
}

ExperimentReport base_report(const ExperimentConfig& cfg) {
  ExperimentReport r;
  r.config = cfg.to_json();
  const machine::RegisterMachine m;
  r.machine_tag = m.version_tag();
  r.machine_description = m.description();
  return r;
}

ordered_json interval_json(const Interval& v) { return ordered_json::array({ravenlab::to_string(v.lo()), ravenlab::to_string(v.hi())}); }

void count(ExperimentReport& r, VerdictKind v) { ++r.summary[std::string(confirm::to_string(v))]; }

/// Exit status of a command that asked for one specific conclusive verdict.
void settle(Outcome& o, VerdictKind got, VerdictKind wanted) {
  const bool checks_ok =
      std::all_of(o.report.checks.begin(), o.report.checks.end(), [](const Check& c) { return c.passed; });
  if (got == VerdictKind::undecided) {
    o.exit_code = kExitUndecided;
    o.diagnostic = "verdict UNDECIDED at the given budgets";
  } else if (got != wanted || !checks_ok) {
    o.exit_code = kExitError;
    o.diagnostic = "expected " + std::string(confirm::to_string(wanted)) + " with all checks passing, got " +
                   std::string(confirm::to_string(got));
  }
}

Outcome run_example1(ExperimentConfig cfg) {
  const Hypothesis h = Hypothesis::all_ravens_black();
  const PriorPtr xi = build_prior(cfg);
  Outcome o;
  o.report = base_report(cfg);
  const Rational& eps = cfg.epsilon;

  const ProbInterval prior_in_h = event_mass(*xi, "", h, Side::inside);
  const ProbInterval before = confirm::posterior(*xi, h, "");
  const ProbInterval after = confirm::posterior(*xi, h, "K");
  const confirm::Verdict v = confirm::step_verdict(*xi, h, "", 'K');
  const Rational bound = (Rational(1, 4) + eps) / (Rational(1, 2) - eps);

  auto& checks = o.report.checks;
  checks.push_back(make_check("prior_mass_in_h_lower", prior_in_h.lo(), ">=", Rational(3, 4)));
  checks.push_back(make_check("prior_posterior_lower", before.lo(), ">=", Rational(3, 4)));
  checks.push_back(make_check("posterior_after_K_upper", after.hi(), "<=", bound));
  checks.push_back(make_check("posterior_bound", bound, "<", Rational(3, 4)));

  o.report.steps.push_back(make_step(1, 'K', confirm::decompose(*xi, "K", h), after, v.kind));
  count(o.report, v.kind);
  o.report.extra["prior_posterior"] = interval_json(before);
  o.report.extra["posterior_after_K"] = interval_json(after);
  o.report.extra["posterior_bound"] = ravenlab::to_string(bound);
  o.report.extra["verdict"] = confirm::to_string(v.kind);
  settle(o, v.kind, VerdictKind::disconfirms);
  return o;
}

Outcome run_example2(ExperimentConfig cfg) {
  const Hypothesis h = Hypothesis::all_ravens_black();
  const PriorPtr xi = build_prior(cfg);
  Outcome o;
  o.report = base_report(cfg);
  const Rational& eps = cfg.epsilon;

  const auto d = confirm::decompose(*xi, "K", h);
  const confirm::Verdict v = confirm::criterion_verdict(d);
  const Rational quarter(1, 4);
  const Rational half(1, 2);
  const Rational lhs_bound = Rational(1, 8) - eps / 2;
  const Rational rhs_bound = eps / 4 + eps * eps;

  auto& checks = o.report.checks;
  const auto within = [&](const char* name, const ProbInterval& got, const Rational& lo, const Rational& hi) {
    checks.push_back(make_check(std::string(name) + "_lower", got.lo(), ">=", lo));
    checks.push_back(make_check(std::string(name) + "_upper", got.hi(), "<=", hi));
  };
  within("A", d.a, half, half + eps);
  within("B", d.b, Rational(0), eps);
  within("C", d.c, quarter, quarter + eps);
  within("D", d.d, quarter - eps, quarter);
  within("E", d.e, Rational(0), eps);
  checks.push_back(make_check("AD_plus_DE_lower", v.lhs.lo(), ">=", lhs_bound));
  checks.push_back(make_check("BC_upper", v.rhs.hi(), "<=", rhs_bound));

  o.report.steps.push_back(make_step(1, 'K', d, confirm::posterior(*xi, h, "K"), v.kind));
  count(o.report, v.kind);
  o.report.extra["criterion"] = {{"AD_plus_DE", interval_json(v.lhs)},
                                 {"BC", interval_json(v.rhs)},
                                 {"AD_plus_DE_lower_bound", ravenlab::to_string(lhs_bound)},
                                 {"BC_upper_bound", ravenlab::to_string(rhs_bound)},
                                 {"verdict", confirm::to_string(v.kind)}};
  settle(o, v.kind, VerdictKind::disconfirms);
  return o;
}

Outcome run_trajectory(const ExperimentConfig& cfg) {
  const Hypothesis h = Hypothesis::all_ravens_black();
  const PriorPtr prior = build_prior(cfg);
  Outcome o;
  o.report = base_report(cfg);
  const auto traj = confirm::trajectory(*prior, h, Pattern::parse(cfg.pattern), cfg.horizon);
  std::string observed;
  for (const auto& p : traj.points) {
    observed.push_back(p.symbol);
    o.report.steps.push_back(make_step(p.t, p.symbol, p.abcde, p.posterior, p.verdict.kind));
    count(o.report, p.verdict.kind);
  }
  o.report.extra["observed"] = observed;
  o.report.extra["prior"] = prior->describe();
  return o;
}

Outcome run_scan(const ExperimentConfig& cfg) {
  const Hypothesis h = Hypothesis::all_ravens_black();
  const PriorPtr prior = build_prior(cfg);
  Outcome o;
  o.report = base_report(cfg);
  const Pattern pattern = Pattern::parse(cfg.pattern);
  const auto entries = confirm::counterfactual_scan(*prior, h, pattern, cfg.horizon, cfg.insert);
  ordered_json hits = ordered_json::array();
  for (const auto& e : entries) {
    const std::string x = pattern.prefix(e.t - 1) + cfg.insert;
    o.report.steps.push_back(
        make_step(e.t, cfg.insert, confirm::decompose(*prior, x, h), ProbInterval(e.verdict.rhs), e.verdict.kind));
    count(o.report, e.verdict.kind);
    if (e.verdict.kind == VerdictKind::disconfirms) hits.push_back(e.t);
  }
  o.report.extra["hits"] = std::move(hits);
  o.report.extra["prior"] = prior->describe();
  return o;
}

Outcome run_adversarial(const ExperimentConfig& cfg) {
  const Hypothesis h = Hypothesis::all_ravens_black();
  const PriorPtr prior = build_prior(cfg);
  Outcome o;
  o.report = base_report(cfg);
  const auto result = confirm::build_adversarial(*prior, h, cfg.base, cfg.insert, cfg.hits, cfg.horizon);
  for (std::size_t t : result.hits) {
    const std::string x = result.sequence.substr(0, t);
    o.report.steps.push_back(
        make_step(t, x.back(), confirm::decompose(*prior, x, h), confirm::bounded_posterior(*prior, h, x), VerdictKind::disconfirms));
    count(o.report, VerdictKind::disconfirms);
  }
  o.report.extra["sequence"] = result.sequence;
  o.report.extra["hits"] = result.hits;
  o.report.extra["complete"] = result.hits.size() == cfg.hits;
  o.report.extra["prior"] = prior->describe();
  return o;
}

Outcome run_enumerate(const ExperimentConfig& cfg) {
  Outcome o;
  o.report = base_report(cfg);
  const auto census = machine::Census::run(machine::RegisterMachine(), cfg.machine());
  std::map<std::string, std::size_t> by_status;
  ordered_json programs = ordered_json::array();
  std::string dump;
  for (const auto& e : census.entries()) {
    const std::string status(machine::to_string(e.outcome.status));
    ++by_status[status];
    dump += e.bits + "\t" + status + "\t" + e.outcome.output + "\t" + std::to_string(e.outcome.steps_used) + "\n";
    programs.push_back({{"bits", e.bits}, {"status", status}, {"output", e.outcome.output}, {"steps", e.outcome.steps_used}});
  }
  o.report.summary = by_status;
  o.report.extra["programs_enumerated"] = census.entries().size();
  o.report.extra["accounted_mass"] = ravenlab::to_string(census.accounted_mass());
  o.report.extra["unexplored_mass"] = ravenlab::to_string(census.unexplored_mass());
  o.report.extra["programs"] = std::move(programs);
  if (cfg.format == OutputFormat::csv) o.raw = std::move(dump);
  return o;
}

Outcome run_sample(const ExperimentConfig& cfg) {
  Outcome o;
  o.report = base_report(cfg);
  const auto lambda = make_lambda_h();
  const std::string s = sample_measure(*lambda, cfg.length, cfg.seed);
  std::map<std::string, std::size_t> freq;
  for (char c : Alphabet::ravens().letters()) freq[std::string(1, c)] = static_cast<std::size_t>(std::count(s.begin(), s.end(), c));
  o.report.extra["sample"] = s;
  o.report.extra["symbol_counts"] = freq;
  o.report.extra["sampler"] = "mt19937_64 + rejection to a uniform integer below the common weight denominator";
  return o;
}

void emit(const ExperimentConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open report file " + cfg.out);
  file << text;
  if (!file.flush()) throw Error("failed writing report file " + cfg.out);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bayesian confirmation under algorithmic priors", "ravenlab"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string epsilon_text = "7/100";
  std::string format_text = "json";
  std::string prior_text = "xi";
  std::string insert_text = "K";
  std::string base_text = "G";

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--epsilon", epsilon_text, "mixing weight num/den, 0 < eps < 1/4");
    sub->add_option("--lmax", cfg.lmax, "longest enumerated program, in bits");
    sub->add_option("--steps", cfg.max_steps, "step budget per program");
    sub->add_option("--max-output", cfg.max_output, "output budget per program");
    sub->add_option("--pattern", cfg.pattern, "observation sequence PREFIX(PERIOD)*");
    sub->add_option("--horizon", cfg.horizon, "number of time steps");
    sub->add_option("--seed", cfg.seed, "sampler seed");
    sub->add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "report path (default: standard output)");
    sub->add_option("--prior", prior_text, "xi, rho, lambda_h or machine")
        ->check(CLI::IsMember({"xi", "rho", "lambda_h", "machine"}));
    sub->add_flag("--normalized", cfg.normalized, "apply Solomonoff normalization to the prior");
    sub->add_option("--insert", insert_text, "counterfactual symbol");
    sub->add_option("--base", base_text, "filler symbol for adversarial strings");
    sub->add_option("--hits", cfg.hits, "disconfirmations to collect (adversarial)");
    sub->add_option("--length", cfg.length, "sample length");
    sub->add_flag("--timing", cfg.timing, "add wall-clock seconds to the report");
  };

  const std::map<std::string, std::pair<std::string, std::function<Outcome(const ExperimentConfig&)>>> commands{
      {"example1", {"black raven disconfirms under xi = rho + eps*M", run_example1}},
      {"example2", {"A-E intervals and the AD+DE vs BC criterion at t = 1", run_example2}},
      {"trajectory", {"posterior and verdict at every step of a pattern", run_trajectory}},
      {"scan", {"counterfactual observation of --insert at every step", run_scan}},
      {"adversarial", {"build a string with --hits disconfirming insertions", run_adversarial}},
      {"enumerate", {"run the program census of the reference machine", run_enumerate}},
      {"sample", {"draw a string from lambda_H", run_sample}},
  };
  for (const auto& [name, entry] : commands) add_common(app.add_subcommand(name, entry.first));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.epsilon = parse_rational(epsilon_text);
    cfg.format = format_text == "csv" ? OutputFormat::csv : OutputFormat::json;
    cfg.prior = prior_text == "rho"        ? PriorChoice::rho
                : prior_text == "lambda_h" ? PriorChoice::lambda_h
                : prior_text == "machine"  ? PriorChoice::machine
                                           : PriorChoice::xi;
    if (cfg.command == "example1" || cfg.command == "example2") cfg.prior = PriorChoice::xi, cfg.normalized = false;
    if (insert_text.size() != 1 || base_text.size() != 1) throw InputError("--insert and --base take one letter");
    cfg.insert = insert_text[0];
    cfg.base = base_text[0];
    cfg.validate();

    const auto start = std::chrono::steady_clock::now();
    Outcome o = commands.at(cfg.command).second(cfg);
    if (cfg.timing) {
      o.report.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    emit(cfg, o.raw.empty() ? render_report(o.report, cfg.format) : o.raw, out);
    if (!o.diagnostic.empty()) err << cfg.command << ": " << o.diagnostic << "\n";
    return o.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace ravenlab::lab
