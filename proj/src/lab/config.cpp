#include "ravenlab/lab/config.hpp"

#include "ravenlab/core/alphabet.hpp"
#include "ravenlab/core/errors.hpp"
#include "ravenlab/core/pattern.hpp"
#include "ravenlab/core/reference_priors.hpp"

namespace ravenlab::lab {

std::string_view to_string(OutputFormat f) { return f == OutputFormat::json ? "json" : "csv"; }

std::string_view to_string(PriorChoice p) {
  switch (p) {
    case PriorChoice::xi: return "xi";
    case PriorChoice::rho: return "rho";
    case PriorChoice::lambda_h: return "lambda_h";
    case PriorChoice::machine: return "machine";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  machine().validate();
  check_epsilon(epsilon);
  const Pattern parsed = Pattern::parse(pattern);
  Alphabet::ravens().validate(parsed.letters());
  if (horizon < 1) throw ParameterError("horizon must be at least 1");
  if (!Alphabet::ravens().contains(insert)) throw InputError("insert symbol must be one of K, W, B, G");
  if (!Alphabet::ravens().contains(base)) throw InputError("base symbol must be one of K, W, B, G");
}

machine::MachineConfig ExperimentConfig::machine() const {
  return machine::MachineConfig{lmax, machine::ExecutionBudget{max_steps, max_output}};
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["epsilon"] = ravenlab::to_string(epsilon);
  j["lmax"] = lmax;
  j["max_steps"] = max_steps;
  j["max_output"] = max_output;
  j["pattern"] = pattern;
  j["horizon"] = horizon;
  j["seed"] = seed;
  j["format"] = lab::to_string(format);
  j["out"] = out;
  j["prior"] = lab::to_string(prior);
  j["normalized"] = normalized;
  j["insert"] = std::string(1, insert);
  j["base"] = std::string(1, base);
  j["hits"] = hits;
  j["length"] = length;
  return j;
}

}  // namespace ravenlab::lab
