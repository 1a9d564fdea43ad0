#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ravenlab/core/rational.hpp"
#include "ravenlab/machine/census.hpp"

namespace ravenlab::lab {

enum class OutputFormat { json, csv };
enum class PriorChoice { xi, rho, lambda_h, machine };

std::string_view to_string(OutputFormat f);
std::string_view to_string(PriorChoice p);

/// Everything that can change a number in a report.
struct ExperimentConfig {
  std::string command;
  Rational epsilon{7, 100};
  unsigned lmax = 15;
  std::uint64_t max_steps = 10000;
  std::size_t max_output = 64;
  std::string pattern = "G*";
  std::size_t horizon = 10;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::json;
  std::string out;  // empty: standard output
  PriorChoice prior = PriorChoice::xi;
  bool normalized = false;
  char insert = 'K';
  char base = 'G';
  std::size_t hits = 1;
  std::size_t length = 0;
  bool timing = false;

  /// Throws ParameterError / InputError before any computation runs.
  void validate() const;
  machine::MachineConfig machine() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace ravenlab::lab
