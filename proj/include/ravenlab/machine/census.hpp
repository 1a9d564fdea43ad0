#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ravenlab/core/interval.hpp"
#include "ravenlab/core/prior.hpp"
#include "ravenlab/machine/reference_machine.hpp"

namespace ravenlab::machine {

struct MachineConfig {
  unsigned max_bits = 15;
  ExecutionBudget budget;

  void validate() const;
};

/// Largest program length the census accepts.
inline constexpr unsigned kMaxProgramBits = 30;

struct CensusEntry {
  std::string bits;
  ExecutionOutcome outcome;
};

enum class Membership { no, maybe, yes };

/// Whether the program's eventual (possibly infinite) output lies in the event,
/// judged from what it printed within budget. Printed symbols are final, so
/// divergence from the event and printed forbidden symbols decide at once.
Membership membership(const ExecutionOutcome& outcome, const Event& e);

enum class ComplexityMode { monotone, halting };

/// Every valid program up to the length bound, run under one budget.
class Census {
 public:
  static Census run(const ReferenceMachine& machine, const MachineConfig& config);

  const MachineConfig& config() const { return config_; }
  const std::string& machine_tag() const { return machine_tag_; }
  const std::string& machine_description() const { return machine_description_; }
  const std::vector<CensusEntry>& entries() const { return entries_; }

  Rational weight(const CensusEntry& entry) const { return pow2_neg(static_cast<unsigned>(entry.bits.size())); }
  const Rational& accounted_mass() const { return accounted_; }
  Rational unexplored_mass() const { return 1 - accounted_; }

  /// lower = mass of programs decided inside the event; upper adds the mass
  /// of undecided programs and of every program longer than the bound.
  /// Throws ParameterError when the prefix exceeds max_output.
  ProbInterval mass(const Event& e) const;

  /// Length of the shortest enumerated witness: a program whose output
  /// extends x (monotone) or that halts with output exactly x (halting).
  std::optional<unsigned> complexity_upper(std::string_view x, ComplexityMode mode) const;

 private:
  MachineConfig config_;
  std::string machine_tag_;
  std::string machine_description_;
  std::vector<CensusEntry> entries_;
  std::vector<Integer> scaled_weights_;  // 2^(max_bits - |p|)
  Rational accounted_{0};
};

}  // namespace ravenlab::machine
