#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "ravenlab/machine/program.hpp"

namespace ravenlab::machine {

struct ExecutionBudget {
  std::uint64_t max_steps = 10000;
  std::size_t max_output = 64;

  /// Throws ParameterError unless both limits are at least 1.
  void validate() const;
};

enum class RunStatus { halted, running_at_budget, proven_silent_loop };

std::string_view to_string(RunStatus status);

struct ExecutionOutcome {
  std::string output;  // raven letters, never longer than max_output
  RunStatus status = RunStatus::running_at_budget;
  std::uint64_t steps_used = 0;
  /// Stopped because the next EMIT would exceed max_output.
  bool output_capped = false;

  /// The final output is known: the program halted or provably prints nothing more.
  bool is_final() const { return status != RunStatus::running_at_budget; }
};

/// Runs a one-register monotone machine.
///
/// The register starts at 0 and is unbounded; DEC floors at 0. JNZ(k) jumps
/// back k+1 opcodes when the register is nonzero, clamped at the first
/// opcode. Every executed opcode, HALT included, costs one step. A silent
/// loop is reported only after an exact (opcode index, register) recurrence
/// with no output in between, found by Brent's cycle search.
ExecutionOutcome run_program(const ParsedProgram& program, const ExecutionBudget& budget);

}  // namespace ravenlab::machine
