#include "ravenlab/machine/interpreter.hpp"

#include "ravenlab/core/errors.hpp"

namespace ravenlab::machine {

void ExecutionBudget::validate() const {
  if (max_steps < 1) throw ParameterError("max_steps must be at least 1");
  if (max_output < 1) throw ParameterError("max_output must be at least 1");
}

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::halted: return "HALTED";
    case RunStatus::running_at_budget: return "RUNNING_AT_BUDGET";
    case RunStatus::proven_silent_loop: return "PROVEN_SILENT_LOOP";
  }
  return "?";
}

namespace {

struct State {
  std::size_t ip = 0;
  std::uint64_t reg = 0;
  friend bool operator==(const State&, const State&) = default;
};

}  // namespace

ExecutionOutcome run_program(const ParsedProgram& program, const ExecutionBudget& budget) {
  budget.validate();
  if (program.code.empty() || program.code.back().op != Opcode::halt) {
    throw PreconditionError("program must end with HALT");
  }
  ExecutionOutcome out;
  State state;

  // Brent: compare against a saved state, re-saving at powers of two.
  // Any output invalidates the search.
  State saved = state;
  std::uint64_t power = 1;
  std::uint64_t lambda = 0;

  while (true) {
    if (out.steps_used >= budget.max_steps) {
      out.status = RunStatus::running_at_budget;
      return out;
    }
    const Instruction& ins = program.code[state.ip];
    bool printed = false;
    switch (ins.op) {
      case Opcode::emit_k:
      case Opcode::emit_w:
      case Opcode::emit_b:
      case Opcode::emit_g:
        if (out.output.size() >= budget.max_output) {
          out.status = RunStatus::running_at_budget;
          out.output_capped = true;
          return out;
        }
        out.output.push_back(emitted_symbol(ins.op));
        printed = true;
        ++state.ip;
        break;
      case Opcode::inc:
        ++state.reg;
        ++state.ip;
        break;
      case Opcode::dec:
        if (state.reg > 0) --state.reg;
        ++state.ip;
        break;
      case Opcode::jnz:
        if (state.reg != 0) {
          const std::size_t back = static_cast<std::size_t>(ins.offset) + 1;
          state.ip = back > state.ip ? 0 : state.ip - back;
        } else {
          ++state.ip;
        }
        break;
      case Opcode::halt:
        ++out.steps_used;
        out.status = RunStatus::halted;
        return out;
    }
    ++out.steps_used;

    if (printed) {
      saved = state;
      power = 1;
      lambda = 0;
      continue;
    }
    if (state == saved) {
      out.status = RunStatus::proven_silent_loop;
      return out;
    }
    if (++lambda == power) {
      saved = state;
      power *= 2;
      lambda = 0;
    }
  }
}

}  // namespace ravenlab::machine
