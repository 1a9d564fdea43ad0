#include "ravenlab/machine/reference_machine.hpp"

#include "ravenlab/core/errors.hpp"

namespace ravenlab::machine {

std::string RegisterMachine::version_tag() const { return "ravenlab-register-machine/1"; }

std::string RegisterMachine::description() const {
  return "one unbounded register R (initially 0); 3-bit opcodes: "
         "000 EMIT_K, 001 EMIT_W, 010 EMIT_B, 011 EMIT_G, 100 INC, 101 DEC (floors at 0), "
         "110 JNZ k (3-bit operand; if R != 0 jump back k+1 opcodes, clamped at the first), 111 HALT; "
         "programs are valid iff the first HALT ends the bit string; one step per executed opcode; "
         "silent loop = exact (ip, R) recurrence with no output in between";
}

namespace {

void generate(unsigned remaining, std::string& prefix, const std::function<void(const std::string&)>& visit) {
  if (remaining == 3) {
    prefix += "111";
    visit(prefix);
    prefix.resize(prefix.size() - 3);
    return;
  }
  static constexpr const char* kPlainOps[] = {"000", "001", "010", "011", "100", "101"};
  static constexpr const char* kOperands[] = {"000", "001", "010", "011", "100", "101", "110", "111"};
  for (const char* op : kPlainOps) {
    prefix += op;
    generate(remaining - 3, prefix, visit);
    prefix.resize(prefix.size() - 3);
  }
  if (remaining >= 9) {
    for (const char* operand : kOperands) {
      prefix += "110";
      prefix += operand;
      generate(remaining - 6, prefix, visit);
      prefix.resize(prefix.size() - 6);
    }
  }
}

}  // namespace

void RegisterMachine::for_each_program(unsigned max_bits,
                                       const std::function<void(const std::string&)>& visit) const {
  std::string prefix;
  for (unsigned n = 3; n <= max_bits; n += 3) generate(n, prefix, visit);
}

ExecutionOutcome RegisterMachine::execute(std::string_view bits, const ExecutionBudget& budget) const {
  const auto program = parse_program(bits);
  if (!program) throw InputError("invalid program \"" + std::string(bits) + "\"");
  return run_program(*program, budget);
}

Enumeration enumerate_valid(unsigned max_bits) {
  Enumeration result{{}, Rational(0)};
  RegisterMachine().for_each_program(max_bits, [&](const std::string& bits) {
    result.programs.push_back(bits);
    result.accounted_mass += pow2_neg(static_cast<unsigned>(bits.size()));
  });
  return result;
}

}  // namespace ravenlab::machine
