#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ravenlab::machine {

/// Three-bit opcodes. JNZ carries a further three-bit back-offset operand.
enum class Opcode : std::uint8_t {
  emit_k = 0b000,
  emit_w = 0b001,
  emit_b = 0b010,
  emit_g = 0b011,
  inc = 0b100,
  dec = 0b101,
  jnz = 0b110,
  halt = 0b111,
};

struct Instruction {
  Opcode op = Opcode::halt;
  std::uint8_t offset = 0;  // JNZ only, 0..7

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

/// Opcode sequence with exactly one HALT, in final position.
struct ParsedProgram {
  std::vector<Instruction> code;

  friend bool operator==(const ParsedProgram&, const ParsedProgram&) = default;
};

/// Reads 3-bit opcodes (plus the JNZ operand) until the first HALT. The
/// program is valid iff that HALT ends the bit string exactly. Valid programs
/// form a prefix-free set.
std::optional<ParsedProgram> parse_program(std::string_view bits);

/// Inverse of parse_program.
std::string encode_program(const ParsedProgram& program);

/// Letter printed by an EMIT opcode, or '\0' for other opcodes.
char emitted_symbol(Opcode op);

/// Mnemonic listing, e.g. "EMIT_K INC JNZ(2) HALT".
std::string disassemble(const ParsedProgram& program);

}  // namespace ravenlab::machine
