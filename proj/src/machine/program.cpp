#include "ravenlab/machine/program.hpp"

namespace ravenlab::machine {

namespace {

unsigned read3(std::string_view bits, std::size_t pos) {
  unsigned v = 0;
  for (std::size_t i = pos; i < pos + 3; ++i) v = (v << 1) | (bits[i] == '1' ? 1u : 0u);
  return v;
}

void write3(std::string& out, unsigned v) {
  for (int shift = 2; shift >= 0; --shift) out.push_back(((v >> shift) & 1u) ? '1' : '0');
}

}  // namespace

std::optional<ParsedProgram> parse_program(std::string_view bits) {
  for (char c : bits) {
    if (c != '0' && c != '1') return std::nullopt;
  }
  ParsedProgram program;
  std::size_t pos = 0;
  while (pos + 3 <= bits.size()) {
    Instruction ins{static_cast<Opcode>(read3(bits, pos)), 0};
    pos += 3;
    if (ins.op == Opcode::jnz) {
      if (pos + 3 > bits.size()) return std::nullopt;
      ins.offset = static_cast<std::uint8_t>(read3(bits, pos));
      pos += 3;
    }
    program.code.push_back(ins);
    if (ins.op == Opcode::halt) {
      if (pos != bits.size()) return std::nullopt;
      return program;
    }
  }
  return std::nullopt;
}

std::string encode_program(const ParsedProgram& program) {
  std::string out;
  for (const auto& ins : program.code) {
    write3(out, static_cast<unsigned>(ins.op));
    if (ins.op == Opcode::jnz) write3(out, ins.offset);
  }
  return out;
}

char emitted_symbol(Opcode op) {
  switch (op) {
    case Opcode::emit_k: return 'K';
    case Opcode::emit_w: return 'W';
    case Opcode::emit_b: return 'B';
    case Opcode::emit_g: return 'G';
    default: return '\0';
  }
}

std::string disassemble(const ParsedProgram& program) {
  std::string out;
  for (const auto& ins : program.code) {
    if (!out.empty()) out += ' ';
    switch (ins.op) {
      case Opcode::emit_k: out += "EMIT_K"; break;
      case Opcode::emit_w: out += "EMIT_W"; break;
      case Opcode::emit_b: out += "EMIT_B"; break;
      case Opcode::emit_g: out += "EMIT_G"; break;
      case Opcode::inc: out += "INC"; break;
      case Opcode::dec: out += "DEC"; break;
      case Opcode::jnz: out += "JNZ(" + std::to_string(ins.offset) + ")"; break;
      case Opcode::halt: out += "HALT"; break;
    }
  }
  return out;
}

}  // namespace ravenlab::machine
