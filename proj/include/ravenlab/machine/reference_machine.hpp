#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ravenlab/core/rational.hpp"
#include "ravenlab/machine/interpreter.hpp"

namespace ravenlab::machine {

/// A monotone machine with a prefix-free program set. Census and
/// algorithmic-probability bounds work against this interface only.
class ReferenceMachine {
 public:
  virtual ~ReferenceMachine() = default;

  virtual std::string version_tag() const = 0;
  /// Opcode table and semantics, embedded in reports.
  virtual std::string description() const = 0;
  /// Visits every valid program of at most `max_bits` bits exactly once,
  /// in nondecreasing length.
  virtual void for_each_program(unsigned max_bits, const std::function<void(const std::string&)>& visit) const = 0;
  /// Runs a valid program.
  virtual ExecutionOutcome execute(std::string_view bits, const ExecutionBudget& budget) const = 0;
};

class RegisterMachine final : public ReferenceMachine {
 public:
  std::string version_tag() const override;
  std::string description() const override;
  void for_each_program(unsigned max_bits, const std::function<void(const std::string&)>& visit) const override;
  ExecutionOutcome execute(std::string_view bits, const ExecutionBudget& budget) const override;
};

struct Enumeration {
  std::vector<std::string> programs;
  Rational accounted_mass;  // Σ 2^-|p|
};

/// All valid register-machine programs of at most `max_bits` bits.
Enumeration enumerate_valid(unsigned max_bits);

}  // namespace ravenlab::machine
