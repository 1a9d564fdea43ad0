#pragma once

#include <string>
#include <vector>

#include "ravenlab/core/pattern.hpp"
#include "ravenlab/core/prior.hpp"

namespace ravenlab {

struct Atom {
  Pattern string;
  Rational mass;
};

/// Semimeasure that puts positive mass on finitely many finite or eventually
/// periodic strings. Total mass may fall short of 1. Evaluation is exact.
class FiniteSupportPrior final : public Prior {
 public:
  /// Throws ParameterError for nonpositive masses or total mass above 1,
  /// InputError for letters outside the alphabet.
  FiniteSupportPrior(Alphabet alphabet, std::vector<Atom> atoms);

  const Alphabet& alphabet() const override { return alphabet_; }
  bool is_exact() const override { return true; }
  std::string describe() const override;

  const std::vector<Atom>& atoms() const { return atoms_; }
  const Rational& total_mass() const { return total_; }

  /// Whether the atom's string belongs to the event.
  static bool atom_in_event(const Pattern& atom, const Event& e);

 protected:
  ProbInterval evaluate(const Event& e) const override;

 private:
  Alphabet alphabet_;
  std::vector<Atom> atoms_;
  Rational total_;
};

}  // namespace ravenlab
