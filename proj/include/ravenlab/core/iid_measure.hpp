#pragma once

#include <string>
#include <vector>

#include "ravenlab/core/prior.hpp"

namespace ravenlab {

/// Product measure drawing every symbol independently with fixed weights.
class IidMeasure final : public Prior {
 public:
  /// Weights are per alphabet position and must sum to exactly 1.
  IidMeasure(Alphabet alphabet, std::vector<Rational> weights);

  const Alphabet& alphabet() const override { return alphabet_; }
  bool is_exact() const override { return true; }
  bool is_measure() const override { return true; }
  std::string describe() const override;

  const Rational& weight(Symbol s) const;
  const std::vector<Rational>& weights() const { return weights_; }
  Rational word_mass(std::string_view x) const;

 protected:
  ProbInterval evaluate(const Event& e) const override;

 private:
  Alphabet alphabet_;
  std::vector<Rational> weights_;
};

}  // namespace ravenlab
