#pragma once

#include <string>
#include <vector>

#include "ravenlab/core/prior.hpp"

namespace ravenlab {

struct MixtureComponent {
  Rational weight;
  PriorPtr prior;
};

/// Weighted sum of priors over one alphabet. Results are clamped to [0, 1].
///
/// Weights must be positive and, unless `allow_weight_excess` is set, sum to
/// at most 1. ρ + εM needs the flag: its weights sum to 1 + ε while its mass
/// stays below 1 because ρ itself has mass 1 − ε.
class MixturePrior final : public Prior {
 public:
  MixturePrior(std::vector<MixtureComponent> components, bool allow_weight_excess = false);

  const Alphabet& alphabet() const override;
  bool is_exact() const override;
  std::string describe() const override;

  const std::vector<MixtureComponent>& components() const { return components_; }

 protected:
  ProbInterval evaluate(const Event& e) const override;

 private:
  std::vector<MixtureComponent> components_;
};

}  // namespace ravenlab
