#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "ravenlab/core/prior.hpp"
#include "ravenlab/machine/census.hpp"

namespace ravenlab::machine {

/// Algorithmic-probability prior of a reference machine, bracketed by a census.
class MachinePrior final : public Prior {
 public:
  explicit MachinePrior(std::shared_ptr<const Census> census);

  const Alphabet& alphabet() const override { return Alphabet::ravens(); }
  bool is_exact() const override { return false; }
  std::string describe() const override;

  const Census& census() const { return *census_; }

 protected:
  ProbInterval evaluate(const Event& e) const override { return census_->mass(e); }

 private:
  std::shared_ptr<const Census> census_;
};

std::shared_ptr<const MachinePrior> make_machine_prior(const MachineConfig& config);

/// Bounds on M(Γ_x) for the register machine.
ProbInterval machine_mass(std::string_view x, unsigned max_bits, const ExecutionBudget& budget);
/// Bounds on M(Γ_x ∩ H) (side inside) or M(Γ_x ∩ H^c) (side outside).
ProbInterval machine_event_mass(std::string_view x, const Hypothesis& hyp, Side side, unsigned max_bits,
                                const ExecutionBudget& budget);
/// Budgeted upper bound on Km(x) (monotone) or K(x) (halting).
std::optional<unsigned> complexity_upper(std::string_view x, ComplexityMode mode, unsigned max_bits,
                                         const ExecutionBudget& budget);

enum class ReferencePriorKind { rho, xi, lambda_h };

struct ReferencePriorParams {
  std::optional<Rational> epsilon;
  std::optional<MachineConfig> machine;  // xi only
};

/// ρ, ξ = ρ + εM or λ_H. Throws ParameterError on missing or out-of-range parameters.
PriorPtr make_reference_prior(ReferencePriorKind kind, const ReferencePriorParams& params);

}  // namespace ravenlab::machine
