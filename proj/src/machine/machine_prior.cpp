#include "ravenlab/machine/machine_prior.hpp"

#include "ravenlab/core/errors.hpp"
#include "ravenlab/core/reference_priors.hpp"

namespace ravenlab::machine {

MachinePrior::MachinePrior(std::shared_ptr<const Census> census) : census_(std::move(census)) {
  if (!census_) throw ParameterError("machine prior needs a census");
}

std::string MachinePrior::describe() const {
  const auto& c = census_->config();
  return "machine{" + census_->machine_tag() + ", max_bits=" + std::to_string(c.max_bits) +
         ", max_steps=" + std::to_string(c.budget.max_steps) + ", max_output=" + std::to_string(c.budget.max_output) +
         "}";
}

std::shared_ptr<const MachinePrior> make_machine_prior(const MachineConfig& config) {
  auto census = std::make_shared<const Census>(Census::run(RegisterMachine(), config));
  return std::make_shared<const MachinePrior>(std::move(census));
}

namespace {

Census census_for(unsigned max_bits, const ExecutionBudget& budget) {
  return Census::run(RegisterMachine(), MachineConfig{max_bits, budget});
}

}  // namespace

ProbInterval machine_mass(std::string_view x, unsigned max_bits, const ExecutionBudget& budget) {
  Alphabet::ravens().validate(x);
  return census_for(max_bits, budget).mass(Event::cylinder(std::string(x)));
}

ProbInterval machine_event_mass(std::string_view x, const Hypothesis& hyp, Side side, unsigned max_bits,
                                const ExecutionBudget& budget) {
  Alphabet::ravens().validate(x);
  const Event e{std::string(x), Continuation::any(), side, hyp};
  if (event_is_empty(e)) return ProbInterval::exact(0);
  return census_for(max_bits, budget).mass(e);
}

std::optional<unsigned> complexity_upper(std::string_view x, ComplexityMode mode, unsigned max_bits,
                                         const ExecutionBudget& budget) {
  return census_for(max_bits, budget).complexity_upper(x, mode);
}

PriorPtr make_reference_prior(ReferencePriorKind kind, const ReferencePriorParams& params) {
  switch (kind) {
    case ReferencePriorKind::lambda_h:
      return make_lambda_h();
    case ReferencePriorKind::rho:
      if (!params.epsilon) throw ParameterError("rho needs epsilon");
      return make_rho(*params.epsilon);
    case ReferencePriorKind::xi:
      if (!params.epsilon) throw ParameterError("xi needs epsilon");
      if (!params.machine) throw ParameterError("xi needs a machine configuration");
      check_epsilon(*params.epsilon);
      return make_xi(*params.epsilon, make_machine_prior(*params.machine));
  }
  throw ParameterError("unknown reference prior");
}

}  // namespace ravenlab::machine
