#pragma once

#include <memory>
#include <vector>

#include "oracle.hpp"
#include "ravenlab/core/finite_support_prior.hpp"
#include "ravenlab/core/reference_priors.hpp"
#include "ravenlab/machine/machine_prior.hpp"

namespace fixtures {

inline std::shared_ptr<const ravenlab::FiniteSupportPrior> to_prior(const std::vector<oracle::AtomSpec>& atoms) {
  std::vector<ravenlab::Atom> out;
  for (const auto& a : atoms) out.push_back({ravenlab::Pattern(a.preamble, a.period), a.mass});
  return std::make_shared<const ravenlab::FiniteSupportPrior>(ravenlab::Alphabet::ravens(), std::move(out));
}

inline std::vector<oracle::AtomSpec> rho_atoms(const mpq_class& eps) {
  return {{"", "G", mpq_class(1, 2)}, {"", "K", mpq_class(1, 4)}, {"K", "W", mpq_class(1, 4) - eps}};
}

inline ravenlab::machine::MachineConfig machine_config(unsigned bits, std::uint64_t steps) {
  ravenlab::machine::MachineConfig c;
  c.max_bits = bits;
  c.budget.max_steps = steps;
  return c;
}

/// Census at the default budgets, built once per test binary.
inline std::shared_ptr<const ravenlab::machine::MachinePrior> default_machine() {
  static const auto prior = ravenlab::machine::make_machine_prior(ravenlab::machine::MachineConfig{});
  return prior;
}

inline ravenlab::PriorPtr default_xi(const mpq_class& eps = mpq_class(7, 100)) {
  return ravenlab::make_xi(eps, default_machine());
}

}  // namespace fixtures
