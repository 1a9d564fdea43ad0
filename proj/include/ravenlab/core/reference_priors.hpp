#pragma once

#include "ravenlab/core/finite_support_prior.hpp"
#include "ravenlab/core/iid_measure.hpp"
#include "ravenlab/core/mixture_prior.hpp"

namespace ravenlab {

/// ρ over the raven alphabet with three atoms:
///   G^∞ ↦ 1/2,  K^∞ ↦ 1/4,  K W^∞ ↦ 1/4 − ε.
/// Requires 0 < ε < 1/4.
std::shared_ptr<const FiniteSupportPrior> make_rho(const Rational& epsilon);

/// ξ = ρ + ε·universal.
std::shared_ptr<const MixturePrior> make_xi(const Rational& epsilon, PriorPtr universal);

/// λ_H: uniform over K, B, G and zero on W.
std::shared_ptr<const IidMeasure> make_lambda_h();

/// Throws ParameterError unless 0 < ε < 1/4.
void check_epsilon(const Rational& epsilon);

}  // namespace ravenlab
