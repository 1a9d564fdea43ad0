#pragma once

#include <optional>
#include <string_view>

#include "ravenlab/confirm/decomposition.hpp"

namespace ravenlab::confirm {

enum class VerdictKind { confirms, disconfirms, refutes, no_change, undecided };

std::string_view to_string(VerdictKind kind);
std::optional<VerdictKind> parse_verdict(std::string_view token);

/// A verdict with the two intervals it compared. For the criterion these are
/// AD + DE and BC; for a posterior comparison, the posterior before and after.
struct Verdict {
  VerdictKind kind = VerdictKind::undecided;
  Interval lhs;
  Interval rhs;

  bool conclusive() const { return kind != VerdictKind::undecided; }
};

/// Confirms iff AD + DE < BC, disconfirms iff AD + DE > BC, both decided only
/// on strict separation of the intervals. Throws ConditioningUndefined when
/// the mass of x_{1:t} may be zero.
Verdict criterion_verdict(const AbcdeDecomposition& d);

/// Posterior of the hypothesis after x.
ProbInterval posterior(const Prior& prior, const Hypothesis& hyp, std::string_view x);

/// As posterior(), except that an interval prior whose mass of x may be zero
/// yields the vacuous [0, 1] instead of throwing. Exact priors still throw.
ProbInterval bounded_posterior(const Prior& prior, const Hypothesis& hyp, std::string_view x);

/// Effect of observing `a` after `history`: REFUTES for a forbidden symbol,
/// otherwise the strict comparison of the posteriors before and after
/// (bounded_posterior, so interval priors degrade to UNDECIDED).
Verdict step_verdict(const Prior& prior, const Hypothesis& hyp, std::string_view history, Symbol a);

/// Two verdicts that cannot both be right about one step.
bool contradictory(VerdictKind x, VerdictKind y);

}  // namespace ravenlab::confirm
