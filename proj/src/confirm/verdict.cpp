#include "ravenlab/confirm/verdict.hpp"

#include "ravenlab/core/errors.hpp"

namespace ravenlab::confirm {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::confirms: return "CONFIRMS";
    case VerdictKind::disconfirms: return "DISCONFIRMS";
    case VerdictKind::refutes: return "REFUTES";
    case VerdictKind::no_change: return "NO_CHANGE";
    case VerdictKind::undecided: return "UNDECIDED";
  }
  return "?";
}

std::optional<VerdictKind> parse_verdict(std::string_view token) {
  for (auto k : {VerdictKind::confirms, VerdictKind::disconfirms, VerdictKind::refutes, VerdictKind::no_change,
                 VerdictKind::undecided}) {
    if (to_string(k) == token) return k;
  }
  return std::nullopt;
}

namespace {

/// `rising` is the verdict when rhs lies strictly above lhs.
VerdictKind compare(const Interval& lhs, const Interval& rhs, VerdictKind rising, VerdictKind falling) {
  if (lhs.hi() < rhs.lo()) return rising;
  if (lhs.lo() > rhs.hi()) return falling;
  if (lhs.is_point() && rhs.is_point() && lhs.lo() == rhs.lo()) return VerdictKind::no_change;
  return VerdictKind::undecided;
}

}  // namespace

Verdict criterion_verdict(const AbcdeDecomposition& d) {
  const Interval lhs = d.a.interval() * d.d.interval() + d.d.interval() * d.e.interval();
  const Interval rhs = d.b.interval() * d.c.interval();
  if (d.refuting()) return {VerdictKind::refutes, lhs, rhs};
  if (d.current.lo() == 0 && d.c.lo() + d.d.lo() == 0) {
    throw ConditioningUndefined("mass of \"" + d.context + "\" may be zero");
  }
  return {compare(lhs, rhs, VerdictKind::confirms, VerdictKind::disconfirms), lhs, rhs};
}

ProbInterval posterior(const Prior& prior, const Hypothesis& hyp, std::string_view x) {
  return conditional_event(prior, hyp, x);
}

ProbInterval bounded_posterior(const Prior& prior, const Hypothesis& hyp, std::string_view x) {
  try {
    return posterior(prior, hyp, x);
  } catch (const ConditioningUndefined&) {
    if (prior.is_exact()) throw;
    return ProbInterval::unknown();
  }
}

Verdict step_verdict(const Prior& prior, const Hypothesis& hyp, std::string_view history, Symbol a) {
  prior.alphabet().validate(history);
  prior.alphabet().validate(std::string_view(&a, 1));
  const std::string next = std::string(history) + a;
  if (!hyp.admits(history)) return {VerdictKind::no_change, Interval(), Interval()};
  if (hyp.forbids(a)) {
    Interval before(Rational(0), Rational(1));
    try {
      before = posterior(prior, hyp, history);
    } catch (const ConditioningUndefined&) {
    } catch (const NormalizationUndefined&) {
    }
    return {VerdictKind::refutes, before, Interval()};
  }
  const ProbInterval before = bounded_posterior(prior, hyp, history);
  const ProbInterval after = bounded_posterior(prior, hyp, next);
  return {compare(before, after, VerdictKind::confirms, VerdictKind::disconfirms), before, after};
}

bool contradictory(VerdictKind x, VerdictKind y) {
  if (x == VerdictKind::undecided || y == VerdictKind::undecided) return false;
  return x != y;
}

}  // namespace ravenlab::confirm
