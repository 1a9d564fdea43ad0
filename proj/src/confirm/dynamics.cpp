#include "ravenlab/confirm/dynamics.hpp"

#include "ravenlab/core/errors.hpp"

namespace ravenlab::confirm {

Trajectory trajectory(const Prior& prior, const Hypothesis& hyp, const Pattern& sequence, std::size_t horizon) {
  if (horizon < 1) throw ParameterError("horizon must be at least 1");
  const std::string observed = sequence.prefix(horizon);
  prior.alphabet().validate(observed);

  Trajectory out;
  for (std::size_t t = 1; t <= horizon; ++t) {
    const std::string x = observed.substr(0, t);
    const std::string history = observed.substr(0, t - 1);
    TrajectoryPoint point;
    point.t = t;
    point.symbol = x.back();
    point.posterior = bounded_posterior(prior, hyp, x);
    point.verdict = step_verdict(prior, hyp, history, point.symbol);
    if (hyp.admits(history)) point.abcde = decompose(prior, x, hyp);
    ++out.counts[point.verdict.kind];
    out.points.push_back(std::move(point));
  }
  return out;
}

std::vector<ScanEntry> counterfactual_scan(const Prior& prior, const Hypothesis& hyp, const Pattern& sequence,
                                           std::size_t horizon, Symbol a) {
  if (hyp.forbids(a)) throw PreconditionError("counterfactual symbol must not be forbidden");
  const std::string observed = sequence.prefix(horizon);
  prior.alphabet().validate(observed);
  if (!hyp.admits(observed)) throw PreconditionError("scanned sequence contains a forbidden symbol");

  std::vector<ScanEntry> out;
  for (std::size_t t = 1; t <= horizon; ++t) {
    if (observed[t - 1] == a) continue;
    out.push_back({t, step_verdict(prior, hyp, observed.substr(0, t - 1), a)});
  }
  return out;
}

AdversarialResult build_adversarial(const Prior& prior, const Hypothesis& hyp, Symbol base, Symbol insert,
                                    std::size_t k, std::size_t max_steps) {
  if (base == insert) throw PreconditionError("base and inserted symbols must differ");
  if (hyp.forbids(base) || hyp.forbids(insert)) throw PreconditionError("base and inserted symbols must be allowed");

  AdversarialResult out;
  while (out.hits.size() < k && out.sequence.size() < max_steps) {
    const Verdict v = step_verdict(prior, hyp, out.sequence, insert);
    if (v.kind == VerdictKind::disconfirms) {
      out.sequence.push_back(insert);
      out.hits.push_back(out.sequence.size());
    } else {
      out.sequence.push_back(base);
    }
  }
  return out;
}

}  // namespace ravenlab::confirm
