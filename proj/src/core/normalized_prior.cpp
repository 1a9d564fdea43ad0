#include "ravenlab/core/normalized_prior.hpp"

#include <algorithm>
#include <vector>

#include "ravenlab/core/errors.hpp"

namespace ravenlab {

NormalizedPrior::NormalizedPrior(PriorPtr base) : base_(std::move(base)) {
  if (!base_) throw ParameterError("normalization needs a base prior");
}

std::string NormalizedPrior::describe() const { return "normalized{" + base_->describe() + "}"; }

ProbInterval NormalizedPrior::value(std::string_view x) const {
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
  }
  base_->alphabet().validate(x);
  ProbInterval result = compute_value(std::string(x));
  std::lock_guard lock(memo_mutex_);
  return memo_.try_emplace(std::string(x), std::move(result)).first->second;
}

ProbInterval NormalizedPrior::compute_value(const std::string& x) const {
  if (x.empty()) return ProbInterval::exact(1);
  const std::string parent = x.substr(0, x.size() - 1);
  const ProbInterval parent_value = value(parent);
  if (parent_value.is_zero()) return ProbInterval::exact(0);

  Interval own;
  Interval siblings;
  for (char b : base_->alphabet().letters()) {
    const ProbInterval m = cylinder_mass(*base_, parent + b);
    if (b == x.back()) {
      own = m;
    } else {
      siblings += m;
    }
  }
  if (own.lo() + siblings.lo() == 0) {
    throw NormalizationUndefined(parent, "sibling mass sum " + to_string(own + siblings) + " may be zero");
  }
  return ProbInterval::clamped(parent_value.interval() * share(own, siblings));
}

ProbInterval NormalizedPrior::evaluate(const Event& e) const {
  if (base_->is_measure()) return base_->mass(e);
  if (e.next.kind == Continuation::Kind::stop) return ProbInterval::exact(0);

  if (e.side == Side::all) {
    if (e.next.kind == Continuation::Kind::any) return value(e.prefix);
    if (value(e.prefix).is_zero()) return ProbInterval::exact(0);
    Interval sum;
    for (char a : e.next.symbols) sum += value(e.prefix + a).interval();
    return ProbInterval::clamped(sum);
  }
  if (e.side == Side::outside && !e.hypothesis.admits(e.prefix)) {
    return mass(Event{e.prefix, e.next, Side::all, e.hypothesis});
  }
  if (const auto* fs = dynamic_cast<const FiniteSupportPrior*>(base_.get())) return atom_event_mass(*fs, e);
  return lookahead_event_mass(e);
}

ProbInterval NormalizedPrior::atom_event_mass(const FiniteSupportPrior& fs, const Event& e) const {
  if (value(e.prefix).is_zero()) return ProbInterval::exact(0);
  const auto& atoms = fs.atoms();

  // A finite atom with no proper extension leaves its parent's mass with
  // nowhere to go; below such a node the normalized measure does not exist.
  for (const auto& beta : atoms) {
    if (beta.string.is_infinite() || !beta.string.extends(e.prefix)) continue;
    const bool extended = std::any_of(atoms.begin(), atoms.end(), [&](const Atom& alpha) {
      return (alpha.string.is_infinite() || alpha.string.finite_length() > beta.string.finite_length()) &&
             alpha.string.extends(beta.string.preamble());
    });
    if (!extended) {
      throw NormalizationUndefined(beta.string.preamble(), "finite atom has no extension");
    }
  }

  // The normalized measure is a point mass on each distinct infinite atom,
  // reached once the atom's cylinder holds nothing else.
  Rational sum(0);
  std::vector<const Pattern*> seen;
  for (const auto& omega : atoms) {
    if (!omega.string.is_infinite()) continue;
    if (std::any_of(seen.begin(), seen.end(), [&](const Pattern* p) { return p->same_string(omega.string); })) {
      continue;
    }
    seen.push_back(&omega.string);
    if (!FiniteSupportPrior::atom_in_event(omega.string, e)) continue;
    std::size_t depth = 0;
    for (const auto& beta : atoms) {
      const std::size_t diff = omega.string.first_difference(beta.string);
      if (diff != std::string::npos) depth = std::max(depth, diff + 1);
    }
    depth = std::max(depth, e.prefix.size() + 1);
    sum += value(omega.string.prefix(depth)).lo();
  }
  return ProbInterval::exact(sum);
}

ProbInterval NormalizedPrior::lookahead_event_mass(const Event& e) const {
  const ProbInterval whole = value(e.prefix);
  if (whole.is_zero()) return ProbInterval::exact(0);
  const std::string& candidates =
      e.next.kind == Continuation::Kind::among ? e.next.symbols : base_->alphabet().letters();

  Rational allowed_hi(0);
  Rational forbidden_lo(0);
  Rational candidates_hi(0);
  for (char a : candidates) {
    const ProbInterval v = value(e.prefix + a);
    candidates_hi += v.hi();
    if (e.hypothesis.forbids(a)) {
      forbidden_lo += v.lo();
    } else {
      allowed_hi += v.hi();
    }
  }
  const Rational cap = e.next.kind == Continuation::Kind::any ? whole.hi() : std::min(candidates_hi, Rational(1));
  if (e.side == Side::inside) return ProbInterval(Rational(0), std::min(allowed_hi, cap));
  return ProbInterval(std::min(forbidden_lo, cap), cap);
}

}  // namespace ravenlab
