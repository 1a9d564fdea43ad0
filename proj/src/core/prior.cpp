#include "ravenlab/core/prior.hpp"

#include <algorithm>

#include "ravenlab/core/errors.hpp"

namespace ravenlab {

bool event_is_empty(const Event& e) {
  if (e.next.kind == Continuation::Kind::among && e.next.symbols.empty()) return true;
  switch (e.side) {
    case Side::all:
      return false;
    case Side::inside:
      if (!e.hypothesis.admits(e.prefix)) return true;
      return e.next.kind == Continuation::Kind::among &&
             std::all_of(e.next.symbols.begin(), e.next.symbols.end(),
                         [&](char c) { return e.hypothesis.forbids(c); });
    case Side::outside:
      return e.next.kind == Continuation::Kind::stop && e.hypothesis.admits(e.prefix);
  }
  return false;
}

ProbInterval Prior::mass(const Event& e) const {
  alphabet().validate(e.prefix);
  alphabet().validate(e.next.symbols);
  if (event_is_empty(e)) return ProbInterval::exact(0);
  return evaluate(e);
}

ProbInterval cylinder_mass(const Prior& prior, std::string_view x) { return prior.mass(Event::cylinder(std::string(x))); }

ProbInterval event_mass(const Prior& prior, std::string_view x, const Hypothesis& hyp, Side side) {
  return prior.mass(Event{std::string(x), Continuation::any(), side, hyp});
}

ProbInterval conditional_event(const Prior& prior, const Hypothesis& hyp, std::string_view x) {
  prior.alphabet().validate(x);
  if (!hyp.admits(x)) return ProbInterval::exact(0);
  const ProbInterval in = event_mass(prior, x, hyp, Side::inside);
  const ProbInterval out = event_mass(prior, x, hyp, Side::outside);
  const ProbInterval total = cylinder_mass(prior, x);
  if (total.lo() == 0 && in.lo() + out.lo() == 0) {
    throw ConditioningUndefined("mass of \"" + std::string(x) + "\" may be zero " + to_string(total));
  }
  return ProbInterval(share(in, out));
}

}  // namespace ravenlab
