#include "ravenlab/confirm/decomposition.hpp"

#include "ravenlab/core/errors.hpp"

namespace ravenlab::confirm {

AbcdeDecomposition decompose(const Prior& prior, std::string_view x, const Hypothesis& hyp) {
  if (x.empty()) throw PreconditionError("decomposition needs t >= 1");
  prior.alphabet().validate(x);
  const std::string context(x);
  const std::string history = context.substr(0, context.size() - 1);
  if (!hyp.admits(history)) {
    throw PreconditionError("history \"" + history + "\" already contains a forbidden symbol");
  }
  std::string others;
  for (char a : prior.alphabet().letters()) {
    if (a != context.back()) others.push_back(a);
  }
  const auto falsified = Continuation::among(others);
  AbcdeDecomposition d{context, hyp, {}, {}, {}, {}, {}, {}};
  d.a = prior.mass(Event{history, falsified, Side::inside, hyp});
  d.b = prior.mass(Event{history, falsified, Side::outside, hyp});
  d.c = prior.mass(Event{context, Continuation::any(), Side::inside, hyp});
  d.d = prior.mass(Event{context, Continuation::any(), Side::outside, hyp});
  d.e = prior.mass(Event{history, Continuation::stop(), Side::all, hyp});
  d.current = cylinder_mass(prior, context);
  return d;
}

PosteriorForms posterior_forms(const AbcdeDecomposition& d) {
  const Interval in_h = d.a.interval() + d.c.interval() + d.e.interval();
  const Interval out_h = d.b.interval() + d.d.interval();
  return {ProbInterval(share(in_h, out_h)), ProbInterval(share(d.c, d.d))};
}

}  // namespace ravenlab::confirm
