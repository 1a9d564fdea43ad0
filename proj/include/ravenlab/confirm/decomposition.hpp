#pragma once

#include <string>
#include <string_view>

#include "ravenlab/core/prior.hpp"

namespace ravenlab::confirm {

/// Masses of the five program categories at step t = |context|.
///   A, B: strings falsified at t (ω_t ≠ x_t), inside / outside H
///   C, D: strings extending x_{1:t}, inside / outside H
///   E:    the finite string x_{<t} itself
struct AbcdeDecomposition {
  std::string context;  // x_{1:t}
  Hypothesis hypothesis;
  ProbInterval a, b, c, d, e;
  ProbInterval current;  // mass of Γ_{x_{1:t}}

  std::size_t t() const { return context.size(); }
  std::string history() const { return context.substr(0, context.size() - 1); }
  /// The step observes a forbidden symbol.
  bool refuting() const { return hypothesis.forbids(context.back()); }
};

/// Evaluates A–E as single events (unions over the falsifying symbols), so an
/// interval prior charges its slack once per category.
/// Throws PreconditionError for t = 0 or a history that violates the hypothesis.
AbcdeDecomposition decompose(const Prior& prior, std::string_view x, const Hypothesis& hyp);

/// The two posterior forms read off a decomposition:
///   before = (A + C + E) / (A + B + C + D + E),  after = C / (C + D).
struct PosteriorForms {
  ProbInterval before;
  ProbInterval after;
};

PosteriorForms posterior_forms(const AbcdeDecomposition& d);

}  // namespace ravenlab::confirm
