#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ravenlab/core/alphabet.hpp"
#include "ravenlab/core/interval.hpp"

namespace ravenlab {

/// Which part of a set the hypothesis keeps.
enum class Side { all, inside, outside };

/// How an event continues after its prefix.
struct Continuation {
  enum class Kind { any, stop, among };
  Kind kind = Kind::any;
  std::string symbols;  // used by `among`

  static Continuation any() { return {}; }
  /// The finite string that is exactly the prefix.
  static Continuation stop() { return {Kind::stop, {}}; }
  /// Next symbol drawn from `symbols`.
  static Continuation among(std::string symbols) { return {Kind::among, std::move(symbols)}; }
};

/// A measurable set over finite and infinite strings:
/// {ω : prefix ⊑ ω, continuation holds, side of the hypothesis holds}.
struct Event {
  std::string prefix;
  Continuation next;
  Side side = Side::all;
  Hypothesis hypothesis = Hypothesis::all_ravens_black();

  static Event cylinder(std::string x) { return {std::move(x), Continuation::any(), Side::all, Hypothesis("")}; }
};

/// True when every string in the event violates the hypothesis side
/// or the event is otherwise trivially empty.
bool event_is_empty(const Event& e);

/// A (semi)measure over strings, evaluated on events as sound intervals.
class Prior {
 public:
  virtual ~Prior() = default;

  virtual const Alphabet& alphabet() const = 0;
  /// Exact priors return point intervals everywhere.
  virtual bool is_exact() const = 0;
  /// True when finite strings carry no mass.
  virtual bool is_measure() const { return false; }
  virtual std::string describe() const = 0;

  /// Validates the event's letters, then evaluates it.
  ProbInterval mass(const Event& e) const;

 protected:
  virtual ProbInterval evaluate(const Event& e) const = 0;
};

using PriorPtr = std::shared_ptr<const Prior>;

ProbInterval cylinder_mass(const Prior& prior, std::string_view x);
ProbInterval event_mass(const Prior& prior, std::string_view x, const Hypothesis& hyp, Side side);
/// Posterior of the hypothesis given the cylinder x. Exact 0 when x already
/// contains a forbidden symbol; throws ConditioningUndefined when the mass
/// of x may be zero.
ProbInterval conditional_event(const Prior& prior, const Hypothesis& hyp, std::string_view x);

}  // namespace ravenlab
