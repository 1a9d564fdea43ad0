#pragma once

#include <map>
#include <mutex>
#include <string>
#include <string_view>

#include "ravenlab/core/finite_support_prior.hpp"
#include "ravenlab/core/prior.hpp"

namespace ravenlab {

/// Solomonoff normalization of a semimeasure:
///   value(ε) = 1,  value(xa) = value(x) · base(xa) / Σ_b base(xb).
///
/// Cylinder values are memoized along queried prefixes. For interval-valued
/// bases the ratio is bounded with base(xa) and the sibling sum varying
/// independently. A node of exact value 0 has children of value 0; any other
/// node whose sibling sum may vanish raises NormalizationUndefined.
///
/// Hypothesis events need the limit behaviour of the base:
///  - a base that is already a measure is its own normalization;
///  - a finite-support base normalizes to point masses on its infinite atoms;
///  - other bases get a sound one-symbol-lookahead bracket.
/// Finite strings always carry mass 0.
class NormalizedPrior final : public Prior {
 public:
  explicit NormalizedPrior(PriorPtr base);

  const Alphabet& alphabet() const override { return base_->alphabet(); }
  bool is_exact() const override { return base_->is_exact(); }
  bool is_measure() const override { return true; }
  std::string describe() const override;

  const Prior& base() const { return *base_; }
  /// Normalized cylinder value.
  ProbInterval value(std::string_view x) const;

 protected:
  ProbInterval evaluate(const Event& e) const override;

 private:
  ProbInterval compute_value(const std::string& x) const;
  ProbInterval atom_event_mass(const FiniteSupportPrior& fs, const Event& e) const;
  ProbInterval lookahead_event_mass(const Event& e) const;

  PriorPtr base_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::string, ProbInterval, std::less<>> memo_;
};

}  // namespace ravenlab
