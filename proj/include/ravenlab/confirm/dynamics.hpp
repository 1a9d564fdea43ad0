#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ravenlab/core/pattern.hpp"
#include "ravenlab/confirm/verdict.hpp"

namespace ravenlab::confirm {

struct TrajectoryPoint {
  std::size_t t = 0;
  Symbol symbol = '\0';
  ProbInterval posterior;
  /// Absent once the history has been refuted.
  std::optional<AbcdeDecomposition> abcde;
  Verdict verdict;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  std::map<VerdictKind, std::size_t> counts;
};

/// Observes the pattern's first `horizon` symbols one at a time.
Trajectory trajectory(const Prior& prior, const Hypothesis& hyp, const Pattern& sequence, std::size_t horizon);

struct ScanEntry {
  std::size_t t = 0;
  Verdict verdict;
};

/// Verdict of observing `a` instead of x_t, for every t <= horizon with x_t != a.
std::vector<ScanEntry> counterfactual_scan(const Prior& prior, const Hypothesis& hyp, const Pattern& sequence,
                                           std::size_t horizon, Symbol a);

struct AdversarialResult {
  std::string sequence;
  std::vector<std::size_t> hits;
};

/// Extends the string with `base`, inserting `insert` at every step where
/// observing it disconfirms, until `k` hits or `max_steps` symbols.
AdversarialResult build_adversarial(const Prior& prior, const Hypothesis& hyp, Symbol base, Symbol insert,
                                    std::size_t k, std::size_t max_steps);

}  // namespace ravenlab::confirm
