#include "ravenlab/core/mixture_prior.hpp"

#include "ravenlab/core/errors.hpp"

namespace ravenlab {

MixturePrior::MixturePrior(std::vector<MixtureComponent> components, bool allow_weight_excess)
    : components_(std::move(components)) {
  if (components_.empty()) throw ParameterError("mixture needs at least one component");
  Rational total(0);
  for (const auto& c : components_) {
    if (!c.prior) throw ParameterError("mixture component without prior");
    if (c.weight <= 0) throw ParameterError("mixture weight " + to_string(c.weight) + " is not positive");
    if (!(c.prior->alphabet() == components_.front().prior->alphabet())) {
      throw ParameterError("mixture components disagree on the alphabet");
    }
    total += c.weight;
  }
  if (total > 1 && !allow_weight_excess) {
    throw ParameterError("mixture weights sum to " + to_string(total) + " > 1");
  }
}

const Alphabet& MixturePrior::alphabet() const { return components_.front().prior->alphabet(); }

bool MixturePrior::is_exact() const {
  for (const auto& c : components_) {
    if (!c.prior->is_exact()) return false;
  }
  return true;
}

ProbInterval MixturePrior::evaluate(const Event& e) const {
  Interval sum;
  for (const auto& c : components_) sum += c.weight * c.prior->mass(e).interval();
  return ProbInterval::clamped(sum);
}

std::string MixturePrior::describe() const {
  std::string out = "mixture{";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += " + ";
    out += to_string(components_[i].weight) + " * " + components_[i].prior->describe();
  }
  return out + "}";
}

}  // namespace ravenlab
