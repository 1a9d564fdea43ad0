#include "ravenlab/core/iid_measure.hpp"

#include "ravenlab/core/errors.hpp"

namespace ravenlab {

IidMeasure::IidMeasure(Alphabet alphabet, std::vector<Rational> weights)
    : alphabet_(std::move(alphabet)), weights_(std::move(weights)) {
  if (weights_.size() != alphabet_.size()) throw ParameterError("one weight per symbol required");
  Rational total(0);
  for (const auto& w : weights_) {
    if (w < 0) throw ParameterError("negative symbol weight " + to_string(w));
    total += w;
  }
  if (total != 1) throw ParameterError("symbol weights sum to " + to_string(total) + ", not 1");
}

const Rational& IidMeasure::weight(Symbol s) const {
  const auto index = alphabet_.index_of(s);
  if (!index) throw InputError("symbol '" + std::string(1, s) + "' is not in alphabet " + alphabet_.letters());
  return weights_[*index];
}

Rational IidMeasure::word_mass(std::string_view x) const {
  Rational product(1);
  for (char c : x) product *= weight(c);
  return product;
}

ProbInterval IidMeasure::evaluate(const Event& e) const {
  if (e.next.kind == Continuation::Kind::stop) return ProbInterval::exact(0);

  Rational next_weight(1);
  std::string continuation;
  if (e.next.kind == Continuation::Kind::among) {
    next_weight = 0;
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      if (e.next.symbols.find(alphabet_.letters()[i]) != std::string::npos) next_weight += weights_[i];
    }
  }
  const Rational total = word_mass(e.prefix) * next_weight;
  if (e.side == Side::all) return ProbInterval::exact(total);

  // An infinite iid tail avoids the forbidden symbols with probability 1 if
  // they all have weight 0, and with probability 0 otherwise.
  bool tail_avoids = true;
  for (char f : e.hypothesis.forbidden()) {
    if (alphabet_.contains(f) && weight(f) != 0) tail_avoids = false;
  }
  Rational inside(0);
  if (tail_avoids && e.hypothesis.admits(e.prefix)) inside = total;
  return ProbInterval::exact(e.side == Side::inside ? inside : Rational(total - inside));
}

std::string IidMeasure::describe() const {
  std::string out = "iid{";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ", ";
    out += std::string(1, alphabet_.letters()[i]) + ": " + to_string(weights_[i]);
  }
  return out + "}";
}

}  // namespace ravenlab
