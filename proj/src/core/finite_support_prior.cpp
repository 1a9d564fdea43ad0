#include "ravenlab/core/finite_support_prior.hpp"

#include "ravenlab/core/errors.hpp"

namespace ravenlab {

FiniteSupportPrior::FiniteSupportPrior(Alphabet alphabet, std::vector<Atom> atoms)
    : alphabet_(std::move(alphabet)), atoms_(std::move(atoms)), total_(0) {
  for (const auto& atom : atoms_) {
    alphabet_.validate(atom.string.letters());
    if (atom.mass <= 0) throw ParameterError("atom " + atom.string.to_string() + " has nonpositive mass");
    total_ += atom.mass;
  }
  if (total_ > 1) throw ParameterError("atom masses sum to " + to_string(total_) + " > 1");
}

bool FiniteSupportPrior::atom_in_event(const Pattern& atom, const Event& e) {
  if (!atom.extends(e.prefix)) return false;
  const std::size_t n = e.prefix.size();
  switch (e.next.kind) {
    case Continuation::Kind::any:
      break;
    case Continuation::Kind::stop:
      if (atom.has(n)) return false;
      break;
    case Continuation::Kind::among:
      if (!atom.has(n) || e.next.symbols.find(atom.at(n)) == std::string::npos) return false;
      break;
  }
  if (e.side == Side::all) return true;
  const bool in_h = e.hypothesis.admits(atom.letters());
  return e.side == Side::inside ? in_h : !in_h;
}

ProbInterval FiniteSupportPrior::evaluate(const Event& e) const {
  Rational sum(0);
  for (const auto& atom : atoms_) {
    if (atom_in_event(atom.string, e)) sum += atom.mass;
  }
  return ProbInterval::exact(sum);
}

std::string FiniteSupportPrior::describe() const {
  std::string out = "finite-support{";
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out += ", ";
    out += atoms_[i].string.to_string() + ": " + to_string(atoms_[i].mass);
  }
  return out + "}";
}

}  // namespace ravenlab
