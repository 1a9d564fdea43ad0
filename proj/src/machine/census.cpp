#include "ravenlab/machine/census.hpp"

#include "ravenlab/core/errors.hpp"

namespace ravenlab::machine {

void MachineConfig::validate() const {
  budget.validate();
  if (max_bits > kMaxProgramBits) {
    throw ParameterError("program length bound " + std::to_string(max_bits) + " exceeds " +
                         std::to_string(kMaxProgramBits));
  }
}

Membership membership(const ExecutionOutcome& outcome, const Event& e) {
  if (event_is_empty(e)) return Membership::no;
  const std::string& out = outcome.output;
  const std::string& pre = e.prefix;
  const bool final = outcome.is_final();
  const std::size_t common = std::min(out.size(), pre.size());
  if (out.compare(0, common, pre, 0, common) != 0) return Membership::no;

  Membership position = Membership::yes;
  if (out.size() < pre.size()) {
    position = final ? Membership::no : Membership::maybe;
  } else {
    const bool longer = out.size() > pre.size();
    switch (e.next.kind) {
      case Continuation::Kind::any:
        break;
      case Continuation::Kind::stop:
        position = longer ? Membership::no : (final ? Membership::yes : Membership::maybe);
        break;
      case Continuation::Kind::among:
        if (longer) {
          position = e.next.symbols.find(out[pre.size()]) != std::string::npos ? Membership::yes : Membership::no;
        } else {
          position = final ? Membership::no : Membership::maybe;
        }
        break;
    }
  }
  if (position == Membership::no || e.side == Side::all) return position;

  const bool printed_forbidden = !e.hypothesis.admits(out);
  Membership side;
  if (e.side == Side::inside) {
    side = printed_forbidden ? Membership::no : (final ? Membership::yes : Membership::maybe);
  } else {
    side = printed_forbidden ? Membership::yes : (final ? Membership::no : Membership::maybe);
  }
  if (side == Membership::no) return Membership::no;
  return (position == Membership::yes && side == Membership::yes) ? Membership::yes : Membership::maybe;
}

Census Census::run(const ReferenceMachine& machine, const MachineConfig& config) {
  config.validate();
  Census census;
  census.config_ = config;
  census.machine_tag_ = machine.version_tag();
  census.machine_description_ = machine.description();
  machine.for_each_program(config.max_bits, [&](const std::string& bits) {
    census.entries_.push_back(CensusEntry{bits, machine.execute(bits, config.budget)});
    Integer scaled;
    mpz_ui_pow_ui(scaled.get_mpz_t(), 2, config.max_bits - bits.size());
    census.scaled_weights_.push_back(scaled);
  });
  Integer accounted(0);
  for (const auto& w : census.scaled_weights_) accounted += w;
  census.accounted_ = Rational(accounted) * pow2_neg(config.max_bits);
  census.accounted_.canonicalize();
  return census;
}

ProbInterval Census::mass(const Event& e) const {
  if (e.prefix.size() > config_.budget.max_output) {
    throw ParameterError("prefix of length " + std::to_string(e.prefix.size()) + " exceeds max_output " +
                         std::to_string(config_.budget.max_output));
  }
  Integer decided(0);
  Integer undecided(0);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    switch (membership(entries_[i].outcome, e)) {
      case Membership::yes: decided += scaled_weights_[i]; break;
      case Membership::maybe: undecided += scaled_weights_[i]; break;
      case Membership::no: break;
    }
  }
  const Rational scale = pow2_neg(config_.max_bits);
  Rational lo = Rational(decided) * scale;
  Rational hi = Rational(decided + undecided) * scale + unexplored_mass();
  lo.canonicalize();
  hi.canonicalize();
  return ProbInterval(lo, hi);
}

std::optional<unsigned> Census::complexity_upper(std::string_view x, ComplexityMode mode) const {
  for (const auto& entry : entries_) {
    const auto& out = entry.outcome.output;
    const bool witness = mode == ComplexityMode::monotone
                             ? out.size() >= x.size() && out.compare(0, x.size(), x) == 0
                             : entry.outcome.status == RunStatus::halted && out == x;
    if (witness) return static_cast<unsigned>(entry.bits.size());
  }
  return std::nullopt;
}

}  // namespace ravenlab::machine
