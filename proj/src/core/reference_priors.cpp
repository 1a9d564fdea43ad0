#include "ravenlab/core/reference_priors.hpp"

#include "ravenlab/core/errors.hpp"

namespace ravenlab {

void check_epsilon(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= Rational(1, 4)) {
    throw ParameterError("epsilon " + to_string(epsilon) + " outside (0, 1/4)");
  }
}

std::shared_ptr<const FiniteSupportPrior> make_rho(const Rational& epsilon) {
  check_epsilon(epsilon);
  using namespace ravens;
  std::vector<Atom> atoms{
      {Pattern("", std::string(1, kNonBlackNonRaven)), Rational(1, 2)},
      {Pattern("", std::string(1, kBlackRaven)), Rational(1, 4)},
      {Pattern(std::string(1, kBlackRaven), std::string(1, kNonBlackRaven)), Rational(1, 4) - epsilon},
  };
  return std::make_shared<const FiniteSupportPrior>(Alphabet::ravens(), std::move(atoms));
}

std::shared_ptr<const MixturePrior> make_xi(const Rational& epsilon, PriorPtr universal) {
  check_epsilon(epsilon);
  if (!(universal->alphabet() == Alphabet::ravens())) throw ParameterError("universal prior must use the raven alphabet");
  std::vector<MixtureComponent> parts{{Rational(1), make_rho(epsilon)}, {epsilon, std::move(universal)}};
  return std::make_shared<const MixturePrior>(std::move(parts), /*allow_weight_excess=*/true);
}

std::shared_ptr<const IidMeasure> make_lambda_h() {
  // Alphabet order K, W, B, G.
  std::vector<Rational> weights{Rational(1, 3), Rational(0), Rational(1, 3), Rational(1, 3)};
  return std::make_shared<const IidMeasure>(Alphabet::ravens(), std::move(weights));
}

}  // namespace ravenlab
