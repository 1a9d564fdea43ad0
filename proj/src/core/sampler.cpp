#include "ravenlab/core/sampler.hpp"

#include <limits>
#include <random>
#include <vector>

#include "ravenlab/core/errors.hpp"

namespace ravenlab {

std::string sample_measure(const IidMeasure& measure, std::size_t length, std::uint64_t seed) {
  Integer denominator(1);
  for (const auto& w : measure.weights()) {
    mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), w.get_den().get_mpz_t());
  }
  if (mpz_sizeinbase(denominator.get_mpz_t(), 2) > 63) {
    throw ParameterError("weight denominators too large for the sampler");
  }
  const std::uint64_t den = mpz_get_ui(denominator.get_mpz_t());

  std::vector<std::uint64_t> cumulative;
  Integer running(0);
  for (const auto& w : measure.weights()) {
    running += w.get_num() * (denominator / w.get_den());
    cumulative.push_back(mpz_get_ui(running.get_mpz_t()));
  }

  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % den);
  std::mt19937_64 engine(seed);
  std::string out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    std::uint64_t draw = engine();
    while (draw >= limit) draw = engine();
    const std::uint64_t r = draw % den;
    std::size_t k = 0;
    while (cumulative[k] <= r) ++k;
    out.push_back(measure.alphabet().letters()[k]);
  }
  return out;
}

}  // namespace ravenlab
