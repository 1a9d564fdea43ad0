#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "ravenlab/core/iid_measure.hpp"

namespace ravenlab {

/// Draws `length` symbols from the measure.
///
/// Generator: std::mt19937_64 seeded with `seed` (its output sequence is fixed
/// by the C++ standard). Each symbol takes one uniform integer r in [0, D),
/// D being the common denominator of the weights, by rejection from the
/// 64-bit stream; the symbol is the first whose cumulative numerator
/// exceeds r. Throws ParameterError if D does not fit in 63 bits.
std::string sample_measure(const IidMeasure& measure, std::size_t length, std::uint64_t seed);

}  // namespace ravenlab
