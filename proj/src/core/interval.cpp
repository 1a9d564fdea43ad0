#include "ravenlab/core/interval.hpp"

#include <algorithm>
#include <array>

#include "ravenlab/core/errors.hpp"

namespace ravenlab {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) {
    throw PreconditionError("interval with lower bound " + to_string(lo_) + " above upper bound " + to_string(hi_));
  }
}

Interval Interval::clamp(const Rational& floor, const Rational& ceiling) const {
  Rational lo = std::clamp(lo_, floor, ceiling);
  Rational hi = std::clamp(hi_, floor, ceiling);
  return Interval(lo, hi);
}

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_); }

Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_); }

Interval operator*(const Interval& a, const Interval& b) {
  const std::array<Rational, 4> c{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  return Interval(*std::min_element(c.begin(), c.end()), *std::max_element(c.begin(), c.end()));
}

Interval operator*(const Rational& k, const Interval& a) {
  if (k >= 0) return Interval(k * a.lo_, k * a.hi_);
  return Interval(k * a.hi_, k * a.lo_);
}

Interval divide(const Interval& numerator, const Interval& denominator) {
  if (denominator.contains_zero()) {
    throw PreconditionError("division by interval " + to_string(denominator) + " that may be zero");
  }
  const Interval reciprocal(1 / denominator.hi(), 1 / denominator.lo());
  return numerator * reciprocal;
}

Interval share(const Interval& n, const Interval& r) {
  const auto ratio = [](const Rational& num, const Rational& rest) {
    const Rational den = num + rest;
    return den == 0 ? Rational(0) : Rational(num / den);
  };
  return Interval(ratio(n.lo(), r.hi()), ratio(n.hi(), r.lo()));
}

std::string to_string(const Interval& v) { return "[" + to_string(v.lo()) + ", " + to_string(v.hi()) + "]"; }

std::ostream& operator<<(std::ostream& os, const Interval& v) { return os << to_string(v); }

ProbInterval::ProbInterval(Rational lo, Rational hi) : ProbInterval(Interval(std::move(lo), std::move(hi))) {}

ProbInterval::ProbInterval(const Interval& v) : value_(v) {
  if (v.lo() < 0 || v.hi() > 1) {
    throw PreconditionError("probability interval " + to_string(v) + " leaves [0, 1]");
  }
}

ProbInterval ProbInterval::clamped(const Interval& v) { return ProbInterval(v.clamp(Rational(0), Rational(1))); }

std::string to_string(const ProbInterval& v) { return to_string(v.interval()); }

std::ostream& operator<<(std::ostream& os, const ProbInterval& v) { return os << v.interval(); }

}  // namespace ravenlab
