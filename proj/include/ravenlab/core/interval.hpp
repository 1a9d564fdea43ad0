#pragma once

#include <ostream>
#include <string>

#include "ravenlab/core/rational.hpp"

namespace ravenlab {

/// Closed rational interval [lo, hi] with lo <= hi. Arithmetic is exact, so
/// "outward rounding" reduces to choosing the right endpoint combination.
class Interval {
 public:
  Interval() = default;
  Interval(Rational lo, Rational hi);

  static Interval point(Rational value) { return Interval(value, value); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
  /// True when this interval lies inside `outer`.
  bool within(const Interval& outer) const { return outer.lo_ <= lo_ && hi_ <= outer.hi_; }
  /// True when the two intervals share at least one point.
  bool overlaps(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

  Interval clamp(const Rational& floor, const Rational& ceiling) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator*(const Rational& k, const Interval& a);
  Interval& operator+=(const Interval& other) { return *this = *this + other; }

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

 private:
  Rational lo_{0};
  Rational hi_{0};
};

/// Division by an interval that does not contain zero; throws PreconditionError otherwise.
Interval divide(const Interval& numerator, const Interval& denominator);

/// Bounds of n / (n + r) for nonnegative n, r where n and r vary independently.
/// The map is increasing in n and decreasing in r. A zero denominator at an
/// endpoint maps to 0 there; callers check definedness beforehand.
Interval share(const Interval& n, const Interval& r);

std::string to_string(const Interval& v);
std::ostream& operator<<(std::ostream& os, const Interval& v);

/// Interval inside [0, 1]; exact values have lo == hi.
class ProbInterval {
 public:
  ProbInterval() = default;
  /// Throws PreconditionError unless 0 <= lo <= hi <= 1.
  ProbInterval(Rational lo, Rational hi);
  explicit ProbInterval(const Interval& v);

  static ProbInterval exact(Rational v) { return ProbInterval(v, v); }
  static ProbInterval unknown() { return ProbInterval(Rational(0), Rational(1)); }
  /// Intersects with [0, 1]; the input must meet [0, 1].
  static ProbInterval clamped(const Interval& v);

  const Rational& lo() const { return value_.lo(); }
  const Rational& hi() const { return value_.hi(); }
  bool is_exact() const { return value_.is_point(); }
  bool is_zero() const { return value_.hi() == 0; }
  const Interval& interval() const { return value_; }
  operator const Interval&() const { return value_; }  // NOLINT(google-explicit-constructor)

  friend bool operator==(const ProbInterval& a, const ProbInterval& b) { return a.value_ == b.value_; }

 private:
  Interval value_;
};

std::string to_string(const ProbInterval& v);
std::ostream& operator<<(std::ostream& os, const ProbInterval& v);

}  // namespace ravenlab
