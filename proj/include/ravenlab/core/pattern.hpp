#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace ravenlab {

/// Finite string (empty period) or eventually periodic infinite string
/// preamble · period^∞.
///
/// Text form: `PREFIX(PERIOD)*`, with `X*` shorthand for a single-letter
/// period (`KG*` is `K(G)*`); no star means a finite string.
class Pattern {
 public:
  Pattern() = default;
  Pattern(std::string preamble, std::string period);

  static Pattern finite(std::string word) { return Pattern(std::move(word), {}); }
  /// Throws InputError on malformed text.
  static Pattern parse(std::string_view text);

  const std::string& preamble() const { return preamble_; }
  const std::string& period() const { return period_; }
  bool is_infinite() const { return !period_.empty(); }
  /// Length of a finite pattern; unspecified for infinite ones.
  std::size_t finite_length() const { return preamble_.size(); }

  /// Symbol at 0-based position; requires i < length for finite patterns.
  char at(std::size_t i) const;
  /// True when the pattern has a symbol at position i.
  bool has(std::size_t i) const { return is_infinite() || i < preamble_.size(); }
  /// First n symbols; throws InputError if a finite pattern is shorter.
  std::string prefix(std::size_t n) const;
  /// Whether `word` is a prefix of this (finite or infinite) string.
  bool extends(std::string_view word) const;
  /// Every symbol that ever occurs.
  std::string letters() const { return preamble_ + period_; }

  /// Identity of the denoted strings, not of the representations.
  bool same_string(const Pattern& other) const;
  /// Index of the first position where the two strings differ (or where one
  /// finite string ends); npos when they denote the same string.
  std::size_t first_difference(const Pattern& other) const;

  std::string to_string() const;

 private:
  std::string preamble_;
  std::string period_;
};

}  // namespace ravenlab
