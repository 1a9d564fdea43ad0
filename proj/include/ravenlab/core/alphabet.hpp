#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ravenlab {

/// A symbol is its display letter; words are plain strings of letters.
using Symbol = char;

/// Ordered finite alphabet of at least two distinct display letters.
class Alphabet {
 public:
  Alphabet(std::string letters, std::vector<std::string> names);

  /// K = BR (black raven), W = nBR, B = BnR, G = nBnR, in that order.
  static const Alphabet& ravens();

  std::size_t size() const { return letters_.size(); }
  const std::string& letters() const { return letters_; }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  std::optional<std::size_t> index_of(Symbol s) const;
  bool contains(Symbol s) const { return index_of(s).has_value(); }

  /// Throws InputError naming the first letter outside the alphabet.
  void validate(std::string_view word) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.letters_ == b.letters_; }

 private:
  std::string letters_;
  std::vector<std::string> names_;
};

namespace ravens {
inline constexpr Symbol kBlackRaven = 'K';
inline constexpr Symbol kNonBlackRaven = 'W';
inline constexpr Symbol kBlackNonRaven = 'B';
inline constexpr Symbol kNonBlackNonRaven = 'G';
}  // namespace ravens

/// Forbidden-symbol hypothesis: a finite or infinite string satisfies it iff
/// none of the forbidden symbols occurs in it.
class Hypothesis {
 public:
  explicit Hypothesis(std::string forbidden);

  /// "All ravens are black": forbids W.
  static Hypothesis all_ravens_black();

  const std::string& forbidden() const { return forbidden_; }
  bool forbids(Symbol s) const { return forbidden_.find(s) != std::string::npos; }
  bool admits(std::string_view word) const;

 private:
  std::string forbidden_;
};

}  // namespace ravenlab
