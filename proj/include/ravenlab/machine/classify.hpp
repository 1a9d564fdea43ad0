#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ravenlab/core/alphabet.hpp"
#include "ravenlab/machine/interpreter.hpp"

namespace ravenlab::machine {

/// Program categories at step t. A/B: falsified at t, inside/outside H.
/// C/D: predicted x_t, inside/outside H. E: output stops at exactly x_{<t}.
/// `outside` collects programs whose output never extends x_{<t}.
enum class Category : std::uint8_t { A, B, C, D, E, outside };

std::string_view to_string(Category c);

class CategorySet {
 public:
  void insert(Category c) { bits_ |= bit(c); }
  bool contains(Category c) const { return (bits_ & bit(c)) != 0; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  std::string to_string() const;

  friend bool operator==(const CategorySet&, const CategorySet&) = default;

 private:
  static std::uint8_t bit(Category c) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(c)); }
  std::uint8_t bits_ = 0;
};

struct CategoryAssignment {
  CategorySet possible;

  /// The unique category, when the printed facts already decide it.
  std::optional<Category> decided() const;
};

/// Classifies a program against x_{1:t}. Throws InputError for t = 0, for
/// x_{<t} containing a forbidden symbol, or when the output was capped before
/// reaching length t.
CategoryAssignment classify_program(const ExecutionOutcome& outcome, std::string_view x, const Hypothesis& hyp);

}  // namespace ravenlab::machine
