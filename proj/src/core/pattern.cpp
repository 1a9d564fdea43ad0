#include "ravenlab/core/pattern.hpp"

#include <numeric>

#include "ravenlab/core/errors.hpp"

namespace ravenlab {

Pattern::Pattern(std::string preamble, std::string period)
    : preamble_(std::move(preamble)), period_(std::move(period)) {}

Pattern Pattern::parse(std::string_view text) {
  const auto bad = [&](const char* why) {
    return InputError("malformed pattern \"" + std::string(text) + "\": " + why);
  };
  for (char c : text) {
    if (c == '(' || c == ')' || c == '*') continue;
    if (c < 'A' || c > 'Z') throw bad("only upper-case letters, parentheses and '*' are allowed");
  }
  if (text.find('*') == std::string_view::npos) {
    if (text.find_first_of("()") != std::string_view::npos) throw bad("parenthesized period needs '*'");
    return finite(std::string(text));
  }
  if (text.back() != '*' || text.find('*') != text.size() - 1) throw bad("'*' may only end the pattern");
  const auto body = text.substr(0, text.size() - 1);
  if (body.empty()) throw bad("empty period");
  if (body.back() == ')') {
    const auto open = body.rfind('(');
    if (open == std::string_view::npos) throw bad("unbalanced parentheses");
    const auto pre = body.substr(0, open);
    const auto per = body.substr(open + 1, body.size() - open - 2);
    if (per.empty()) throw bad("empty period");
    if (pre.find_first_of("()") != std::string_view::npos || per.find_first_of("()") != std::string_view::npos) {
      throw bad("nested or repeated parentheses");
    }
    return Pattern(std::string(pre), std::string(per));
  }
  if (body.find_first_of("()") != std::string_view::npos) throw bad("unbalanced parentheses");
  return Pattern(std::string(body.substr(0, body.size() - 1)), std::string(1, body.back()));
}

char Pattern::at(std::size_t i) const {
  if (i < preamble_.size()) return preamble_[i];
  if (period_.empty()) throw InputError("position " + std::to_string(i) + " beyond finite pattern");
  return period_[(i - preamble_.size()) % period_.size()];
}

std::string Pattern::prefix(std::size_t n) const {
  if (!is_infinite() && n > preamble_.size()) {
    throw InputError("finite pattern \"" + preamble_ + "\" is shorter than " + std::to_string(n));
  }
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

bool Pattern::extends(std::string_view word) const {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!has(i) || at(i) != word[i]) return false;
  }
  return true;
}

std::size_t Pattern::first_difference(const Pattern& other) const {
  // Past max(preamble) + lcm(period) positions both strings are periodic with
  // a common period, so any difference shows up before that horizon.
  std::size_t horizon = std::max(preamble_.size(), other.preamble_.size());
  if (is_infinite() && other.is_infinite()) {
    horizon += std::lcm(period_.size(), other.period_.size());
  } else {
    horizon += std::max(period_.size(), other.period_.size()) + 1;
  }
  for (std::size_t i = 0; i <= horizon; ++i) {
    const bool a = has(i);
    const bool b = other.has(i);
    if (!a && !b) return std::string::npos;
    if (a != b || at(i) != other.at(i)) return i;
  }
  return std::string::npos;
}

bool Pattern::same_string(const Pattern& other) const { return first_difference(other) == std::string::npos; }

std::string Pattern::to_string() const {
  if (!is_infinite()) return preamble_;
  return preamble_ + "(" + period_ + ")*";
}

}  // namespace ravenlab
