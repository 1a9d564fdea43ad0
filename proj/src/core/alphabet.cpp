#include "ravenlab/core/alphabet.hpp"

#include <algorithm>

#include "ravenlab/core/errors.hpp"

namespace ravenlab {

Alphabet::Alphabet(std::string letters, std::vector<std::string> names)
    : letters_(std::move(letters)), names_(std::move(names)) {
  if (letters_.size() < 2) throw ParameterError("alphabet needs at least two symbols");
  if (names_.empty()) {
    for (char c : letters_) names_.emplace_back(1, c);
  }
  if (names_.size() != letters_.size()) throw ParameterError("alphabet names do not match letters");
  std::string sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParameterError("alphabet letters must be distinct");
  }
}

const Alphabet& Alphabet::ravens() {
  static const Alphabet kRavens("KWBG", {"BR", "nBR", "BnR", "nBnR"});
  return kRavens;
}

std::optional<std::size_t> Alphabet::index_of(Symbol s) const {
  const auto pos = letters_.find(s);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

void Alphabet::validate(std::string_view word) const {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!contains(word[i])) {
      throw InputError("symbol '" + std::string(1, word[i]) + "' at position " + std::to_string(i) +
                       " is not in alphabet " + letters_);
    }
  }
}

Hypothesis::Hypothesis(std::string forbidden) : forbidden_(std::move(forbidden)) {}

Hypothesis Hypothesis::all_ravens_black() { return Hypothesis(std::string(1, ravens::kNonBlackRaven)); }

bool Hypothesis::admits(std::string_view word) const {
  return std::none_of(word.begin(), word.end(), [this](char c) { return forbids(c); });
}

}  // namespace ravenlab
