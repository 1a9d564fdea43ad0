#include "ravenlab/machine/classify.hpp"

#include <bit>

#include "ravenlab/core/errors.hpp"
#include "ravenlab/machine/census.hpp"

namespace ravenlab::machine {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::A: return "A";
    case Category::B: return "B";
    case Category::C: return "C";
    case Category::D: return "D";
    case Category::E: return "E";
    case Category::outside: return "outside";
  }
  return "?";
}

int CategorySet::size() const { return std::popcount(bits_); }

std::string CategorySet::to_string() const {
  std::string out = "{";
  for (auto c : {Category::A, Category::B, Category::C, Category::D, Category::E, Category::outside}) {
    if (!contains(c)) continue;
    if (out.size() > 1) out += ", ";
    out += machine::to_string(c);
  }
  return out + "}";
}

std::optional<Category> CategoryAssignment::decided() const {
  if (possible.size() != 1) return std::nullopt;
  for (auto c : {Category::A, Category::B, Category::C, Category::D, Category::E, Category::outside}) {
    if (possible.contains(c)) return c;
  }
  return std::nullopt;
}

CategoryAssignment classify_program(const ExecutionOutcome& outcome, std::string_view x, const Hypothesis& hyp) {
  if (x.empty()) throw InputError("classification needs t >= 1");
  const std::string history(x.substr(0, x.size() - 1));
  const char current = x.back();
  if (!hyp.admits(history)) throw InputError("history \"" + history + "\" already violates the hypothesis");
  if (outcome.output_capped && outcome.output.size() < x.size()) {
    throw InputError("outcome capped at " + std::to_string(outcome.output.size()) + " symbols, shorter than t = " +
                     std::to_string(x.size()));
  }

  std::string others;
  for (char a : Alphabet::ravens().letters()) {
    if (a != current) others.push_back(a);
  }
  const Event falsified{history, Continuation::among(others), Side::inside, hyp};
  const Event survived{std::string(x), Continuation::any(), Side::inside, hyp};
  const std::pair<Category, Event> events[] = {
      {Category::A, falsified},
      {Category::B, Event{history, Continuation::among(others), Side::outside, hyp}},
      {Category::C, survived},
      {Category::D, Event{std::string(x), Continuation::any(), Side::outside, hyp}},
      {Category::E, Event{history, Continuation::stop(), Side::all, hyp}},
  };

  CategoryAssignment result;
  for (const auto& [category, event] : events) {
    if (membership(outcome, event) != Membership::no) result.possible.insert(category);
  }
  if (membership(outcome, Event{history, Continuation::any(), Side::all, hyp}) != Membership::yes) {
    result.possible.insert(Category::outside);
  }
  return result;
}

}  // namespace ravenlab::machine
