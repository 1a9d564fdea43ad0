#include "ravenlab/core/rational.hpp"

#include <cctype>

#include "ravenlab/core/errors.hpp"

namespace ravenlab {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_text(num_text)) {
    throw ParameterError("malformed rational \"" + std::string(text) + "\"");
  }
  Integer den(1);
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_text(den_text)) {
      throw ParameterError("malformed rational \"" + std::string(text) + "\"");
    }
    den = parse_integer(den_text);
    if (den == 0) throw ParameterError("zero denominator in \"" + std::string(text) + "\"");
  }
  Rational value(parse_integer(num_text), den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow2_neg(unsigned bits) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  return Rational(Integer(1), den);
}

}  // namespace ravenlab
