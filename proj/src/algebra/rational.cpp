#include "casimir/algebra/rational.hpp"

#include <cctype>

#include "casimir/error.hpp"

namespace casimir::algebra {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_token(s)) throw InputError("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_parts(std::string_view num, std::string_view den) {
  Integer n = parse_integer(num);
  Integer d = parse_integer(den);
  if (d == 0) throw InputError("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return rational_from_parts(text.substr(0, slash), text.substr(slash + 1));
}

}  // namespace casimir::algebra
