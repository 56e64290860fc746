#include "premon/rational.hpp"

#include <cctype>

#include "premon/errors.hpp"

namespace premon {

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  std::size_t i = 0;
  if (i < digits.size() && (digits[i] == '-' || digits[i] == '+')) ++i;
  if (i == digits.size()) throw ParseError("malformed rational \"" + std::string(whole) + "\"");
  for (std::size_t j = i; j < digits.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(digits[j]))) {
      throw ParseError("malformed rational \"" + std::string(whole) + "\"");
    }
  }
  std::string s(digits);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  const Integer num = parse_integer(trim(t.substr(0, slash)), text);
  const Integer den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (is_integer(c)) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational pow(const Rational& q, std::size_t e) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Integer pow(const Integer& z, std::size_t e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), z.get_mpz_t(), e);
  return out;
}

}  // namespace premon
