#include "coalgame/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace coalgame {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) +
                              "' (expected an integer, a decimal string or \"p/q\")");
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) bad_number(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  mpz_class num, den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num_part = s.substr(0, slash);
    std::string_view den_part = s.substr(slash + 1);
    if (!all_digits(num_part) || !all_digits(den_part)) bad_number(text);
    num = mpz_class(std::string(num_part), 10);
    den = mpz_class(std::string(den_part), 10);
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    // Allow ".5" and "5." but not "." alone.
    if (int_part.empty() && frac_part.empty()) bad_number(text);
    if (!int_part.empty() && !all_digits(int_part)) bad_number(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_number(text);
    std::string digits = std::string(int_part) + std::string(frac_part);
    num = mpz_class(digits.empty() ? "0" : digits, 10);
    den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  } else {
    if (!all_digits(s)) bad_number(text);
    num = mpz_class(std::string(s), 10);
    den = 1;
  }

  if (negative) num = -num;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

std::string to_decimal_string(const Rational& value) {
  char buf[64];
  double d = value.get_d();
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  if (ec != std::errc()) return "?";
  return std::string(buf, ptr);
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace coalgame
