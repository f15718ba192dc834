#include "bandq/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "bandq/error.hpp"

namespace bandq {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(ErrorCode::ParseError,
              "malformed rational literal '" + std::string(text) + "'");
}

mpz_class pow10(unsigned long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_literal(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    mpz_class d{std::string(den)};
    if (d == 0)
      throw Error(ErrorCode::ZeroDenominator,
                  "zero denominator in '" + std::string(text) + "'");
    result = Rational(mpz_class(std::string(num)), d);
  } else {
    // decimal: digits[.digits][(e|E)[+-]digits]
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      auto exp_text = s.substr(e + 1);
      bool exp_neg = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_neg = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad_literal(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_neg) exponent = -exponent;
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      auto whole = mantissa.substr(0, dot);
      auto frac = mantissa.substr(dot + 1);
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
          (whole.empty() && frac.empty()))
        bad_literal(text);
      digits = std::string(whole) + std::string(frac);
      frac_len = static_cast<long>(frac.size());
    } else {
      if (!all_digits(mantissa)) bad_literal(text);
      digits = std::string(mantissa);
    }
    mpz_class value(digits);
    long scale = exponent - frac_len;
    if (scale >= 0) {
      result = Rational(value * pow10(static_cast<unsigned long>(scale)));
    } else {
      result = Rational(value, pow10(static_cast<unsigned long>(-scale)));
    }
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

double to_double(const Rational& r) { return r.get_d(); }

Rational rationalize(double value, long max_den) {
  if (!std::isfinite(value))
    throw Error(ErrorCode::DomainError, "cannot rationalize a non-finite value");
  // Continued-fraction convergents with bounded denominator.
  bool negative = value < 0;
  long double x = std::fabs(static_cast<long double>(value));
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    long double a = std::floor(x);
    if (a > static_cast<long double>(std::numeric_limits<long>::max())) break;
    mpz_class ai(static_cast<long>(a));
    mpz_class p2 = ai * p1 + p0;
    mpz_class q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    long double frac = x - a;
    if (frac < 1e-18L) break;
    x = 1.0L / frac;
  }
  if (q1 == 0) return Rational(0);
  Rational r(p1, q1);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace bandq
