#include "fbp/rational.hpp"

#include <cctype>

#include "fbp/errors.hpp"

namespace fbp {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

enum class Rounding { kHalfAway, kCeil, kFloor };

std::string to_decimal_impl(const Rational& q, int digits, Rounding mode) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational scaled = q * Rational(scale);
  Integer num = scaled.get_num();
  const Integer& den = scaled.get_den();
  Integer r;
  switch (mode) {
    case Rounding::kCeil:
      mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      break;
    case Rounding::kFloor:
      mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      break;
    case Rounding::kHalfAway: {
      const bool negative = sgn(num) < 0;
      Integer twice = 2 * abs(num) + den;
      Integer twice_den = 2 * den;
      mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), twice_den.get_mpz_t());
      if (negative) r = -r;
      break;
    }
  }
  const bool negative = sgn(r) < 0;
  std::string digits_str = Integer(abs(r)).get_str();
  if (digits > 0) {
    if (digits_str.size() <= static_cast<std::size_t>(digits)) {
      digits_str.insert(0, static_cast<std::size_t>(digits) + 1 - digits_str.size(), '0');
    }
    digits_str.insert(digits_str.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + digits_str : digits_str;
}

}  // namespace

std::string to_decimal(const Rational& q, int digits) { return to_decimal_impl(q, digits, Rounding::kHalfAway); }
std::string to_decimal_ceil(const Rational& q, int digits) { return to_decimal_impl(q, digits, Rounding::kCeil); }
std::string to_decimal_floor(const Rational& q, int digits) { return to_decimal_impl(q, digits, Rounding::kFloor); }

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw FormatError("empty rational literal");

  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  auto to_integer = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
  };

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den) || den[0] == '-' || den[0] == '+') {
      throw FormatError("malformed rational literal '" + std::string(text) + "'");
    }
    Integer d = to_integer(den);
    if (d == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
    Rational q(to_integer(num), d);
    q.canonicalize();
    return q;
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      negative = whole[0] == '-';
      whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !is_integer(whole)) ||
        (!frac.empty() && (!is_integer(frac) || frac[0] == '-' || frac[0] == '+'))) {
      throw FormatError("malformed decimal literal '" + std::string(text) + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer num = (whole.empty() ? Integer(0) : to_integer(whole)) * scale +
                  (frac.empty() ? Integer(0) : to_integer(frac));
    Rational q(negative ? Integer(-num) : num, scale);
    q.canonicalize();
    return q;
  }
  if (!is_integer(text)) throw FormatError("malformed rational literal '" + std::string(text) + "'");
  return Rational(to_integer(text));
}

}  // namespace fbp
