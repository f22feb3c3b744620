#include "vconf/numeric.hpp"

#include <cctype>

#include "vconf/error.hpp"

namespace vconf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::R1Violation: return "R1Violation";
    case ErrorCode::R2Violation: return "R2Violation";
    case ErrorCode::IndexOutOfShape: return "IndexOutOfShape";
    case ErrorCode::TotalMismatch: return "TotalMismatch";
    case ErrorCode::ComponentMeaningless: return "ComponentMeaningless";
    case ErrorCode::VerticalityViolation: return "VerticalityViolation";
    case ErrorCode::CollisionError: return "CollisionError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnsupportedQ: return "UnsupportedQ";
    case ErrorCode::NotAnIrreduciblePartition: return "NotAnIrreduciblePartition";
    case ErrorCode::WrongParameterCount: return "WrongParameterCount";
    case ErrorCode::DiscViolation: return "DiscViolation";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
  }
  return "Unknown";
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // result stays integral: after step i it equals C(n-k+i, i)
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw Error(ErrorCode::ParseError, "empty number in '" + std::string(whole) + "'");
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::ParseError, "not an exact rational: '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), whole);
    BigInt den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
      throw Error(ErrorCode::ParseError, "empty number in '" + std::string(whole) + "'");
    BigInt num = int_part.empty() ? BigInt(0) : parse_integer(int_part, whole);
    BigInt den = 1;
    for (char c : frac_part) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorCode::ParseError, "not an exact rational: '" + std::string(whole) + "'");
      num = num * 10 + (c - '0');
      den *= 10;
    }
    value = Rational(num, den);
  } else {
    value = Rational(parse_integer(text, whole));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

int compare(const Rational& a, const Rational& b) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  // Both sides are normalised with positive denominators, so the cross
  // products keep the order. Rational's own == and < divide.
  const BigInt lhs = BigInt(numerator(a)) * BigInt(denominator(b));
  const BigInt rhs = BigInt(numerator(b)) * BigInt(denominator(a));
  return lhs < rhs ? -1 : (rhs < lhs ? 1 : 0);
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of a negative number");
  return boost::multiprecision::sqrt(n);
}

bool exact_rational_sqrt(const Rational& value, Rational& root) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (value < 0) return false;
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  const BigInt rn = isqrt(num);
  const BigInt rd = isqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational(rn, rd);
  return true;
}

}  // namespace vconf
