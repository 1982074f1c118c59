#include "gmetric/rational.hpp"

#include "gmetric/error.hpp"

#include <cctype>

namespace gmetric {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::AsymmetricTable: return "AsymmetricTable";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::NotPartialMetric: return "NotPartialMetric";
    case Errc::NotMMetric: return "NotMMetric";
    case Errc::NonpositiveEpsilon: return "NonpositiveEpsilon";
    case Errc::CarrierTooLarge: return "CarrierTooLarge";
    case Errc::NegativeCarrierValue: return "NegativeCarrierValue";
    case Errc::CarrierViolation: return "CarrierViolation";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonTotalMap: return "NonTotalMap";
    case Errc::NegativePotential: return "NegativePotential";
    case Errc::VariantSpaceMismatch: return "VariantSpaceMismatch";
    case Errc::ExhaustedBudget: return "ExhaustedBudget";
    case Errc::UnknownClaim: return "UnknownClaim";
    case Errc::MalformedDocument: return "MalformedDocument";
    case Errc::RationalParseError: return "RationalParseError";
    case Errc::TotalityError: return "TotalityError";
    case Errc::UsageError: return "UsageError";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::string_view why) {
  throw Error(Errc::RationalParseError,
              "cannot parse rational '" + std::string(text) + "': " + std::string(why));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer pow10(unsigned exponent) {
  Integer result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= 10;
  return result;
}

// Decimal with optional fraction and exponent: [-+]digits[.digits][e[-+]digits]
Rational parse_decimal(std::string_view full, std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) parse_fail(full, "bad exponent");
    exponent = std::stoll(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      parse_fail(full, "bad decimal");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long long>(frac.size());
  } else {
    if (!all_digits(s)) parse_fail(full, "not a number");
    digits = std::string(s);
  }
  if (exponent > 4000 || exponent < -4000) parse_fail(full, "exponent out of range");
  Integer mantissa(digits);
  Rational value = exponent >= 0 ? Rational(mantissa * pow10(static_cast<unsigned>(exponent)))
                                 : Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
  return negative ? Rational(-value) : value;
}

Integer parse_integer(std::string_view full, std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) parse_fail(full, "not an integer");
  Integer value(std::string{s});
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) parse_fail(text, "empty");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text, trim(s.substr(0, slash)));
    Integer den = parse_integer(text, trim(s.substr(slash + 1)));
    if (den == 0) parse_fail(text, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  }
  return parse_decimal(text, s);
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace gmetric
