#include "dikeopt/rational.hpp"

#include <cctype>

#include "dikeopt/error.hpp"

namespace dikeopt {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) fail(ErrorCode::IoError, "empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) fail(ErrorCode::IoError, "sign without digits in '" + std::string(text) + "'");

  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      fail(ErrorCode::IoError, "malformed fraction '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(ErrorCode::IoError, "zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  auto dot = s.find('.');
  std::string_view whole = dot == std::string_view::npos ? s : s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view() : s.substr(dot + 1);
  if (whole.empty() && frac.empty())
    fail(ErrorCode::IoError, "no digits in '" + std::string(text) + "'");
  if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
    fail(ErrorCode::IoError, "malformed decimal '" + std::string(text) + "'");

  std::string digits;
  digits.reserve(whole.size() + frac.size());
  digits.append(whole);
  digits.append(frac);
  mpz_class n(digits.empty() ? "0" : digits, 10);
  mpz_class d(1);
  for (size_t i = 0; i < frac.size(); ++i) d *= 10;
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_decimal_string(const Rational& value) {
  mpz_class num = value.get_num();
  mpz_class den = value.get_den();

  // Strip factors of 2 and 5; if anything is left the decimal does not
  // terminate and we fall back to the fraction form.
  mpz_class rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return to_fraction_string(value);

  int k = twos > fives ? twos : fives;
  mpz_class scale(1);
  for (int i = 0; i < k; ++i) scale *= 10;
  mpz_class scaled = num * scale / den;  // exact by construction

  bool negative = scaled < 0;
  mpz_class mag = negative ? mpz_class(-scaled) : scaled;
  std::string digits = mag.get_str(10);
  if (k == 0) return (negative ? "-" : "") + digits;

  if (digits.size() <= static_cast<size_t>(k))
    digits.insert(0, static_cast<size_t>(k) + 1 - digits.size(), '0');
  digits.insert(digits.size() - static_cast<size_t>(k), ".");
  return (negative ? "-" : "") + digits;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInstance: return "INVALID_INSTANCE";
    case ErrorCode::NonMonotonePlan: return "NON_MONOTONE_PLAN";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::IoError: return "IO_ERROR";
    case ErrorCode::PointInfeasible: return "POINT_INFEASIBLE";
    case ErrorCode::ExchangeIncreasedObjective: return "EXCHANGE_INCREASED_OBJECTIVE";
    case ErrorCode::ReassignmentIncreasedObjective: return "REASSIGNMENT_INCREASED_OBJECTIVE";
    case ErrorCode::ConditionsViolated: return "CONDITIONS_VIOLATED";
    case ErrorCode::SearchSpaceTooLarge: return "SEARCH_SPACE_TOO_LARGE";
    case ErrorCode::NotAPath: return "NOT_A_PATH";
    case ErrorCode::CapacityOverflowsHeightSet: return "CAPACITY_OVERFLOWS_HEIGHT_SET";
    case ErrorCode::DimsTooLarge: return "DIMS_TOO_LARGE";
  }
  return "UNKNOWN";
}

}  // namespace dikeopt
