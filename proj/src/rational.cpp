#include "superorbit/rational.hpp"

#include <cctype>

#include "superorbit/error.hpp"

namespace superorbit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::InconsistentAntisymmetry: return "InconsistentAntisymmetry";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::TargetNotIdeal: return "TargetNotIdeal";
    case ErrorKind::LambdaNotNonnegative: return "LambdaNotNonnegative";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NotCliffordType: return "NotCliffordType";
    case ErrorKind::NegativeCentralValue: return "NegativeCentralValue";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "UnknownError";
}

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t k = pos; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
  }
  mpz_class value(std::string(text.substr(pos)), 10);
  return negative ? mpz_class(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = trim(text);
  const auto slash = whole.find('/');
  mpz_class num = parse_integer(trim(whole.substr(0, slash)), whole);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(trim(whole.substr(slash + 1)), whole);
    if (den == 0) {
      throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(whole) + "'");
    }
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Gauss& value) {
  if (is_zero(value.im)) return to_string(value.re);
  std::string im;
  if (value.im == 1) {
    im = "i";
  } else if (value.im == -1) {
    im = "-i";
  } else {
    im = to_string(value.im) + "*i";
  }
  if (is_zero(value.re)) return im;
  if (im.front() == '-') return to_string(value.re) + im;
  return to_string(value.re) + "+" + im;
}

}  // namespace superorbit
