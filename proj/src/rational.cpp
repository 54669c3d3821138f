#include "subadd/rational.hpp"

#include <limits>

#include "subadd/error.hpp"

namespace subadd {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonSymmetric: return "NonSymmetric";
    case ErrorKind::InvalidCenter: return "InvalidCenter";
    case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NotAntiNef: return "NotAntiNef";
    case ErrorKind::NegativeMarked: return "NegativeMarked";
    case ErrorKind::StageOutOfRange: return "StageOutOfRange";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::NoLambda: return "NoLambda";
    case ErrorKind::ClassificationViolation: return "ClassificationViolation";
    case ErrorKind::NotGorenstein: return "NotGorenstein";
    case ErrorKind::NoQualifyingCycle: return "NoQualifyingCycle";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownExample: return "UnknownExample";
  }
  return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::SingularMatrix, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool parse_integer(const std::string& s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') return false;
  }
  std::string digits = s[0] == '+' ? s.substr(1) : s;
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  Integer num, den = 1;
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string::npos) {
    std::string d = text.substr(slash + 1);
    ok = !d.empty() && d[0] != '-' && d[0] != '+' && parse_integer(d, den) && den != 0;
  }
  if (!ok) throw Error(ErrorKind::ParseError, "not a rational: \"" + text + "\"");
  return Rational(num, den);
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Integer Rational::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(ErrorKind::InvalidParameters, "integer out of range");
  return v.get_si();
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw Error(ErrorKind::NonIntegral, str() + " is not an integer");
  return subadd::to_int64(q_.get_num());
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::SingularMatrix, "division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace subadd
