#include "genus1/rational.hpp"

#include <cctype>
#include <ostream>

#include "genus1/errors.hpp"

namespace genus1 {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedJson: return "malformed JSON";
    case ParseErrorKind::MalformedRational: return "malformed rational";
    case ParseErrorKind::MalformedPolynomial: return "malformed polynomial";
    case ParseErrorKind::UnknownDegree: return "unknown degree";
    case ParseErrorKind::WrongCoefficientCount: return "wrong coefficient count";
    case ParseErrorKind::WrongMatrixShape: return "wrong matrix shape";
    case ParseErrorKind::NonSymmetricMatrix: return "non-symmetric matrix";
    case ParseErrorKind::NonAlternatingMatrix: return "non-alternating matrix";
    case ParseErrorKind::NonLinearEntry: return "non-linear entry";
  }
  return "parse error";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto fail = [&](const char* why) {
    return ParseError(ParseErrorKind::MalformedRational,
                      "'" + std::string(text) + "' is not a rational (" + why + ")");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  if (!all_digits(num_text)) throw fail("expected decimal digits");
  Integer num(std::string(num_text), 10);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den_text = body.substr(slash + 1);
    if (!all_digits(den_text)) throw fail("expected decimal denominator");
    den = Integer(std::string(den_text), 10);
    if (den == 0) throw fail("zero denominator");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace genus1
