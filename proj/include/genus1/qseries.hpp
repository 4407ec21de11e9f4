#pragma once

#include <string>
#include <vector>

#include "genus1/errors.hpp"
#include "genus1/prime_field.hpp"
#include "genus1/rational.hpp"

namespace genus1 {

/// Power series in q known modulo q^N. Arithmetic truncates to the smaller
/// precision of its operands.
class QSeries {
 public:
  /// Zero series of precision N >= 1.
  explicit QSeries(std::size_t precision);
  /// Throws DomainError if `coefficients` is empty.
  explicit QSeries(std::vector<Rational> coefficients);

  std::size_t precision() const noexcept { return c_.size(); }
  const Rational& operator[](std::size_t n) const { return c_.at(n); }
  Rational& operator[](std::size_t n) { return c_.at(n); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  QSeries truncated(std::size_t precision) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const Rational& k);
  friend bool operator==(const QSeries&, const QSeries&) = default;

  /// "1 + 240*q + 2160*q^2 + O(q^3)"
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

/// 1 - (4k/B_2k) sum sigma_{2k-1}(n) q^n for weight 2k >= 4 even.
QSeries eisenstein_series(unsigned weight, std::size_t precision);

/// (E4^3 - E6^2)/1728. Throws Error if a coefficient is not an integer.
QSeries discriminant_series(std::size_t precision);

/// q prod_{n >= 1} (1 - q^n)^24, truncated.
QSeries eta_product(std::size_t precision);

/// Coefficientwise reduction; throws ReductionError naming "q^n" when p
/// divides a denominator.
std::vector<Fp> reduce_series(const QSeries& s, PrimeModulus p);

/// "1 + 3*q^2 + O(q^5)" for a series over F_p.
std::string series_to_string(const std::vector<Fp>& s);

/// E_{p-1} = 1 mod p to precision N. Throws DomainError for p <= 3.
bool hasse_congruence_check(std::uint64_t p, std::size_t precision);

}  // namespace genus1
