#pragma once

#include <cstdint>
#include <string>

#include "genus1/rational.hpp"

namespace genus1 {

/// A prime p < 2^32, checked by trial division on construction.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);
  std::uint64_t value() const noexcept { return p_; }
  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint64_t p_;
};

/// Element of F_p. Arithmetic between elements of different fields throws
/// DomainError.
class Fp {
 public:
  Fp(std::int64_t value, PrimeModulus p);
  Fp(const Integer& value, PrimeModulus p);

  std::uint64_t residue() const noexcept { return residue_; }
  PrimeModulus modulus() const noexcept { return p_; }
  std::uint64_t prime() const noexcept { return p_.value(); }
  bool is_zero() const noexcept { return residue_ == 0; }

  /// Throws DomainError for zero.
  Fp inverse() const;
  Fp pow(std::uint64_t exponent) const;

  std::string to_string() const { return std::to_string(residue_); }

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);
  Fp& operator*=(std::int64_t k);

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend Fp operator*(Fp a, std::int64_t k) { return a *= k; }
  friend Fp operator-(const Fp& a) { return Fp(0, a.p_) - a; }

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.p_ == b.p_ && a.residue_ == b.residue_;
  }

 private:
  void check_same_field(const Fp& o) const;

  std::uint64_t residue_;
  PrimeModulus p_;
};

/// Reduces r modulo p. Throws ReductionError (naming `what`) when p divides
/// the denominator.
Fp reduce(const Rational& r, PrimeModulus p, const std::string& what = "value");

}  // namespace genus1
