#pragma once

#include <cstdint>
#include <vector>

#include "genus1/errors.hpp"
#include "genus1/prime_field.hpp"

namespace genus1 {

/// GF(p^k) with log/exp tables. An element is encoded by its coordinates in
/// the power basis 1, x, ..., x^(k-1) read as base-p digits, so 0 and 1 are
/// the field's zero and one and 0..p-1 is the prime subfield.
class GaloisField {
 public:
  using Element = std::uint32_t;
  using Poly = std::vector<Element>;  // univariate, index = degree, trimmed

  /// Throws DomainError if k = 0 or p^k exceeds 2^22.
  GaloisField(PrimeModulus p, unsigned k);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return q_; }
  /// Coefficients of the defining primitive polynomial, constant term first,
  /// leading 1 omitted.
  const std::vector<std::uint32_t>& modulus_polynomial() const noexcept { return poly_; }

  Element from_residue(std::uint64_t r) const { return static_cast<Element>(r % p_); }
  Element add(Element a, Element b) const;
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg_[b]); }
  Element mul(Element a, Element b) const;
  /// Throws DomainError for 0.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  /// gcd of univariate polynomials, monic (empty for gcd(0, 0)).
  Poly gcd(Poly a, Poly b) const;
  Element evaluate(const Poly& f, Element x) const;
  static void trim(Poly& f);

  /// Basis of the right kernel of an n x m matrix given row-major.
  std::vector<std::vector<Element>> kernel(std::vector<Element> m, std::size_t rows, std::size_t cols) const;

 private:
  Poly rem(Poly a, const Poly& b) const;

  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> poly_;
  std::vector<Element> exp_;        // exp_[i] = g^i, i < q - 1
  std::vector<std::uint32_t> log_;  // log_[g^i] = i
  std::vector<Element> one_plus_;   // one_plus_[i] = 1 + g^i
  std::vector<Element> neg_;
};

}  // namespace genus1
