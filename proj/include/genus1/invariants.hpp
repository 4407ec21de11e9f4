#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "genus1/models.hpp"

namespace genus1 {

/// (c4, c6, delta) with delta = (c4^3 - c6^2)/1728 fixed at construction.
class InvariantTriple {
 public:
  InvariantTriple() = default;
  InvariantTriple(Rational c4, Rational c6);

  const Rational& c4() const noexcept { return c4_; }
  const Rational& c6() const noexcept { return c6_; }
  const Rational& delta() const noexcept { return delta_; }

  friend bool operator==(const InvariantTriple&, const InvariantTriple&) = default;

 private:
  Rational c4_, c6_, delta_;
};

enum class PairKind { IJ, ST };

/// (i, j) of a binary quartic or Aronhold's (S, T) of a ternary cubic.
struct ClassicalPair {
  Rational first, second;
  PairKind kind;
  friend bool operator==(const ClassicalPair&, const ClassicalPair&) = default;
};

struct WeierstrassInvariants {
  Rational b2, b4, b6;
  InvariantTriple triple;
};

WeierstrassInvariants weierstrass_invariants(const WeierstrassModel& w);

/// i = (12ae - 3bd + c^2)/12, j = (72ace - 27ad^2 - 27b^2e + 9bcd - 2c^3)/432
ClassicalPair quartic_ij(const BinaryQuartic& q);

/// S and T scaled so that c4 = -1296 S and c6 = 5832 T.
ClassicalPair aronhold_ST(const TernaryCubicModel& t);

/// Normalized invariants of a model of degree 1..4. Degree 5 throws
/// DomainError.
InvariantTriple invariants_of_model(const GenusOneModel& m);

/// c4 = 192 g2, c6 = 13824 g3.
InvariantTriple short_weierstrass_invariants(const ShortWeierstrass& w);

/// The ten cubic coefficients as polynomial variables, in model field order.
const Variables& cubic_coefficient_variables();
/// c4 and c6 of the generic ternary cubic, expanded.
const RationalPolynomial& cubic_c4_polynomial();
const RationalPolynomial& cubic_c6_polynomial();

namespace detail {

struct IntegerTerm {
  long coefficient;
  std::array<std::uint8_t, 10> exponents;
};

const std::vector<IntegerTerm>& cubic_c4_terms();
const std::vector<IntegerTerm>& cubic_c6_terms();

}  // namespace detail
}  // namespace genus1
