#pragma once

#include "genus1/invariants.hpp"
#include "genus1/models.hpp"

namespace genus1 {

/// alpha_2 = 1, alpha_3 = 1/2, alpha_4 = 2. Other degrees throw DomainError.
Rational alpha(int degree);

/// The short Weierstrass form attached to a model of degree 2, 3 or 4:
///   n=2: (i, j) of the completed square
///   n=3: (-108 S, 27 T)
///   n=4: (i, j) of det(xA + zB)
/// Degrees 1 and 5 throw DomainError.
ShortWeierstrass jacobian_of_model(const GenusOneModel& m);

/// H = det(second partials) / 216, a cubic form in (x, y, z).
RationalPolynomial hessian_covariant(const TernaryCubicModel& t);

struct QuarticCovariants {
  RationalPolynomial g;  // degree 4
  RationalPolynomial h;  // degree 6
};

/// g = (q_xz^2 - q_xx q_zz)/144, h = (q_x g_z - q_z g_x)/8.
QuarticCovariants quartic_covariants_gh(const BinaryQuartic& q);

struct AffinePoint {
  Rational x, y;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Image of P = (x0 : y0 : z0) under f2, evaluated on the chart z = 1 of
/// P(1, 2, 1): X = g(x0, z0) / y0^2, Y = h(x0, z0) / y0^3. A model with a
/// nonzero y-linear part is completed first (y -> y + p/2).
/// Throws DomainError if P is off the curve or y0 z0 = 0.
AffinePoint point_map_f2(const BinaryQuarticModel& m, const Rational& x0, const Rational& y0,
                         const Rational& z0);

/// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t. Throws DomainError for u = 0.
WeierstrassModel weierstrass_transform(const WeierstrassModel& w, const Rational& u, const Rational& r,
                                       const Rational& s, const Rational& t);

/// Both sides of c4(m) = alpha^4 c4(W), c6(m) = alpha^6 c6(W) and
/// delta(m) = alpha^12 delta(W), where W is the Jacobian.
struct RelationReport {
  int degree = 0;
  Rational alpha;
  ShortWeierstrass jacobian;
  InvariantTriple model;     // direct invariants of the model
  InvariantTriple weierstrass;  // invariants of the Jacobian
  Rational c4_expected, c6_expected, delta_expected;  // alpha^k times the Jacobian side
  bool c4_ok = false, c6_ok = false, delta_ok = false;

  bool all_ok() const noexcept { return c4_ok && c6_ok && delta_ok; }
};

RelationReport check_invariant_relations(const GenusOneModel& m);

}  // namespace genus1
