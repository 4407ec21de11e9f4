#include "genus1/jacobian.hpp"

namespace genus1 {

Rational alpha(int degree) {
  switch (degree) {
    case 2: return Rational(1);
    case 3: return Rational(1, 2);
    case 4: return Rational(2);
    default: throw DomainError("alpha is defined for degrees 2, 3 and 4 only");
  }
}

ShortWeierstrass jacobian_of_model(const GenusOneModel& model) {
  struct Visitor {
    ShortWeierstrass operator()(const WeierstrassModel&) const {
      throw DomainError("jacobian: degree 1 is already a Weierstrass model");
    }
    ShortWeierstrass operator()(const BinaryQuarticModel& m) const {
      const auto ij = quartic_ij(quartic_part(complete_square(m)));
      return {ij.first, ij.second};
    }
    ShortWeierstrass operator()(const TernaryCubicModel& t) const {
      const auto st = aronhold_ST(t);
      return {Rational(-108) * st.first, Rational(27) * st.second};
    }
    ShortWeierstrass operator()(const QuadricPairModel& q) const {
      const auto ij = quartic_ij(BinaryQuartic::from_polynomial(gram_pencil_quartic(q)));
      return {ij.first, ij.second};
    }
    ShortWeierstrass operator()(const PfaffianModel&) const {
      throw DomainError("jacobian: degree 5 is out of scope");
    }
  };
  return std::visit(Visitor{}, model);
}

RationalPolynomial hessian_covariant(const TernaryCubicModel& t) {
  const RationalPolynomial f = cubic_polynomial(t);
  PolyMatrix<Rational> hess(3, 3, RationalPolynomial(ternary_variables()));
  for (std::size_t i = 0; i < 3; ++i) {
    const auto fi = partial_derivative(f, i);
    for (std::size_t j = 0; j < 3; ++j) hess(i, j) = partial_derivative(fi, j);
  }
  RationalPolynomial h = det_poly_matrix(hess) * Rational(1, 216);
  if (h.is_zero()) return RationalPolynomial(ternary_variables());
  return h;
}

QuarticCovariants quartic_covariants_gh(const BinaryQuartic& quartic) {
  const RationalPolynomial q = quartic.to_polynomial();
  const auto qx = partial_derivative(q, 0);
  const auto qz = partial_derivative(q, 1);
  const auto qxz = partial_derivative(qx, 1);
  RationalPolynomial g = (qxz * qxz - partial_derivative(qx, 0) * partial_derivative(qz, 1)) * Rational(1, 144);
  RationalPolynomial h = (qx * partial_derivative(g, 1) - qz * partial_derivative(g, 0)) * Rational(1, 8);
  if (g.is_zero()) g = RationalPolynomial(binary_variables());
  if (h.is_zero()) h = RationalPolynomial(binary_variables());
  return {g, h};
}

AffinePoint point_map_f2(const BinaryQuarticModel& m, const Rational& x0, const Rational& y0,
                         const Rational& z0) {
  const std::vector<Rational> xz{x0, z0};
  const Rational p = m.alpha0 * x0 * x0 + m.alpha1 * x0 * z0 + m.alpha2 * z0 * z0;
  const Rational q = evaluate(quartic_part(m).to_polynomial(), xz);
  if (y0 * y0 + p * y0 != q)
    throw DomainError("point (" + x0.to_string() + " : " + y0.to_string() + " : " + z0.to_string() +
                      ") is not on the curve");
  const Rational y = y0 + p / Rational(2);
  if (y.is_zero() || z0.is_zero())
    throw DomainError("point at infinity of the map's chart (y0 z0 = 0)");
  const auto [g, h] = quartic_covariants_gh(quartic_part(complete_square(m)));
  return {evaluate(g, xz) / (y * y), evaluate(h, xz) / (y * y * y)};
}

WeierstrassModel weierstrass_transform(const WeierstrassModel& w, const Rational& u, const Rational& r,
                                       const Rational& s, const Rational& t) {
  if (u.is_zero()) throw DomainError("weierstrass_transform: u must be nonzero");
  const Rational two(2), three(3);
  const Rational a1 = (w.a1 + two * s) / u;
  const Rational a2 = (w.a2 - s * w.a1 + three * r - s * s) / u.pow(2);
  const Rational a3 = (w.a3 + r * w.a1 + two * t) / u.pow(3);
  const Rational a4 =
      (w.a4 - s * w.a3 + two * r * w.a2 - (t + r * s) * w.a1 + three * r * r - two * s * t) / u.pow(4);
  const Rational a6 = (w.a6 + r * w.a4 + r * r * w.a2 + r * r * r - t * w.a3 - t * t - r * t * w.a1) / u.pow(6);
  return {a1, a2, a3, a4, a6};
}

RelationReport check_invariant_relations(const GenusOneModel& m) {
  RelationReport report;
  report.degree = model_degree(m);
  report.alpha = alpha(report.degree);
  report.jacobian = jacobian_of_model(m);
  report.model = invariants_of_model(m);
  report.weierstrass = short_weierstrass_invariants(report.jacobian);
  report.c4_expected = report.alpha.pow(4) * report.weierstrass.c4();
  report.c6_expected = report.alpha.pow(6) * report.weierstrass.c6();
  report.delta_expected = report.alpha.pow(12) * report.weierstrass.delta();
  report.c4_ok = report.model.c4() == report.c4_expected;
  report.c6_ok = report.model.c6() == report.c6_expected;
  report.delta_ok = report.model.delta() == report.delta_expected;
  return report;
}

}  // namespace genus1
