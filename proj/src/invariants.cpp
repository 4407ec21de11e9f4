#include "genus1/invariants.hpp"

namespace genus1 {

InvariantTriple::InvariantTriple(Rational c4, Rational c6)
    : c4_(std::move(c4)), c6_(std::move(c6)), delta_((c4_ * c4_ * c4_ - c6_ * c6_) / Rational(1728)) {}

WeierstrassInvariants weierstrass_invariants(const WeierstrassModel& w) {
  const Rational b2 = w.a1 * w.a1 + Rational(4) * w.a2;
  const Rational b4 = Rational(2) * w.a4 + w.a1 * w.a3;
  const Rational b6 = w.a3 * w.a3 + Rational(4) * w.a6;
  const Rational c4 = b2 * b2 - Rational(24) * b4;
  const Rational c6 = -b2 * b2 * b2 + Rational(36) * b2 * b4 - Rational(216) * b6;
  return {b2, b4, b6, InvariantTriple(c4, c6)};
}

ClassicalPair quartic_ij(const BinaryQuartic& q) {
  const auto& [a, b, c, d, e] = q;
  const Rational i = (Rational(12) * a * e - Rational(3) * b * d + c * c) / Rational(12);
  const Rational j = (Rational(72) * a * c * e - Rational(27) * a * d * d - Rational(27) * b * b * e +
                      Rational(9) * b * c * d - Rational(2) * c * c * c) /
                     Rational(432);
  return {i, j, PairKind::IJ};
}

namespace {

Rational evaluate_table(const std::vector<detail::IntegerTerm>& table, const TernaryCubicModel& t) {
  const std::array<const Rational*, 10> x{&t.a, &t.b, &t.c, &t.a2, &t.a3, &t.b1, &t.b3, &t.c1, &t.c2, &t.m};
  // powers[v][k] = x_v^k, k <= 6
  std::array<std::array<Rational, 7>, 10> powers;
  for (std::size_t v = 0; v < 10; ++v) {
    powers[v][0] = Rational(1);
    for (std::size_t k = 1; k < 7; ++k) powers[v][k] = powers[v][k - 1] * *x[v];
  }
  Rational acc;
  for (const auto& term : table) {
    Rational m(term.coefficient);
    for (std::size_t v = 0; v < 10 && !m.is_zero(); ++v)
      if (term.exponents[v]) m *= powers[v][term.exponents[v]];
    acc += m;
  }
  return acc;
}

RationalPolynomial table_polynomial(const std::vector<detail::IntegerTerm>& table) {
  RationalPolynomial f(cubic_coefficient_variables());
  for (const auto& term : table)
    f.add_term(Exponents(term.exponents.begin(), term.exponents.end()), Rational(term.coefficient));
  return f;
}

InvariantTriple scaled_ij(const ClassicalPair& ij, const Rational& k4, const Rational& k6) {
  return InvariantTriple(k4 * ij.first, k6 * ij.second);
}

}  // namespace

ClassicalPair aronhold_ST(const TernaryCubicModel& t) {
  return {evaluate_table(detail::cubic_c4_terms(), t) / Rational(-1296),
          evaluate_table(detail::cubic_c6_terms(), t) / Rational(5832), PairKind::ST};
}

InvariantTriple invariants_of_model(const GenusOneModel& model) {
  struct Visitor {
    InvariantTriple operator()(const WeierstrassModel& w) const { return weierstrass_invariants(w).triple; }
    InvariantTriple operator()(const BinaryQuarticModel& m) const {
      return scaled_ij(quartic_ij(quartic_part(complete_square(m))), Rational(192), Rational(13824));
    }
    InvariantTriple operator()(const TernaryCubicModel& t) const {
      return InvariantTriple(evaluate_table(detail::cubic_c4_terms(), t),
                             evaluate_table(detail::cubic_c6_terms(), t));
    }
    InvariantTriple operator()(const QuadricPairModel& q) const {
      const auto quartic = BinaryQuartic::from_polynomial(gram_pencil_quartic(q));
      return scaled_ij(quartic_ij(quartic), Rational(3072), Rational(884736));
    }
    InvariantTriple operator()(const PfaffianModel&) const {
      throw DomainError("degree 5: no invariant formulas in scope");
    }
  };
  return std::visit(Visitor{}, model);
}

InvariantTriple short_weierstrass_invariants(const ShortWeierstrass& w) {
  return InvariantTriple(Rational(192) * w.g2, Rational(13824) * w.g3);
}

const Variables& cubic_coefficient_variables() {
  static const Variables v = make_variables({"a", "b", "c", "a2", "a3", "b1", "b3", "c1", "c2", "m"});
  return v;
}

const RationalPolynomial& cubic_c4_polynomial() {
  static const RationalPolynomial f = table_polynomial(detail::cubic_c4_terms());
  return f;
}

const RationalPolynomial& cubic_c6_polynomial() {
  static const RationalPolynomial f = table_polynomial(detail::cubic_c6_terms());
  return f;
}

}  // namespace genus1
