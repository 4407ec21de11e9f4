#include <doctest.h>

#include "genus1/invariants.hpp"
#include "oracles.hpp"
#include "random_models.hpp"

using namespace genus1;

namespace {

Rational R(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

TernaryCubicModel cubic(const std::string& text) {
  return cubic_from_polynomial(parse_polynomial(text, ternary_variables()));
}

BinaryQuartic substitute(const BinaryQuartic& q, const Matrix<Rational>& m) {
  return BinaryQuartic::from_polynomial(substitute_linear(q.to_polynomial(), m));
}

TernaryCubicModel substitute(const TernaryCubicModel& t, const Matrix<Rational>& m) {
  return cubic_from_polynomial(substitute_linear(cubic_polynomial(t), m));
}

Exponents cubic_exponents(std::initializer_list<std::pair<const char*, unsigned>> powers) {
  Exponents e(10, 0);
  for (const auto& [name, k] : powers) e[variable_index(cubic_coefficient_variables(), name)] = k;
  return e;
}

const BinaryQuarticModel kDegree2{R(0), R(0), R(1), R(1), R(1), R(1), R(0), R(0)};

}  // namespace

TEST_CASE("Weierstrass invariants") {
  const auto zero = weierstrass_invariants({});
  CHECK(zero.triple == InvariantTriple(R(0), R(0)));
  const auto w = weierstrass_invariants({R(0), R(0), R(0), R(-1), R(0)});
  CHECK(w.b4 == R(-2));
  CHECK(w.triple.c4() == R(48));
  CHECK(w.triple.c6() == R(0));
  CHECK(w.triple.delta() == R(64));
  const auto v = weierstrass_invariants({R(0), R(0), R(0), R(0), R(1)});
  CHECK(v.b6 == R(4));
  CHECK(v.triple.c6() == R(-864));
  CHECK(v.triple.delta() == R(-432));
}

TEST_CASE("quartic i and j") {
  const auto h = quartic_ij({R(1), R(1), R(1), R(0), R(1, 4)});
  CHECK(h.first == R(1, 3));
  CHECK(h.second == R(37, 1728));
  CHECK(h.kind == PairKind::IJ);
  CHECK(quartic_ij({R(1), R(0), R(0), R(0), R(1)}) == ClassicalPair{R(1), R(0), PairKind::IJ});
  CHECK(quartic_ij({}) == ClassicalPair{R(0), R(0), PairKind::IJ});
}

TEST_CASE("Aronhold S and T") {
  CHECK(aronhold_ST(cubic("x^3 + y^3 + z^3")) == ClassicalPair{R(0), R(1), PairKind::ST});
  CHECK(aronhold_ST(cubic("y^2*z + y*z^2 - x^3")) == ClassicalPair{R(0), R(-1, 27), PairKind::ST});
  CHECK(aronhold_ST(cubic("y^2*z - x^3 - x*z^2")) == ClassicalPair{R(1, 27), R(0), PairKind::ST});
}

TEST_CASE("normalized invariants of the anchor models") {
  const auto d2 = invariants_of_model(kDegree2);
  CHECK(d2.c4() == R(64));
  CHECK(d2.c6() == R(296));
  CHECK(d2.delta() == R(101));

  const auto fermat = invariants_of_model(cubic("x^3 + y^3 + z^3"));
  CHECK(fermat.c4() == R(0));
  CHECK(fermat.c6() == R(5832));
  CHECK(fermat.delta() == R(-19683));

  const auto& q = quaternary_variables();
  const auto pair1 = quadric_pair_from_polynomials(parse_polynomial("x0*x1 + x0*x2 + x2*x3", q),
                                                   parse_polynomial("x0*x3 + x1*x2 + x1*x3", q));
  CHECK(invariants_of_model(pair1) == InvariantTriple(R(1), R(-161)));
  CHECK(invariants_of_model(pair1).delta() == R(-15));

  PolyMatrix<Rational> zero(5, 5, RationalPolynomial(quinary_variables()));
  try {
    (void)invariants_of_model(PfaffianModel(zero));
    FAIL("degree 5 accepted");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("no invariant formulas in scope") != std::string::npos);
  }
}

TEST_CASE("short Weierstrass invariants") {
  CHECK(short_weierstrass_invariants({R(1, 3), R(37, 1728)}).delta() == R(101));
  CHECK(short_weierstrass_invariants({R(0), R(27)}).delta() == R(-4096L * 19683));
  CHECK(short_weierstrass_invariants({R(0), R(0)}) == InvariantTriple(R(0), R(0)));
}

TEST_CASE("delta identity holds for every triple") {
  testing::Rng rng(3);
  for (int n = 0; n < 200; ++n) {
    const Rational c4 = rng.rational(10000), c6 = rng.rational(10000);
    const InvariantTriple t(c4, c6);
    CHECK(t.delta() * R(1728) == c4 * c4 * c4 - c6 * c6);
  }
}

TEST_CASE("invariants of integral models are integral") {
  testing::Rng rng(500);
  for (int degree = 1; degree <= 4; ++degree)
    for (int n = 0; n < 500; ++n) {
      const auto t = invariants_of_model(testing::random_model(rng, degree, 9));
      CAPTURE(degree);
      CHECK(t.c4().is_integer());
      CHECK(t.c6().is_integer());
      CHECK(t.delta().is_integer());
    }
}

TEST_CASE("i and j are covariants of weights 4 and 6") {
  testing::Rng rng(17);
  for (int n = 0; n < 100; ++n) {
    const auto q = testing::random_quartic(rng, 20);
    const auto m = testing::random_invertible(rng, 2, 5);
    const Rational d = determinant(m);
    const auto before = quartic_ij(q), after = quartic_ij(substitute(q, m));
    CHECK(after.first == d.pow(4) * before.first);
    CHECK(after.second == d.pow(6) * before.second);
  }
}

TEST_CASE("S and T are covariants of weights 4 and 6") {
  testing::Rng rng(18);
  for (int n = 0; n < 100; ++n) {
    const auto t = testing::random_cubic(rng, 6);
    const auto g = testing::random_invertible(rng, 3, 3);
    const Rational d = determinant(g);
    const auto before = aronhold_ST(t), after = aronhold_ST(substitute(t, g));
    CHECK(after.first == d.pow(4) * before.first);
    CHECK(after.second == d.pow(6) * before.second);
  }
}

TEST_CASE("the cubic route restricts to the Weierstrass formulas") {
  testing::Rng rng(200);
  for (int n = 0; n < 200; ++n) {
    const auto w = testing::random_weierstrass(rng, 30, n % 2 == 1);
    CHECK(invariants_of_model(homogenize_weierstrass(w)) == weierstrass_invariants(w).triple);
  }
}

TEST_CASE("completing the square does not change the invariants") {
  testing::Rng rng(201);
  for (int n = 0; n < 200; ++n) {
    const auto m = testing::random_binary_quartic(rng, 12, n % 3 == 0);
    CHECK(invariants_of_model(m) == invariants_of_model(complete_square(m)));
  }
}

TEST_CASE("displayed monomials of the expanded cubic invariants") {
  const auto& c4 = cubic_c4_polynomial();
  const auto& c6 = cubic_c6_polynomial();
  const std::vector<std::pair<Exponents, long>> c4_terms{
      {cubic_exponents({{"a", 1}, {"b", 1}, {"c", 1}, {"m", 1}}), -216},
      {cubic_exponents({{"a", 1}, {"b", 1}, {"c1", 1}, {"c2", 1}}), 144},
      {cubic_exponents({{"a", 1}, {"c", 1}, {"b1", 1}, {"b3", 1}}), 144},
      {cubic_exponents({{"a3", 1}, {"b3", 1}, {"m", 2}}), -8},
      {cubic_exponents({{"b1", 2}, {"c1", 2}}), 16},
      {cubic_exponents({{"b1", 1}, {"c1", 1}, {"m", 2}}), -8},
      {cubic_exponents({{"m", 4}}), 1}};
  const std::vector<std::pair<Exponents, long>> c6_terms{
      {cubic_exponents({{"a", 2}, {"b", 2}, {"c", 2}}), 5832},
      {cubic_exponents({{"a", 2}, {"b", 1}, {"c", 1}, {"b3", 1}, {"c2", 1}}), -3888},
      {cubic_exponents({{"a", 2}, {"b", 1}, {"c2", 3}}), 864},
      {cubic_exponents({{"b1", 3}, {"c1", 3}}), 64},
      {cubic_exponents({{"b1", 2}, {"c1", 2}, {"m", 2}}), -48},
      {cubic_exponents({{"b1", 1}, {"c1", 1}, {"m", 4}}), 12},
      {cubic_exponents({{"m", 6}}), -1}};
  for (const auto& [e, k] : c4_terms) CHECK(c4.coefficient(e) == R(k));
  for (const auto& [e, k] : c6_terms) CHECK(c6.coefficient(e) == R(k));
  CHECK(c4.is_homogeneous());
  CHECK(c4.total_degree() == 4);
  CHECK(c6.is_homogeneous());
  CHECK(c6.total_degree() == 6);
}

TEST_CASE("cubic invariant tables match an independent nullspace derivation") {
  const auto four = testing::cubic_invariants_of_degree(4);
  REQUIRE(four.basis.size() == 1);
  CHECK(testing::normalize_at(four.basis[0], cubic_exponents({{"m", 4}}), R(1)) == cubic_c4_polynomial());

  // one invariant of degree 6, so S^2 is not in this space
  const auto six = testing::cubic_invariants_of_degree(6);
  REQUIRE(six.basis.size() == 1);
  CHECK(testing::normalize_at(six.basis[0], cubic_exponents({{"m", 6}}), R(-1)) == cubic_c6_polynomial());

  CHECK(testing::cubic_invariants_of_degree(2).basis.empty());
  CHECK(testing::cubic_invariants_of_degree(3).basis.empty());
}

TEST_CASE("evaluating the tables agrees with the expanded polynomials") {
  testing::Rng rng(9);
  for (int n = 0; n < 50; ++n) {
    const auto t = testing::random_cubic(rng, 7, true);
    const std::vector<Rational> point{t.a, t.b, t.c, t.a2, t.a3, t.b1, t.b3, t.c1, t.c2, t.m};
    const auto st = aronhold_ST(t);
    CHECK(evaluate(cubic_c4_polynomial(), point) == R(-1296) * st.first);
    CHECK(evaluate(cubic_c6_polynomial(), point) == R(5832) * st.second);
  }
}
