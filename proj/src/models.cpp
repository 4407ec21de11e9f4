#include "genus1/models.hpp"

namespace genus1 {

const Variables& binary_variables() {
  static const Variables v = make_variables({"x", "z"});
  return v;
}

const Variables& ternary_variables() {
  static const Variables v = make_variables({"x", "y", "z"});
  return v;
}

const Variables& quaternary_variables() {
  static const Variables v = make_variables({"x0", "x1", "x2", "x3"});
  return v;
}

const Variables& quinary_variables() {
  static const Variables v = make_variables({"x0", "x1", "x2", "x3", "x4"});
  return v;
}

std::string ShortWeierstrass::to_string() const {
  std::string out = "y^2 = 4*x^3";
  auto append = [&out](const Rational& c, const std::string& mono) {
    // the curve carries -g2 x - g3
    if (c.is_zero()) return;
    const Rational shown = -c;
    out += shown.sign() < 0 ? " - " : " + ";
    const Rational mag = shown.abs();
    if (mono.empty())
      out += mag.to_string();
    else
      out += (mag == Rational(1) ? "" : mag.to_string() + "*") + mono;
  };
  append(g2, "x");
  append(g3, "");
  return out;
}

RationalPolynomial BinaryQuartic::to_polynomial() const {
  RationalPolynomial f(binary_variables());
  f.add_term({4, 0}, a);
  f.add_term({3, 1}, b);
  f.add_term({2, 2}, c);
  f.add_term({1, 3}, d);
  f.add_term({0, 4}, e);
  return f;
}

BinaryQuartic BinaryQuartic::from_polynomial(const RationalPolynomial& f) {
  if (f.is_zero()) return {};
  if (!same_variables(f.variables(), binary_variables()))
    throw DomainError("binary quartic must be a polynomial in (x, z)");
  if (f.total_degree() != 4 || !f.is_homogeneous())
    throw DomainError("not a binary quartic form: " + f.to_string());
  return {f.coefficient({4, 0}), f.coefficient({3, 1}), f.coefficient({2, 2}),
          f.coefficient({1, 3}), f.coefficient({0, 4})};
}

BinaryQuartic quartic_part(const BinaryQuarticModel& m) { return {m.a, m.b, m.c, m.d, m.e}; }

TernaryCubicModel cubic_from_polynomial(const RationalPolynomial& f) {
  if (f.is_zero()) return {};
  if (!same_variables(f.variables(), ternary_variables()))
    throw DomainError("ternary cubic must be a polynomial in (x, y, z)");
  if (f.total_degree() != 3 || !f.is_homogeneous())
    throw DomainError("not a ternary cubic form: " + f.to_string());
  return {f.coefficient({3, 0, 0}), f.coefficient({0, 3, 0}), f.coefficient({0, 0, 3}),
          f.coefficient({2, 1, 0}), f.coefficient({2, 0, 1}), f.coefficient({1, 2, 0}),
          f.coefficient({0, 2, 1}), f.coefficient({1, 0, 2}), f.coefficient({0, 1, 2}),
          f.coefficient({1, 1, 1})};
}

Matrix<Rational> gram_matrix(const RationalPolynomial& q) {
  Matrix<Rational> g(4, 4, Rational());
  if (q.is_zero()) return g;
  if (!same_variables(q.variables(), quaternary_variables()))
    throw DomainError("quadric must be a polynomial in x0..x3");
  if (q.total_degree() != 2 || !q.is_homogeneous())
    throw DomainError("not a quadratic form: " + q.to_string());
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      g(idx[0], idx[0]) = c;
    } else {
      g(idx[0], idx[1]) = c / Rational(2);
      g(idx[1], idx[0]) = c / Rational(2);
    }
  }
  return g;
}

QuadricPairModel quadric_pair_from_polynomials(const RationalPolynomial& q1,
                                               const RationalPolynomial& q2) {
  return QuadricPairModel(gram_matrix(q1), gram_matrix(q2));
}

RationalPolynomial gram_pencil_quartic(const QuadricPairModel& m) {
  const auto& vars = binary_variables();
  const auto x = RationalPolynomial::variable(vars, "x", Rational(1));
  const auto z = RationalPolynomial::variable(vars, "z", Rational(1));
  PolyMatrix<Rational> pencil(4, 4, RationalPolynomial(vars));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) pencil(i, j) = x * m.gram_a()(i, j) + z * m.gram_b()(i, j);
  return det_poly_matrix(pencil);
}

TernaryCubicModel homogenize_weierstrass(const WeierstrassModel& w) {
  return {Rational(-1), Rational(0), -w.a6, Rational(0), -w.a2,
          Rational(0),  Rational(1), -w.a4, w.a3,        w.a1};
}

namespace {

Matrix<Fp> reduce_matrix(const Matrix<Rational>& m, PrimeModulus p, const std::string& name) {
  Matrix<Fp> out(m.rows(), m.cols(), Fp(0, p));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = reduce(m(i, j), p, name + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  return out;
}

struct Reducer {
  PrimeModulus p;

  ReducedModel operator()(const WeierstrassModel& w) const {
    return BasicWeierstrassModel<Fp>{reduce(w.a1, p, "a1"), reduce(w.a2, p, "a2"),
                                     reduce(w.a3, p, "a3"), reduce(w.a4, p, "a4"),
                                     reduce(w.a6, p, "a6")};
  }
  ReducedModel operator()(const BinaryQuarticModel& m) const {
    return BasicBinaryQuarticModel<Fp>{
        reduce(m.alpha0, p, "alpha0"), reduce(m.alpha1, p, "alpha1"), reduce(m.alpha2, p, "alpha2"),
        reduce(m.a, p, "a"),           reduce(m.b, p, "b"),           reduce(m.c, p, "c"),
        reduce(m.d, p, "d"),           reduce(m.e, p, "e")};
  }
  ReducedModel operator()(const TernaryCubicModel& t) const {
    return BasicTernaryCubicModel<Fp>{reduce(t.a, p, "a"),   reduce(t.b, p, "b"),
                                      reduce(t.c, p, "c"),   reduce(t.a2, p, "a2"),
                                      reduce(t.a3, p, "a3"), reduce(t.b1, p, "b1"),
                                      reduce(t.b3, p, "b3"), reduce(t.c1, p, "c1"),
                                      reduce(t.c2, p, "c2"), reduce(t.m, p, "m")};
  }
  ReducedModel operator()(const QuadricPairModel& q) const {
    auto a = reduce_matrix(q.gram_a(), p, "q1");
    auto b = reduce_matrix(q.gram_b(), p, "q2");
    return BasicQuadricPairModel<Fp>(std::move(a), std::move(b));
  }
  ReducedModel operator()(const PfaffianModel& m) const {
    PolyMatrix<Fp> out(5, 5, FpPolynomial(quinary_variables()));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        const std::string where = "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]";
        out(i, j) = map_coefficients(m.matrix()(i, j), [&](const Exponents&, const Rational& c) {
          return reduce(c, p, where);
        });
        if (out(i, j).is_zero()) out(i, j) = FpPolynomial(quinary_variables());
      }
    return BasicPfaffianModel<Fp>(std::move(out));
  }
};

}  // namespace

ReducedModel reduce_mod_p(const GenusOneModel& m, PrimeModulus p) {
  return std::visit(Reducer{p}, m);
}

ModelEquations defining_equations(const GenusOneModel& model) {
  struct Visitor {
    ModelEquations operator()(const WeierstrassModel& w) const {
      return {{cubic_polynomial(homogenize_weierstrass(w))}, {1, 1, 1}};
    }
    ModelEquations operator()(const BinaryQuarticModel& m) const {
      RationalPolynomial f(ternary_variables());
      f.add_term({0, 2, 0}, Rational(1));
      f.add_term({2, 1, 0}, m.alpha0);
      f.add_term({1, 1, 1}, m.alpha1);
      f.add_term({0, 1, 2}, m.alpha2);
      f.add_term({4, 0, 0}, -m.a);
      f.add_term({3, 0, 1}, -m.b);
      f.add_term({2, 0, 2}, -m.c);
      f.add_term({1, 0, 3}, -m.d);
      f.add_term({0, 0, 4}, -m.e);
      return {{f}, {1, 2, 1}};
    }
    ModelEquations operator()(const TernaryCubicModel& t) const {
      return {{cubic_polynomial(t)}, {1, 1, 1}};
    }
    ModelEquations operator()(const QuadricPairModel& q) const {
      auto [q1, q2] = quadrics(q);
      return {{q1, q2}, {1, 1, 1, 1}};
    }
    ModelEquations operator()(const PfaffianModel& m) const {
      auto qs = pfaffian_quadrics(m);
      return {{qs.begin(), qs.end()}, {1, 1, 1, 1, 1}};
    }
  };
  return std::visit(Visitor{}, model);
}

}  // namespace genus1
