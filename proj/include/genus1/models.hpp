#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "genus1/matrix.hpp"
#include "genus1/polynomial.hpp"
#include "genus1/prime_field.hpp"
#include "genus1/rational.hpp"

namespace genus1 {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
template <class K>
struct BasicWeierstrassModel {
  K a1, a2, a3, a4, a6;
  friend bool operator==(const BasicWeierstrassModel&, const BasicWeierstrassModel&) = default;
};

/// y^2 + (alpha0 x^2 + alpha1 xz + alpha2 z^2) y = a x^4 + b x^3 z + c x^2 z^2 + d x z^3 + e z^4
template <class K>
struct BasicBinaryQuarticModel {
  K alpha0, alpha1, alpha2, a, b, c, d, e;
  friend bool operator==(const BasicBinaryQuarticModel&, const BasicBinaryQuarticModel&) = default;
};

/// a x^3 + b y^3 + c z^3 + a2 x^2y + a3 x^2z + b1 xy^2 + b3 y^2z + c1 xz^2 + c2 yz^2 + m xyz
template <class K>
struct BasicTernaryCubicModel {
  K a, b, c, a2, a3, b1, b3, c1, c2, m;
  friend bool operator==(const BasicTernaryCubicModel&, const BasicTernaryCubicModel&) = default;
};

/// Pair of quadrics q1 = x A x^T, q2 = x B x^T given by symmetric 4x4 Gram
/// matrices; a mixed coefficient of q becomes two off-diagonal entries of half
/// its size.
template <class K>
class BasicQuadricPairModel {
 public:
  /// Throws DomainError unless both matrices are 4x4 and symmetric.
  BasicQuadricPairModel(Matrix<K> a, Matrix<K> b) : a_(std::move(a)), b_(std::move(b)) {
    check(a_, "q1");
    check(b_, "q2");
  }

  const Matrix<K>& gram_a() const noexcept { return a_; }
  const Matrix<K>& gram_b() const noexcept { return b_; }

  friend bool operator==(const BasicQuadricPairModel&, const BasicQuadricPairModel&) = default;

 private:
  static void check(const Matrix<K>& m, const char* name) {
    if (m.rows() != 4 || m.cols() != 4) throw DomainError(std::string(name) + " must be 4x4");
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (!(m(i, j) == m(j, i))) throw DomainError(std::string(name) + " is not symmetric");
  }

  Matrix<K> a_, b_;
};

/// 5x5 alternating matrix of linear forms in x0..x4.
template <class K>
class BasicPfaffianModel {
 public:
  /// Throws DomainError unless the matrix is 5x5, alternating, and every
  /// entry is a linear form (or zero) in x0..x4.
  explicit BasicPfaffianModel(PolyMatrix<K> m) : m_(std::move(m)) {
    if (m_.rows() != 5 || m_.cols() != 5) throw DomainError("Pfaffian model matrix must be 5x5");
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        const auto& entry = m_(i, j);
        if (!entry.is_zero() && (entry.total_degree() != 1 || !entry.is_homogeneous()))
          throw DomainError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not a linear form");
        if (!entry.is_zero() && entry.num_variables() != 5)
          throw DomainError("entries must be forms in five variables");
        if ((i == j && !entry.is_zero()) || !(entry == -m_(j, i)))
          throw DomainError("matrix is not alternating");
      }
  }

  const PolyMatrix<K>& matrix() const noexcept { return m_; }

  friend bool operator==(const BasicPfaffianModel&, const BasicPfaffianModel&) = default;

 private:
  PolyMatrix<K> m_;
};

/// y^2 = 4x^3 - g2 x - g3
struct ShortWeierstrass {
  Rational g2, g3;
  friend bool operator==(const ShortWeierstrass&, const ShortWeierstrass&) = default;
  std::string to_string() const;
};

/// a x^4 + b x^3 z + c x^2 z^2 + d x z^3 + e z^4
struct BinaryQuartic {
  Rational a, b, c, d, e;
  friend bool operator==(const BinaryQuartic&, const BinaryQuartic&) = default;

  RationalPolynomial to_polynomial() const;
  /// Throws DomainError unless `f` is a binary quartic form in (x, z).
  static BinaryQuartic from_polynomial(const RationalPolynomial& f);
};

using WeierstrassModel = BasicWeierstrassModel<Rational>;
using BinaryQuarticModel = BasicBinaryQuarticModel<Rational>;
using TernaryCubicModel = BasicTernaryCubicModel<Rational>;
using QuadricPairModel = BasicQuadricPairModel<Rational>;
using PfaffianModel = BasicPfaffianModel<Rational>;

/// Genus one model of degree 1..5, in degree order.
using GenusOneModel =
    std::variant<WeierstrassModel, BinaryQuarticModel, TernaryCubicModel, QuadricPairModel, PfaffianModel>;

/// The same model after coefficientwise reduction modulo a prime.
using ReducedModel = std::variant<BasicWeierstrassModel<Fp>, BasicBinaryQuarticModel<Fp>,
                                  BasicTernaryCubicModel<Fp>, BasicQuadricPairModel<Fp>,
                                  BasicPfaffianModel<Fp>>;

inline int model_degree(const GenusOneModel& m) { return static_cast<int>(m.index()) + 1; }
inline int model_degree(const ReducedModel& m) { return static_cast<int>(m.index()) + 1; }

// Shared variable lists.
const Variables& binary_variables();     // x, z
const Variables& ternary_variables();    // x, y, z
const Variables& quaternary_variables(); // x0, x1, x2, x3
const Variables& quinary_variables();    // x0, ..., x4

BinaryQuartic quartic_part(const BinaryQuarticModel& m);

/// y^2 = h(x, z) with h = p^2/4 + q. Throws DomainError in characteristic 2.
template <class K>
BasicBinaryQuarticModel<K> complete_square(const BasicBinaryQuarticModel<K>& m) {
  const K two = ScalarTraits<K>::from_int(2, m.a);
  if (ScalarTraits<K>::is_zero(two))
    throw DomainError("cannot complete the square in characteristic 2");
  const K quarter = ScalarTraits<K>::from_int(1, m.a) / (two * two);
  const K zero = ScalarTraits<K>::zero_like(m.a);
  return BasicBinaryQuarticModel<K>{
      zero,
      zero,
      zero,
      m.a + quarter * m.alpha0 * m.alpha0,
      m.b + quarter * two * m.alpha0 * m.alpha1,
      m.c + quarter * (m.alpha1 * m.alpha1 + two * m.alpha0 * m.alpha2),
      m.d + quarter * two * m.alpha1 * m.alpha2,
      m.e + quarter * m.alpha2 * m.alpha2,
  };
}

/// The ternary cubic as a polynomial in (x, y, z).
template <class K>
SparsePolynomial<K> cubic_polynomial(const BasicTernaryCubicModel<K>& t) {
  SparsePolynomial<K> f(ternary_variables());
  f.add_term({3, 0, 0}, t.a);
  f.add_term({0, 3, 0}, t.b);
  f.add_term({0, 0, 3}, t.c);
  f.add_term({2, 1, 0}, t.a2);
  f.add_term({2, 0, 1}, t.a3);
  f.add_term({1, 2, 0}, t.b1);
  f.add_term({0, 2, 1}, t.b3);
  f.add_term({1, 0, 2}, t.c1);
  f.add_term({0, 1, 2}, t.c2);
  f.add_term({1, 1, 1}, t.m);
  return f;
}

/// Throws DomainError unless `f` is a cubic form in (x, y, z).
TernaryCubicModel cubic_from_polynomial(const RationalPolynomial& f);

/// q = x G x^T as a polynomial in x0..x3.
template <class K>
SparsePolynomial<K> quadric_from_gram(const Matrix<K>& g) {
  SparsePolynomial<K> q(quaternary_variables());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      Exponents e(4, 0);
      ++e[i];
      ++e[j];
      q.add_term(e, i == j ? g(i, j) : g(i, j) * ScalarTraits<K>::from_int(2, g(i, j)));
    }
  return q;
}

template <class K>
std::array<SparsePolynomial<K>, 2> quadrics(const BasicQuadricPairModel<K>& m) {
  return {quadric_from_gram(m.gram_a()), quadric_from_gram(m.gram_b())};
}

/// Gram matrix of a quadratic form in x0..x3. Throws DomainError unless `q`
/// is a quadratic form in those variables.
Matrix<Rational> gram_matrix(const RationalPolynomial& q);
QuadricPairModel quadric_pair_from_polynomials(const RationalPolynomial& q1,
                                               const RationalPolynomial& q2);

/// det(xA + zB) as a binary quartic in (x, z).
RationalPolynomial gram_pencil_quartic(const QuadricPairModel& m);

/// q_i = (-1)^i Pf(M with row and column i deleted), i = 0..4.
template <class K>
std::array<SparsePolynomial<K>, 5> pfaffian_quadrics(const BasicPfaffianModel<K>& model) {
  const auto& m = model.matrix();
  std::array<SparsePolynomial<K>, 5> out;
  for (std::size_t i = 0; i < 5; ++i) {
    std::array<std::size_t, 4> r{};
    for (std::size_t k = 0, n = 0; k < 5; ++k)
      if (k != i) r[n++] = k;
    auto at = [&](int u, int v) -> const SparsePolynomial<K>& { return m(r[u], r[v]); };
    SparsePolynomial<K> pf = at(0, 1) * at(2, 3) - at(0, 2) * at(1, 3) + at(0, 3) * at(1, 2);
    out[i] = (i % 2 == 0) ? pf : -pf;
    if (out[i].is_zero()) out[i] = SparsePolynomial<K>(quinary_variables());
  }
  return out;
}

/// y^2 z + a1 xyz + a3 yz^2 - x^3 - a2 x^2 z - a4 xz^2 - a6 z^3
TernaryCubicModel homogenize_weierstrass(const WeierstrassModel& w);

/// Coefficientwise reduction. Throws ReductionError naming the first
/// coefficient whose denominator p divides.
ReducedModel reduce_mod_p(const GenusOneModel& m, PrimeModulus p);

/// Equations cutting out the curve, with per-variable weights of the ambient
/// (weighted) projective space:
///   n=1: the homogenized Weierstrass cubic in (x, y, z)
///   n=2: y^2 + p(x,z) y - q(x,z) in (x, y, z) with weights (1, 2, 1)
///   n=3: the cubic;  n=4: the two quadrics;  n=5: the five Pfaffians.
struct ModelEquations {
  std::vector<RationalPolynomial> equations;
  std::vector<unsigned> weights;
};
ModelEquations defining_equations(const GenusOneModel& m);

}  // namespace genus1
