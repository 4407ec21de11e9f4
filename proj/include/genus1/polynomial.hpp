#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "genus1/errors.hpp"
#include "genus1/matrix.hpp"
#include "genus1/prime_field.hpp"
#include "genus1/rational.hpp"

namespace genus1 {

/// Coefficient-field hooks used by the generic polynomial code. Prime-field
/// elements carry their modulus, so constants are built "like" an existing
/// element.
template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational zero_like(const Rational&) { return {}; }
  static Rational from_int(long v, const Rational&) { return v; }
  static bool is_zero(const Rational& r) { return r.is_zero(); }
  static bool is_negative(const Rational& r) { return r.sign() < 0; }
  static Rational abs(const Rational& r) { return r.abs(); }
  static std::string to_string(const Rational& r) { return r.to_string(); }
};

template <>
struct ScalarTraits<Fp> {
  static Fp zero_like(const Fp& f) { return Fp(0, f.modulus()); }
  static Fp from_int(long v, const Fp& f) { return Fp(static_cast<std::int64_t>(v), f.modulus()); }
  static bool is_zero(const Fp& f) { return f.is_zero(); }
  static bool is_negative(const Fp&) { return false; }
  static Fp abs(const Fp& f) { return f; }
  static std::string to_string(const Fp& f) { return f.to_string(); }
};

using Exponents = std::vector<std::uint32_t>;
using Variables = std::shared_ptr<const std::vector<std::string>>;

Variables make_variables(std::vector<std::string> names);
bool same_variables(const Variables& a, const Variables& b);
/// Throws DomainError for a name not in `vars`.
std::size_t variable_index(const Variables& vars, std::string_view name);

/// Graded-lexicographic order, highest term first.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Sparse multivariate polynomial keyed by exponent vectors. No stored term
/// has a zero coefficient. A default-constructed polynomial is a zero that
/// adopts the variable list of whatever it is first combined with.
template <class K>
class SparsePolynomial {
 public:
  using Scalar = K;
  using Terms = std::map<Exponents, K, GrlexDescending>;
  using Traits = ScalarTraits<K>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(Variables vars) : vars_(std::move(vars)) {}

  static SparsePolynomial constant(Variables vars, const K& c) {
    const std::size_t n = vars->size();
    return monomial(std::move(vars), Exponents(n, 0), c);
  }

  static SparsePolynomial monomial(Variables vars, Exponents e, const K& c) {
    if (e.size() != vars->size()) throw DomainError("exponent vector length mismatch");
    SparsePolynomial p(std::move(vars));
    p.add_term(e, c);
    return p;
  }

  static SparsePolynomial variable(Variables vars, std::string_view name, const K& one) {
    Exponents e(vars->size(), 0);
    e[variable_index(vars, name)] = 1;
    return monomial(std::move(vars), std::move(e), one);
  }

  const Variables& variables() const noexcept { return vars_; }
  std::size_t num_variables() const noexcept { return vars_ ? vars_->size() : 0; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// -1 for the zero polynomial.
  long total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(degree_of(terms_.begin()->first));
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = degree_of(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return degree_of(t.first) == d; });
  }

  /// Coefficient of a monomial, or nullptr when absent.
  const K* find(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
  }

  K coefficient(const Exponents& e) const
    requires std::is_default_constructible_v<K>
  {
    const K* c = find(e);
    return c ? *c : K{};
  }

  void add_term(const Exponents& e, const K& c) {
    if (e.size() != num_variables()) throw DomainError("exponent vector length mismatch");
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  SparsePolynomial& operator*=(const K& k) {
    if (Traits::is_zero(k)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator-(const SparsePolynomial& a) {
    SparsePolynomial r(a.vars_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend SparsePolynomial operator*(SparsePolynomial a, const K& k) { return a *= k; }
  friend SparsePolynomial operator*(const K& k, SparsePolynomial a) { return a *= k; }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r(a.vars_ ? a.vars_ : b.vars_);
    if (a.vars_ && b.vars_ && !same_variables(a.vars_, b.vars_))
      throw DomainError("polynomials over different variable lists");
    Exponents e(r.num_variables());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
    return same_variables(a.vars_, b.vars_) && a.terms_ == b.terms_;
  }

  SparsePolynomial pow(unsigned n) const {
    if (!vars_) throw DomainError("power of a polynomial without variables");
    if (n == 0) {
      if (terms_.empty()) throw DomainError("0^0");
      return constant(vars_, Traits::from_int(1, terms_.begin()->second));
    }
    SparsePolynomial acc = *this;
    for (unsigned i = 1; i < n; ++i) acc = acc * *this;
    return acc;
  }

  /// Canonical text: "c*x^a*y^b" terms in graded-lex order joined by
  /// " + " / " - ". Unit coefficients and unit exponents are omitted.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = Traits::is_negative(c);
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      const K mag = Traits::abs(c);
      const std::string mag_text = Traits::to_string(mag);
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += (*vars_)[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        out += mag_text;
      else if (mag_text == "1")
        out += mono;
      else
        out += mag_text + "*" + mono;
    }
    return out;
  }

 private:
  static std::uint64_t degree_of(const Exponents& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
  }

  void adopt(const SparsePolynomial& o) {
    if (!vars_) {
      vars_ = o.vars_;
      return;
    }
    if (o.vars_ && !same_variables(vars_, o.vars_))
      throw DomainError("polynomials over different variable lists");
  }

  Variables vars_;
  Terms terms_;
};

using RationalPolynomial = SparsePolynomial<Rational>;
using FpPolynomial = SparsePolynomial<Fp>;
template <class K>
using PolyMatrix = Matrix<SparsePolynomial<K>>;

/// Formal partial derivative; exact over prime fields too.
template <class K>
SparsePolynomial<K> partial_derivative(const SparsePolynomial<K>& f, std::size_t var) {
  if (var >= f.num_variables()) throw DomainError("unknown variable index");
  SparsePolynomial<K> d(f.variables());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponents de = e;
    --de[var];
    d.add_term(de, c * ScalarTraits<K>::from_int(static_cast<long>(e[var]), c));
  }
  return d;
}

template <class K>
SparsePolynomial<K> partial_derivative(const SparsePolynomial<K>& f, std::string_view var) {
  if (!f.variables()) throw DomainError("unknown variable " + std::string(var));
  return partial_derivative(f, variable_index(f.variables(), var));
}

/// Exact evaluation at a point with one value per variable.
template <class K>
K evaluate(const SparsePolynomial<K>& f, const std::vector<K>& point) {
  if (point.size() != f.num_variables())
    throw DomainError("point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                      std::to_string(f.num_variables()) + " variables");
  if (f.is_zero()) {
    if (!point.empty()) return ScalarTraits<K>::zero_like(point.front());
    if constexpr (std::is_default_constructible_v<K>)
      return K{};
    else
      throw DomainError("cannot infer the field of an empty evaluation");
  }
  K acc = ScalarTraits<K>::zero_like(f.terms().begin()->second);
  for (const auto& [e, c] : f.terms()) {
    K term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

/// f composed with the linear change of variables x -> M x, i.e. each
/// variable x_i is replaced by sum_j M(i, j) x_j.
template <class K>
SparsePolynomial<K> substitute_linear(const SparsePolynomial<K>& f, const Matrix<K>& m) {
  const std::size_t n = f.num_variables();
  if (m.rows() != n || m.cols() != n)
    throw DomainError("substitution matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  SparsePolynomial<K> out(f.variables());
  if (f.is_zero()) return out;
  const K one = ScalarTraits<K>::from_int(1, f.terms().begin()->second);
  std::vector<SparsePolynomial<K>> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    SparsePolynomial<K> form(f.variables());
    for (std::size_t j = 0; j < n; ++j) {
      Exponents e(n, 0);
      e[j] = 1;
      form.add_term(e, m(i, j));
    }
    images.push_back(std::move(form));
  }
  // powers[i][k] = images[i]^k, grown on demand
  std::vector<std::vector<SparsePolynomial<K>>> powers(n);
  for (std::size_t i = 0; i < n; ++i) powers[i].push_back(SparsePolynomial<K>::constant(f.variables(), one));
  for (const auto& [e, c] : f.terms()) {
    SparsePolynomial<K> term = SparsePolynomial<K>::constant(f.variables(), c);
    for (std::size_t i = 0; i < n; ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
      if (e[i] > 0) term = term * powers[i][e[i]];
    }
    out += term;
  }
  return out;
}

/// Applies `fn` to every coefficient (e.g. reduction modulo p).
template <class K, class F>
auto map_coefficients(const SparsePolynomial<K>& f, F fn)
    -> SparsePolynomial<std::invoke_result_t<F, const Exponents&, const K&>> {
  using L = std::invoke_result_t<F, const Exponents&, const K&>;
  SparsePolynomial<L> out(f.variables());
  for (const auto& [e, c] : f.terms()) out.add_term(e, fn(e, c));
  return out;
}

/// Determinant of a square polynomial matrix (size at most 6) by cofactor
/// expansion.
template <class K>
SparsePolynomial<K> det_poly_matrix(const PolyMatrix<K>& m) {
  return determinant(m);
}

/// Parses the canonical text form (and anything looser that uses the same
/// tokens: integers or n/d rationals, variables, '*', '^', '+', '-').
/// Throws ParseError (MalformedPolynomial).
RationalPolynomial parse_polynomial(std::string_view text, const Variables& vars);

/// Renders an exponent vector as "x^2*z", or "1" for the constant monomial.
std::string monomial_to_string(const Exponents& e, const Variables& vars);

}  // namespace genus1
