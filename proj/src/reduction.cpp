#include "genus1/reduction.hpp"

#include <algorithm>
#include <array>

#include "genus1/galois_field.hpp"
#include "genus1/invariants.hpp"
#include "genus1/number_theory.hpp"

namespace genus1 {

std::string ProjectivePoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coordinates.size(); ++i) {
    if (i) out += ":";
    out += coordinates[i].to_string();
  }
  return out + ")";
}

std::vector<std::uint64_t> ProjectivePoint::residues() const {
  std::vector<std::uint64_t> r;
  r.reserve(coordinates.size());
  for (const auto& c : coordinates) r.push_back(c.residue());
  return r;
}

std::vector<ProjectivePoint> projective_points(const std::vector<unsigned>& weights, PrimeModulus p) {
  const std::size_t n = weights.size();
  std::vector<std::size_t> unit, other;
  for (std::size_t i = 0; i < n; ++i) (weights[i] == 1 ? unit : other).push_back(i);
  if (unit.empty() || other.size() > 1)
    throw DomainError("point enumeration needs weight-1 coordinates and at most one other weight");
  const std::uint64_t q = p.value();

  std::vector<ProjectivePoint> out;
  for (std::size_t u = 0; u < unit.size(); ++u) {
    // unit[u] is the first nonzero weight-1 coordinate, scaled to 1
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
      if (i != unit[u] && !(weights[i] == 1 && i < unit[u])) free.push_back(i);
    std::vector<std::uint64_t> digits(free.size(), 0);
    for (;;) {
      std::vector<Fp> c(n, Fp(0, p));
      c[unit[u]] = Fp(1, p);
      for (std::size_t f = 0; f < free.size(); ++f) c[free[f]] = Fp(static_cast<std::int64_t>(digits[f]), p);
      out.push_back({std::move(c), weights});
      std::size_t f = 0;
      while (f < digits.size() && ++digits[f] == q) digits[f++] = 0;
      if (f == digits.size()) break;
    }
  }
  if (!other.empty()) {
    std::vector<Fp> c(n, Fp(0, p));
    c[other[0]] = Fp(1, p);
    out.push_back({std::move(c), weights});
  }
  return out;
}

namespace {

FpPolynomial reduce_polynomial(const RationalPolynomial& f, PrimeModulus p, const std::string& name) {
  return map_coefficients(f, [&](const Exponents& e, const Rational& c) {
    return reduce(c, p, name + "[" + monomial_to_string(e, f.variables()) + "]");
  });
}

// Polynomials whose common zeros (on the relevant chart) are the singular
// points of the reduced model.
struct SingularSystem {
  int degree = 0;
  std::vector<unsigned> weights;
  std::vector<FpPolynomial> all;     // n=3: F, F_x, F_y, F_z; n=4: q1, q2, six minors
  std::vector<FpPolynomial> chart_z; // F, F_x, F_y
  std::vector<FpPolynomial> chart_x; // F, F_y, F_z
  std::array<FpPolynomial, 2> quadrics;
};

SingularSystem singular_system(const GenusOneModel& m, PrimeModulus p) {
  SingularSystem s;
  s.degree = model_degree(m);
  if (s.degree == 5) throw DomainError("singular point search covers degrees 1..4");
  if (s.degree <= 3) (void)reduce_mod_p(m, p);  // names the offending coefficient
  const auto eq = defining_equations(m);
  s.weights = eq.weights;
  if (s.degree <= 3) {
    const FpPolynomial f = reduce_polynomial(eq.equations[0], p, "F");
    const auto fx = partial_derivative(f, 0), fy = partial_derivative(f, 1), fz = partial_derivative(f, 2);
    s.all = {f, fx, fy, fz};
    s.chart_z = {f, fx, fy};
    s.chart_x = {f, fy, fz};
    return s;
  }
  s.quadrics = {reduce_polynomial(eq.equations[0], p, "q1"), reduce_polynomial(eq.equations[1], p, "q2")};
  std::array<std::array<FpPolynomial, 4>, 2> grad;
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 4; ++i) grad[k][i] = partial_derivative(s.quadrics[k], i);
  s.all = {s.quadrics[0], s.quadrics[1]};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      s.all.push_back(grad[0][i] * grad[1][j] - grad[0][j] * grad[1][i]);
  return s;
}

bool all_vanish(const std::vector<FpPolynomial>& polys, const std::vector<Fp>& point) {
  return std::all_of(polys.begin(), polys.end(),
                     [&](const FpPolynomial& f) { return f.is_zero() || evaluate(f, point).is_zero(); });
}

std::vector<ProjectivePoint> rational_singular_points(const SingularSystem& s, PrimeModulus p) {
  std::vector<ProjectivePoint> out;
  for (auto& pt : projective_points(s.weights, p)) {
    const auto& c = pt.coordinates;
    bool singular = false;
    switch (s.degree) {
      case 1: singular = !c[2].is_zero() && all_vanish(s.chart_z, c); break;
      case 2: singular = all_vanish(c[2].is_zero() ? s.chart_x : s.chart_z, c); break;
      default: singular = all_vanish(s.all, c); break;
    }
    if (singular) out.push_back(std::move(pt));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- search over GF(p^k) ----------------------------------------------------

using Element = GaloisField::Element;

struct FieldTerm {
  Element coefficient;
  Exponents exponents;
};
using FieldPolynomial = std::vector<FieldTerm>;

FieldPolynomial to_field(const FpPolynomial& f) {
  FieldPolynomial out;
  for (const auto& [e, c] : f.terms()) out.push_back({static_cast<Element>(c.residue()), e});
  return out;
}

std::vector<FieldPolynomial> to_field(const std::vector<FpPolynomial>& fs) {
  std::vector<FieldPolynomial> out;
  for (const auto& f : fs) out.push_back(to_field(f));
  return out;
}

// Restriction of f to the line where every coordinate but `free` is fixed.
GaloisField::Poly fiber(const GaloisField& k, const FieldPolynomial& f, const std::vector<Element>& fixed,
                        std::size_t free) {
  GaloisField::Poly out;
  for (const auto& [c, e] : f) {
    Element t = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (v != free && e[v]) t = k.mul(t, k.pow(fixed[v], e[v]));
    if (out.size() <= e[free]) out.resize(e[free] + 1, 0);
    out[e[free]] = k.add(out[e[free]], t);
  }
  GaloisField::trim(out);
  return out;
}

// True when the restrictions share a root over the algebraic closure (or all
// vanish identically).
bool common_root_on_fiber(const GaloisField& k, const std::vector<FieldPolynomial>& fs,
                          const std::vector<Element>& fixed, std::size_t free) {
  GaloisField::Poly g;
  for (const auto& f : fs) {
    g = k.gcd(g, fiber(k, f, fixed, free));
    if (g.size() == 1) return false;
  }
  return true;
}

bool all_vanish_at(const GaloisField& k, const std::vector<FieldPolynomial>& fs, const std::vector<Element>& x) {
  for (const auto& f : fs) {
    Element acc = 0;
    for (const auto& [c, e] : f) {
      Element t = c;
      for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v]) t = k.mul(t, k.pow(x[v], e[v]));
      acc = k.add(acc, t);
    }
    if (acc != 0) return false;
  }
  return true;
}

bool plane_singular_over(const SingularSystem& s, const GaloisField& k) {
  const auto all = to_field(s.all);
  const auto chart_z = to_field(s.chart_z);
  const auto chart_x = to_field(s.chart_x);
  const auto& z_chart = s.degree == 3 ? all : chart_z;
  for (Element u = 0; u < k.size(); ++u)
    if (common_root_on_fiber(k, z_chart, {u, 0, 1}, 1)) return true;
  if (s.degree == 3) {
    if (common_root_on_fiber(k, all, {0, 1, 0}, 0)) return true;
    if (all_vanish_at(k, all, {1, 0, 0})) return true;
  }
  if (s.degree == 2 && common_root_on_fiber(k, chart_x, {1, 0, 0}, 1)) return true;
  return false;
}

// Gradient of q as the matrix N with grad q(x) = N x.
std::array<Element, 16> gradient_matrix(const FpPolynomial& q) {
  std::array<Element, 16> n{};
  const std::uint64_t p = q.is_zero() ? 2 : q.terms().begin()->second.prime();
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::uint32_t r = 0; r < e[i]; ++r) idx.push_back(i);
    if (idx[0] == idx[1]) {
      n[idx[0] * 5] = static_cast<Element>((2 * c.residue()) % p);
    } else {
      n[idx[0] * 4 + idx[1]] = static_cast<Element>(c.residue());
      n[idx[1] * 4 + idx[0]] = static_cast<Element>(c.residue());
    }
  }
  return n;
}

Element quadric_value(const GaloisField& k, const FieldPolynomial& q, const std::vector<Element>& x) {
  Element acc = 0;
  for (const auto& [c, e] : q) {
    Element t = c;
    for (std::size_t v = 0; v < 4; ++v)
      if (e[v]) t = k.mul(t, k.pow(x[v], e[v]));
    acc = k.add(acc, t);
  }
  return acc;
}

bool quadric_pair_singular_over(const SingularSystem& s, const GaloisField& k) {
  const std::array<std::array<Element, 16>, 2> n{gradient_matrix(s.quadrics[0]), gradient_matrix(s.quadrics[1])};
  const std::array<FieldPolynomial, 2> q{to_field(s.quadrics[0]), to_field(s.quadrics[1])};
  // A singular point x has lambda grad q1 + mu grad q2 = 0 for some (lambda : mu)
  // over the field of definition of x, i.e. x lies in ker(lambda N1 + mu N2).
  for (Element t = 0; t <= k.size(); ++t) {
    const Element lambda = t < k.size() ? 1 : 0;
    const Element mu = t < k.size() ? t : 1;
    std::vector<Element> m(16);
    for (std::size_t i = 0; i < 16; ++i) m[i] = k.add(k.mul(lambda, n[0][i]), k.mul(mu, n[1][i]));
    const auto basis = k.kernel(std::move(m), 4, 4);
    if (basis.empty()) continue;
    if (basis.size() >= 3) return true;  // two quadrics meet on a projective plane
    if (basis.size() == 1) {
      if (quadric_value(k, q[0], basis[0]) == 0 && quadric_value(k, q[1], basis[0]) == 0) return true;
      continue;
    }
    // Restrictions to the kernel line: A s^2 + B st + C t^2; common root iff
    // the resultant vanishes.
    std::vector<Element> sum(4);
    for (std::size_t i = 0; i < 4; ++i) sum[i] = k.add(basis[0][i], basis[1][i]);
    std::array<std::array<Element, 3>, 2> f;
    for (std::size_t j = 0; j < 2; ++j) {
      const Element a = quadric_value(k, q[j], basis[0]);
      const Element c = quadric_value(k, q[j], basis[1]);
      f[j] = {a, k.sub(k.sub(quadric_value(k, q[j], sum), a), c), c};
    }
    auto cross = [&](std::size_t i, std::size_t j) {
      return k.sub(k.mul(f[0][i], f[1][j]), k.mul(f[0][j], f[1][i]));
    };
    const Element ac = cross(0, 2);
    if (k.sub(k.mul(ac, ac), k.mul(cross(0, 1), cross(1, 2))) == 0) return true;
  }
  return false;
}

std::vector<unsigned> extension_degrees(int degree) {
  switch (degree) {
    case 1: return {};
    case 2: return {2};
    case 3: return {2, 3};
    default: return {2, 3, 4};
  }
}

std::optional<unsigned> geometric_search(const SingularSystem& s, PrimeModulus p, bool rational_found) {
  if (rational_found) return 1u;
  for (unsigned d : extension_degrees(s.degree)) {
    const GaloisField k(p, d);
    if (s.degree == 4 ? quadric_pair_singular_over(s, k) : plane_singular_over(s, k)) return d;
  }
  return std::nullopt;
}

}  // namespace

std::vector<ProjectivePoint> singular_points_mod_p(const GenusOneModel& m, PrimeModulus p) {
  return rational_singular_points(singular_system(m, p), p);
}

std::optional<unsigned> geometric_singularity_degree(const GenusOneModel& m, PrimeModulus p) {
  const auto s = singular_system(m, p);
  return geometric_search(s, p, !rational_singular_points(s, p).empty());
}

SmoothnessReport smoothness_report(const GenusOneModel& m, PrimeModulus p) {
  SmoothnessReport r;
  const auto s = singular_system(m, p);
  r.rational_singular_points = rational_singular_points(s, p);
  r.singular_over = geometric_search(s, p, !r.rational_singular_points.empty());
  r.delta = invariants_of_model(m).delta();
  const Valuation v = p_adic_valuation(r.delta, p.value());
  if (v && *v < 0)
    throw DomainError("discriminant " + r.delta.to_string() + " is not " + std::to_string(p.value()) +
                      "-integral");
  r.delta_vanishes = !v || *v > 0;
  r.consistent = r.singular_over.has_value() == r.delta_vanishes;
  return r;
}

bool smoothness_discriminant_consistency(const GenusOneModel& m, PrimeModulus p) {
  return smoothness_report(m, p).consistent;
}

}  // namespace genus1
