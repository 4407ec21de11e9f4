// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "genus1/invariants.hpp"
#include "genus1/jacobian.hpp"
#include "genus1/qseries.hpp"
#include "genus1/reduction.hpp"
#include "oracles.hpp"
#include "random_models.hpp"

using namespace genus1;

namespace {

Rational R(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }
Rational pow2(long e) { return R(2).pow(e); }

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << what;
      ok = false;
    }
  }
};

TernaryCubicModel cubic(const std::string& text) {
  return cubic_from_polynomial(parse_polynomial(text, ternary_variables()));
}

QuadricPairModel pair(const char* q1, const char* q2) {
  const auto& q = quaternary_variables();
  return quadric_pair_from_polynomials(parse_polynomial(q1, q), parse_polynomial(q2, q));
}

const BinaryQuarticModel kDegree2{R(0), R(0), R(1), R(1), R(1), R(1), R(0), R(0)};
QuadricPairModel pair1() { return pair("x0*x1 + x0*x2 + x2*x3", "x0*x3 + x1*x2 + x1*x3"); }
QuadricPairModel pair2() { return pair("x0^2 + x1^2 + x2^2 + 3*x3^2", "x0^2 + 2*x1^2 + 3*x2^2 + 5*x3^2"); }

void anchor(Outcome& o, const GenusOneModel& m, const ShortWeierstrass& jac, const Rational& delta_w,
            const Rational& delta_phi, const Rational& alpha_n, const std::string& name) {
  const auto w = jacobian_of_model(m);
  o.expect(w == jac, name + ": Jacobian " + w.to_string());
  o.expect(short_weierstrass_invariants(w).delta() == delta_w, name + ": delta_W");
  o.expect(invariants_of_model(m).delta() == delta_phi, name + ": delta_phi");
  const auto rel = check_invariant_relations(m);
  o.expect(rel.all_ok() && rel.alpha == alpha_n, name + ": relation check");
}

Outcome criterion1() {
  Outcome o;
  anchor(o, kDegree2, {R(1, 3), R(37, 1728)}, R(101), R(101), R(1), "degree-2 anchor");
  o.expect(invariants_of_model(kDegree2) == InvariantTriple(R(64), R(296)), "direct invariants");
  return o;
}

Outcome criterion2() {
  Outcome o;
  anchor(o, cubic("y^2*z + y*z^2 - x^3"), {R(0), R(-1)}, R(-110592), R(-27), R(1, 2), "y^2z+yz^2-x^3");
  anchor(o, cubic("y^2*z - x^3 - x*z^2"), {R(-4), R(0)}, -pow2(18), R(-64), R(1, 2), "y^2z-x^3-xz^2");
  return o;
}

Outcome criterion3() {
  Outcome o;
  anchor(o, pair1(), {R(1, 3072), R(-161, 884736)}, R(-15, 4096), R(-15), R(2), "Pair 1");
  anchor(o, pair2(), {R(1), R(0)}, pow2(12), pow2(24), R(2), "Pair 2");
  return o;
}

bool has_point(const std::vector<ProjectivePoint>& pts, const std::string& text) {
  for (const auto& p : pts)
    if (p.to_string() == text) return true;
  return false;
}

Outcome criterion4() {
  Outcome o;
  const PrimeModulus p2(2), p3(3);
  o.expect(singular_points_mod_p(kDegree2, p2).empty(), "degree-2 anchor singular mod 2");
  o.expect(singular_points_mod_p(kDegree2, p3).empty(), "degree-2 anchor singular mod 3");
  o.expect(singular_points_mod_p(cubic("y^2*z + y*z^2 - x^3"), p2).empty(), "cubic singular mod 2");
  o.expect(singular_points_mod_p(pair1(), p2).empty(), "Pair 1 singular mod 2");
  o.expect(has_point(singular_points_mod_p(pair1(), p3), "(1:1:1:1)"), "Pair 1 mod 3 lacks (1:1:1:1)");
  return o;
}

Outcome criterion5() {
  Outcome o;
  testing::Rng rng(5005);
  int checked = 0, skipped = 0;
  for (int degree = 2; degree <= 4; ++degree)
    for (int n = 0; n < 100; ++n) {
      const GenusOneModel m = testing::random_model(rng, degree, 5);
      for (std::uint64_t p : {2, 3, 5, 7}) {
        try {
          const auto r = smoothness_report(m, PrimeModulus(p));
          ++checked;
          if (!r.consistent) {
            std::ostringstream s;
            s << "degree " << degree << " model " << n << " p=" << p << ": delta=" << r.delta.to_string()
              << " singular_over=" << (r.singular_over ? std::to_string(*r.singular_over) : "none");
            o.expect(false, s.str());
          }
        } catch (const ReductionError&) {
          ++skipped;
        }
      }
    }
  o.note << (o.ok ? "" : "; ") << checked << " checked, " << skipped << " skipped";
  return o;
}

Outcome criterion6() {
  Outcome o;
  testing::Rng rng(6006);
  for (int degree = 2; degree <= 4; ++degree)
    for (int n = 0; n < 200; ++n) {
      const auto r = check_invariant_relations(testing::random_model(rng, degree, 9));
      o.expect(r.all_ok(), "degree " + std::to_string(degree) + " model " + std::to_string(n));
    }
  return o;
}

Outcome criterion7() {
  Outcome o;
  testing::Rng rng(7007);
  for (int n = 0; n < 200; ++n) {
    const auto w = testing::random_weierstrass(rng, 50);
    o.expect(invariants_of_model(homogenize_weierstrass(w)) == weierstrass_invariants(w).triple,
             "model " + std::to_string(n));
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto& vars = cubic_coefficient_variables();
  auto mono = [&](std::initializer_list<std::pair<const char*, unsigned>> powers) {
    Exponents e(10, 0);
    for (const auto& [name, k] : powers) e[variable_index(vars, name)] = k;
    return e;
  };
  const std::vector<std::pair<Exponents, long>> c4{
      {mono({{"a", 1}, {"b", 1}, {"c", 1}, {"m", 1}}), -216},
      {mono({{"a", 1}, {"b", 1}, {"c1", 1}, {"c2", 1}}), 144},
      {mono({{"a", 1}, {"c", 1}, {"b1", 1}, {"b3", 1}}), 144},
      {mono({{"a3", 1}, {"b3", 1}, {"m", 2}}), -8},
      {mono({{"b1", 2}, {"c1", 2}}), 16},
      {mono({{"b1", 1}, {"c1", 1}, {"m", 2}}), -8},
      {mono({{"m", 4}}), 1}};
  const std::vector<std::pair<Exponents, long>> c6{
      {mono({{"a", 2}, {"b", 2}, {"c", 2}}), 5832},
      {mono({{"a", 2}, {"b", 1}, {"c", 1}, {"b3", 1}, {"c2", 1}}), -3888},
      {mono({{"a", 2}, {"b", 1}, {"c2", 3}}), 864},
      {mono({{"b1", 3}, {"c1", 3}}), 64},
      {mono({{"b1", 2}, {"c1", 2}, {"m", 2}}), -48},
      {mono({{"b1", 1}, {"c1", 1}, {"m", 4}}), 12},
      {mono({{"m", 6}}), -1}};
  for (const auto& [e, k] : c4)
    o.expect(cubic_c4_polynomial().coefficient(e) == R(k), "c4 " + monomial_to_string(e, vars));
  for (const auto& [e, k] : c6)
    o.expect(cubic_c6_polynomial().coefficient(e) == R(k), "c6 " + monomial_to_string(e, vars));
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto e4 = eisenstein_series(4, 10), e6 = eisenstein_series(6, 10);
  for (std::size_t n = 1; n < 10; ++n) {
    o.expect(e4[n] == R(240) * Rational(testing::naive_sigma(3, n)), "E4 q^" + std::to_string(n));
    o.expect(e6[n] == R(-504) * Rational(testing::naive_sigma(5, n)), "E6 q^" + std::to_string(n));
  }
  const auto big4 = eisenstein_series(4, 50), big6 = eisenstein_series(6, 50);
  const auto diff = big4 * big4 * big4 - big6 * big6;
  for (std::size_t n = 0; n < 50; ++n)
    o.expect((diff[n] / R(1728)).is_integer(), "1728 does not divide q^" + std::to_string(n));
  o.expect(discriminant_series(50) == eta_product(50), "discriminant differs from the eta product");
  for (std::uint64_t p : {5, 7, 11, 13}) o.expect(hasse_congruence_check(p, 50), "Hasse p=" + std::to_string(p));
  return o;
}

Outcome criterion10() {
  Outcome o;
  testing::Rng rng(1010);
  for (int n = 0; n < 100; ++n) {
    const auto q = testing::random_quartic(rng, 20);
    const auto m = testing::random_invertible(rng, 2, 5);
    const Rational d = determinant(m);
    const auto before = quartic_ij(q);
    const auto after = quartic_ij(BinaryQuartic::from_polynomial(substitute_linear(q.to_polynomial(), m)));
    o.expect(after.first == d.pow(4) * before.first && after.second == d.pow(6) * before.second,
             "i, j covariance case " + std::to_string(n));
  }
  for (int n = 0; n < 100; ++n) {
    const auto t = testing::random_cubic(rng, 6);
    const auto g = testing::random_invertible(rng, 3, 3);
    const Rational d = determinant(g);
    const auto before = aronhold_ST(t);
    const auto after = aronhold_ST(cubic_from_polynomial(substitute_linear(cubic_polynomial(t), g)));
    o.expect(after.first == d.pow(4) * before.first && after.second == d.pow(6) * before.second,
             "S, T covariance case " + std::to_string(n));
  }
  for (int n = 0; n < 100; ++n) {
    const auto w = testing::random_weierstrass(rng, 20, true);
    const Rational u = rng.nonzero_rational(9);
    const auto before = weierstrass_invariants(w).triple;
    const auto after =
        weierstrass_invariants(weierstrass_transform(w, u, rng.rational(9), rng.rational(9), rng.rational(9))).triple;
    o.expect(after.c4() == before.c4() / u.pow(4) && after.c6() == before.c6() / u.pow(6) &&
                 after.delta() == before.delta() / u.pow(12),
             "transform weight law case " + std::to_string(n));
  }
  int found = 0;
  while (found < 50) {
    const auto m = testing::random_binary_quartic(rng, 6);
    const auto w = jacobian_of_model(m);
    if (short_weierstrass_invariants(w).delta().is_zero()) continue;
    bool hit = false;
    for (long x0 = -10; x0 <= 10 && !hit; ++x0)
      for (long z0 = 1; z0 <= 10 && !hit; ++z0) {
        const Rational X(x0), Z(z0);
        const Rational p = m.alpha0 * X * X + m.alpha1 * X * Z + m.alpha2 * Z * Z;
        const Rational q =
            m.a * X.pow(4) + m.b * X.pow(3) * Z + m.c * X * X * Z * Z + m.d * X * Z.pow(3) + m.e * Z.pow(4);
        const Rational disc = p * p + R(4) * q;
        if (disc.sign() <= 0) continue;
        const Integer root = sqrt(disc.num());
        if (root * root != disc.num()) continue;
        const auto img = point_map_f2(m, X, (Rational(root) - p) / R(2), Z);
        o.expect(img.y * img.y == R(4) * img.x.pow(3) - w.g2 * img.x - w.g3, "f2 image off the Jacobian");
        hit = true;
      }
    found += hit;
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"degree-2 anchor", criterion1},
      {"degree-3 anchors", criterion2},
      {"degree-4 anchors", criterion3},
      {"mod-p smoothness verdicts", criterion4},
      {"discriminant and smoothness agree", criterion5},
      {"relations on random models", criterion6},
      {"Weierstrass restriction", criterion7},
      {"cubic invariant display monomials", criterion8},
      {"q-series suite", criterion9},
      {"covariance properties", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (%lld ms)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                static_cast<long long>(ms), o.note.str().empty() ? "" : ": ", o.note.str().c_str());
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
