#include "genus1/qseries.hpp"

#include <algorithm>

#include "genus1/number_theory.hpp"

namespace genus1 {

QSeries::QSeries(std::size_t precision) : c_(precision) {
  if (precision == 0) throw DomainError("series precision must be at least 1");
}

QSeries::QSeries(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw DomainError("series precision must be at least 1");
}

QSeries QSeries::truncated(std::size_t precision) const {
  if (precision == 0 || precision > c_.size()) throw DomainError("cannot truncate to that precision");
  return QSeries(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(precision)));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.precision(), b.precision()));
  for (std::size_t n = 0; n < r.precision(); ++n) r.c_[n] = a.c_[n] + b.c_[n];
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.precision(), b.precision()));
  for (std::size_t n = 0; n < r.precision(); ++n) r.c_[n] = a.c_[n] - b.c_[n];
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.precision(), b.precision()));
  const std::size_t n = r.precision();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

QSeries operator*(const QSeries& a, const Rational& k) {
  QSeries r = a;
  for (auto& c : r.c_) c *= k;
  return r;
}

namespace {

template <class C, class Render>
std::string render(const std::vector<C>& c, Render coefficient) {
  std::string out;
  for (std::size_t n = 0; n < c.size(); ++n) {
    auto [negative, text] = coefficient(c[n]);
    if (text.empty()) continue;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    const std::string mono = n == 0 ? "" : (n == 1 ? "q" : "q^" + std::to_string(n));
    if (mono.empty())
      out += text;
    else
      out += (text == "1" ? "" : text + "*") + mono;
  }
  const std::string tail = "O(q^" + std::to_string(c.size()) + ")";
  return out.empty() ? tail : out + " + " + tail;
}

}  // namespace

std::string QSeries::to_string() const {
  return render(c_, [](const Rational& r) {
    return std::pair<bool, std::string>{r.sign() < 0, r.is_zero() ? "" : r.abs().to_string()};
  });
}

QSeries eisenstein_series(unsigned weight, std::size_t precision) {
  if (weight < 4 || weight % 2 != 0)
    throw DomainError("Eisenstein series need an even weight >= 4, got " + std::to_string(weight));
  const unsigned k = weight / 2;
  const Rational factor = -Rational(4 * static_cast<long>(k)) / bernoulli(weight);
  QSeries e(precision);
  e[0] = Rational(1);
  for (std::size_t n = 1; n < precision; ++n) e[n] = factor * Rational(divisor_sigma(weight - 1, n));
  return e;
}

QSeries discriminant_series(std::size_t precision) {
  const QSeries e4 = eisenstein_series(4, precision);
  const QSeries e6 = eisenstein_series(6, precision);
  QSeries d = (e4 * e4 * e4 - e6 * e6) * Rational(1, 1728);
  for (std::size_t n = 0; n < precision; ++n)
    if (!d[n].is_integer())
      throw Error("internal: coefficient of q^" + std::to_string(n) + " of the discriminant series is " +
                  d[n].to_string());
  return d;
}

QSeries eta_product(std::size_t precision) {
  // (1 - q^n)^24 multiplied in one factor at a time, on integer coefficients
  std::vector<Integer> c(precision, 0);
  if (precision > 1) c[1] = 1;
  for (std::size_t n = 1; n < precision; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (std::size_t i = precision; i-- > n;) c[i] -= c[i - n];
  std::vector<Rational> r;
  for (auto& v : c) r.emplace_back(v);
  return QSeries(std::move(r));
}

std::vector<Fp> reduce_series(const QSeries& s, PrimeModulus p) {
  std::vector<Fp> out;
  for (std::size_t n = 0; n < s.precision(); ++n) out.push_back(reduce(s[n], p, "q^" + std::to_string(n)));
  return out;
}

std::string series_to_string(const std::vector<Fp>& s) {
  return render(s, [](const Fp& f) { return std::pair<bool, std::string>{false, f.is_zero() ? "" : f.to_string()}; });
}

bool hasse_congruence_check(std::uint64_t p, std::size_t precision) {
  if (p <= 3) throw DomainError("the Hasse congruence is stated for primes p > 3");
  const PrimeModulus mod(p);
  const auto e = reduce_series(eisenstein_series(static_cast<unsigned>(p - 1), precision), mod);
  for (std::size_t n = 0; n < e.size(); ++n)
    if (e[n].residue() != (n == 0 ? 1u : 0u)) return false;
  return true;
}

}  // namespace genus1
