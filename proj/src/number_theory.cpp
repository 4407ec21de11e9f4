#include "genus1/number_theory.hpp"

#include <vector>

#include "genus1/errors.hpp"

namespace genus1 {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational bernoulli(unsigned n) {
  std::vector<Rational> b;
  b.reserve(n + 1);
  b.emplace_back(1);
  for (unsigned m = 1; m <= n; ++m) {
    // (m+1) B_m = -sum_{k<m} C(m+1, k) B_k
    Rational acc;
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[k];
    b.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
  return b[n];
}

long p_adic_valuation(const Integer& n, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (n == 0) throw DomainError("valuation of zero integer is infinite");
  Integer prime(static_cast<unsigned long>(p));
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

Valuation p_adic_valuation(const Rational& r, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (r.is_zero()) return std::nullopt;
  return p_adic_valuation(r.num(), p) - p_adic_valuation(r.den(), p);
}

Integer divisor_sigma(unsigned k, std::uint64_t n) {
  if (n == 0) throw DomainError("divisor sum of zero");
  Integer result = 1;
  auto factor_term = [k](std::uint64_t prime, unsigned e) {
    // 1 + p^k + p^{2k} + ... + p^{ek}
    Integer pk, term = 1, sum = 1;
    mpz_ui_pow_ui(pk.get_mpz_t(), prime, k);
    for (unsigned i = 0; i < e; ++i) {
      term *= pk;
      sum += term;
    }
    return sum;
  };
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) result *= factor_term(d, e);
  }
  if (n > 1) result *= factor_term(n, 1);
  return result;
}

}  // namespace genus1
