#pragma once

#include <cstdint>
#include <optional>

#include "genus1/rational.hpp"

namespace genus1 {

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// B_n with the convention B_1 = -1/2, from sum_{k=0}^{n} C(n+1, k) B_k = 0.
Rational bernoulli(unsigned n);

/// p-adic valuation of a rational. std::nullopt stands for +infinity, the
/// valuation of zero.
using Valuation = std::optional<long>;

/// v_p(numerator) - v_p(denominator). Throws DomainError if p is not prime.
Valuation p_adic_valuation(const Rational& r, std::uint64_t p);
long p_adic_valuation(const Integer& n, std::uint64_t p);

/// sigma_k(n) = sum of d^k over the divisors d of n >= 1, computed from the
/// factorization of n.
Integer divisor_sigma(unsigned k, std::uint64_t n);

Integer binomial(unsigned n, unsigned k);

}  // namespace genus1
