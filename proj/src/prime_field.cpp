#include "genus1/prime_field.hpp"

#include "genus1/errors.hpp"
#include "genus1/number_theory.hpp"

namespace genus1 {

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 32)) throw DomainError("prime modulus must be below 2^32");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

Fp::Fp(std::int64_t value, PrimeModulus p) : p_(p) {
  const auto m = static_cast<std::int64_t>(p.value());
  std::int64_t r = value % m;
  if (r < 0) r += m;
  residue_ = static_cast<std::uint64_t>(r);
}

Fp::Fp(const Integer& value, PrimeModulus p) : p_(p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p.value());
  residue_ = r.get_ui();
}

void Fp::check_same_field(const Fp& o) const {
  if (!(p_ == o.p_))
    throw DomainError("field mismatch: F_" + std::to_string(p_.value()) + " vs F_" +
                      std::to_string(o.p_.value()));
}

Fp& Fp::operator+=(const Fp& o) {
  check_same_field(o);
  residue_ = (residue_ + o.residue_) % p_.value();
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  check_same_field(o);
  residue_ = (residue_ + p_.value() - o.residue_) % p_.value();
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  check_same_field(o);
  residue_ = (residue_ * o.residue_) % p_.value();
  return *this;
}

Fp& Fp::operator*=(std::int64_t k) { return *this *= Fp(k, p_); }

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this, acc(1, p_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in F_" + std::to_string(p_.value()));
  return pow(p_.value() - 2);
}

Fp& Fp::operator/=(const Fp& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

Fp reduce(const Rational& r, PrimeModulus p, const std::string& what) {
  const Integer den = r.den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), p.value()))
    throw ReductionError(what, r.to_string(), p.value());
  return Fp(r.num(), p) / Fp(den, p);
}

}  // namespace genus1
