#include "genus1/galois_field.hpp"

#include <algorithm>

namespace genus1 {

namespace {

std::vector<std::uint32_t> digits(std::uint32_t e, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> d(k);
  for (std::uint32_t i = 0; i < k; ++i, e /= p) d[i] = e % p;
  return d;
}

std::uint32_t encode(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t e = 0;
  for (std::size_t i = d.size(); i-- > 0;) e = e * p + d[i];
  return e;
}

}  // namespace

GaloisField::GaloisField(PrimeModulus modulus, unsigned k) : k_(k) {
  if (k == 0) throw DomainError("field degree must be positive");
  p_ = static_cast<std::uint32_t>(modulus.value());
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p_;
    if (q > (1u << 22)) throw DomainError("GF(p^k) too large for table arithmetic");
  }
  q_ = static_cast<std::uint32_t>(q);

  // Search monic polynomials of degree k for one in which x has order q - 1.
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  for (std::uint32_t code = 0; code < q_; ++code) {
    const auto f = digits(code, p_, k_);
    std::vector<std::uint32_t> cur(k_, 0);
    cur[0] = 1;
    std::vector<bool> seen(q_, false);
    std::uint32_t n = 0;
    bool ok = true;
    for (; n < q_ - 1; ++n) {
      const std::uint32_t e = encode(cur, p_);
      if (e == 0 || seen[e]) {
        ok = false;
        break;
      }
      seen[e] = true;
      exp_[n] = e;
      // cur *= x modulo x^k + f
      const std::uint32_t top = cur[k_ - 1];
      for (std::uint32_t i = k_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (std::uint32_t i = 0; i < k_; ++i)
        cur[i] = static_cast<std::uint32_t>((cur[i] + std::uint64_t{p_ - f[i]} * top) % p_);
    }
    if (ok && encode(cur, p_) == 1) {
      poly_ = f;
      break;
    }
  }
  if (poly_.empty()) throw DomainError("no primitive polynomial found");
  for (std::uint32_t i = 0; i + 1 < q_; ++i) log_[exp_[i]] = i;

  neg_.resize(q_);
  for (std::uint32_t e = 0; e < q_; ++e) {
    auto d = digits(e, p_, k_);
    for (auto& x : d) x = (p_ - x) % p_;
    neg_[e] = encode(d, p_);
  }
  one_plus_.resize(q_ - 1);
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    auto d = digits(exp_[i], p_, k_);
    d[0] = (d[0] + 1) % p_;
    one_plus_[i] = encode(d, p_);
  }
}

GaloisField::Element GaloisField::add(Element a, Element b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  // a + b = a (1 + b/a)
  const std::uint32_t n = q_ - 1;
  const std::uint32_t shift = (log_[b] + n - log_[a]) % n;
  return mul(a, one_plus_[shift]);
}

GaloisField::Element GaloisField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

GaloisField::Element GaloisField::inv(Element a) const {
  if (a == 0) throw DomainError("inverse of zero in GF(q)");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Element GaloisField::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

void GaloisField::trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

GaloisField::Poly GaloisField::rem(Poly a, const Poly& b) const {
  trim(a);
  const Element lead_inv = inv(b.back());
  while (a.size() >= b.size()) {
    const Element c = mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub(a[shift + i], mul(c, b[i]));
    trim(a);
  }
  return a;
}

GaloisField::Poly GaloisField::gcd(Poly a, Poly b) const {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Element li = inv(a.back());
    for (auto& c : a) c = mul(c, li);
  }
  return a;
}

GaloisField::Element GaloisField::evaluate(const Poly& f, Element x) const {
  Element acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, x), f[i]);
  return acc;
}

std::vector<std::vector<GaloisField::Element>> GaloisField::kernel(std::vector<Element> m, std::size_t rows,
                                                                   std::size_t cols) const {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m[r * cols + j], m[piv * cols + j]);
    const Element li = inv(m[r * cols + c]);
    for (std::size_t j = 0; j < cols; ++j) m[r * cols + j] = mul(m[r * cols + j], li);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i * cols + c] == 0) continue;
      const Element f = m[i * cols + c];
      for (std::size_t j = 0; j < cols; ++j) m[i * cols + j] = sub(m[i * cols + j], mul(f, m[r * cols + j]));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<std::vector<Element>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<Element> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = neg(m[i * cols + free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace genus1
