#include "spair/polyring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spair::ring {

Poly::Poly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly poly_add(const FieldSpec& fs, const Poly& a, const Poly& b) {
  std::vector<FieldElement> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = fs.add(a.coeff(k), b.coeff(k));
  return Poly(std::move(out));
}

Poly poly_sub(const FieldSpec& fs, const Poly& a, const Poly& b) {
  std::vector<FieldElement> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = fs.sub(a.coeff(k), b.coeff(k));
  return Poly(std::move(out));
}

Poly poly_mul(const FieldSpec& fs, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<FieldElement> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] = fs.add(out[i + j], fs.mul(a.coeffs()[i], b.coeffs()[j]));
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> poly_divrem(const FieldSpec& fs, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};

  const std::size_t db = static_cast<std::size_t>(b.degree());
  const FieldElement lead_inv = fs.inv(b.leading());
  std::vector<FieldElement> rem = a.coeffs();
  std::vector<FieldElement> quot(rem.size() - db);
  for (std::size_t top = rem.size(); top-- > db;) {
    const FieldElement factor = fs.mul(rem[top], lead_inv);
    if (factor.is_zero()) continue;
    const std::size_t shift = top - db;
    quot[shift] = factor;
    for (std::size_t j = 0; j <= db; ++j)
      rem[shift + j] = fs.sub(rem[shift + j], fs.mul(factor, b.coeffs()[j]));
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

RingElement::RingElement(std::size_t n) : coeffs_(n) {
  if (n == 0) throw std::invalid_argument("ring length must be positive");
}

RingElement::RingElement(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("ring length must be positive");
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](FieldElement c) { return c.is_zero(); });
}

namespace {

void require_same_length(const RingElement& a, const RingElement& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("ring length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

}  // namespace

RingElement to_ring(const FieldSpec& fs, const Poly& a, std::size_t n) {
  RingElement out(n);
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) out[k % n] = fs.add(out[k % n], a.coeffs()[k]);
  return out;
}

Poly to_poly(const RingElement& a) { return Poly(a.coeffs()); }

RingElement ring_add(const FieldSpec& fs, const RingElement& a, const RingElement& b) {
  require_same_length(a, b);
  RingElement out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = fs.add(a[k], b[k]);
  return out;
}

RingElement ring_sub(const FieldSpec& fs, const RingElement& a, const RingElement& b) {
  require_same_length(a, b);
  RingElement out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = fs.sub(a[k], b[k]);
  return out;
}

RingElement ring_scale(const FieldSpec& fs, FieldElement lambda, const RingElement& a) {
  RingElement out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = fs.mul(lambda, a[k]);
  return out;
}

RingElement ring_mul(const FieldSpec& fs, const RingElement& a, const RingElement& b) {
  require_same_length(a, b);
  const std::size_t n = a.size();
  RingElement out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const std::size_t k = (i + j) % n;
      out[k] = fs.add(out[k], fs.mul(a[i], b[j]));
    }
  }
  return out;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (k > 0) {
    if (k & 1U) r = r * base % p;
    base = base * base % p;
    k >>= 1U;
  }
  return r;
}

// C(a, b) mod p for single digits a, b < p.
std::uint64_t small_binomial(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint64_t k = 0; k < b; ++k) {
    num = num * (a - k) % p;
    den = den * (k + 1) % p;
  }
  return num * pow_mod(den, p - 2, p) % p;
}

}  // namespace

std::uint32_t binomial_mod_p(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  if (b > a) return 0;
  std::uint64_t result = 1;
  while (b > 0) {
    const std::uint64_t ad = a % p;
    const std::uint64_t bd = b % p;
    if (bd > ad) return 0;
    result = result * small_binomial(ad, bd, p) % p;
    a /= p;
    b /= p;
  }
  return static_cast<std::uint32_t>(result);
}

RingElement x_minus_one_power(const FieldSpec& fs, std::size_t i, std::size_t n) {
  std::size_t pow = 1;
  while (pow < n) pow *= fs.p();
  if (n == 0 || pow != n)
    throw std::invalid_argument("ring length " + std::to_string(n) + " is not a power of the characteristic " + std::to_string(fs.p()));
  if (i > n) throw std::out_of_range("exponent " + std::to_string(i) + " exceeds ring length " + std::to_string(n));

  // (x - 1)^i = sum_j C(i, j) (-1)^{i-j} x^j
  RingElement out(n);
  for (std::size_t j = 0; j <= i; ++j) {
    const std::uint32_t c = binomial_mod_p(i, j, fs.p());
    if (c == 0) continue;
    FieldElement term = fs.element(c);
    if ((i - j) % 2 == 1) term = fs.neg(term);
    out[j % n] = fs.add(out[j % n], term);
  }
  return out;
}

RingElement cyclic_shift(const RingElement& v, std::int64_t s) {
  const auto n = static_cast<std::int64_t>(v.size());
  const std::int64_t shift = ((s % n) + n) % n;
  RingElement out(v.size());
  for (std::int64_t j = 0; j < n; ++j) out[static_cast<std::size_t>((j + shift) % n)] = v[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace spair::ring
