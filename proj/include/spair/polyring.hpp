#pragma once

// Polynomials over F_{p^m} and the quotient ring F_{p^m}[x]/(x^n - 1).
// Coefficient order is constant term first everywhere.

#include <cstdint>
#include <utility>
#include <vector>

#include "spair/gf.hpp"

namespace spair::ring {

using gf::FieldElement;
using gf::FieldSpec;

/// Normalized polynomial: no trailing zero coefficients; zero is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FieldElement> coeffs);

  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 stands for the degree of the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  FieldElement coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : FieldElement{}; }
  FieldElement leading() const { return coeffs_.empty() ? FieldElement{} : coeffs_.back(); }

  bool operator==(const Poly&) const = default;

 private:
  std::vector<FieldElement> coeffs_;
};

Poly poly_add(const FieldSpec& fs, const Poly& a, const Poly& b);
Poly poly_sub(const FieldSpec& fs, const Poly& a, const Poly& b);
Poly poly_mul(const FieldSpec& fs, const Poly& a, const Poly& b);
/// a = quotient * b + remainder with deg remainder < deg b.
/// Throws std::domain_error when b is zero.
std::pair<Poly, Poly> poly_divrem(const FieldSpec& fs, const Poly& a, const Poly& b);

/// Element of F_q[x]/(x^n - 1) kept as exactly n coefficients.
class RingElement {
 public:
  /// Zero element of length n (n >= 1).
  explicit RingElement(std::size_t n);
  explicit RingElement(std::vector<FieldElement> coeffs);

  std::size_t size() const { return coeffs_.size(); }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  FieldElement operator[](std::size_t k) const { return coeffs_[k]; }
  FieldElement& operator[](std::size_t k) { return coeffs_[k]; }
  bool is_zero() const;

  /// Lexicographic on coefficients, constant first.
  auto operator<=>(const RingElement&) const = default;

 private:
  std::vector<FieldElement> coeffs_;
};

/// Reduces exponents mod n.
RingElement to_ring(const FieldSpec& fs, const Poly& a, std::size_t n);
/// Lift of a ring element to a polynomial of degree < n.
Poly to_poly(const RingElement& a);

RingElement ring_add(const FieldSpec& fs, const RingElement& a, const RingElement& b);
RingElement ring_sub(const FieldSpec& fs, const RingElement& a, const RingElement& b);
RingElement ring_scale(const FieldSpec& fs, FieldElement lambda, const RingElement& a);
/// Cyclic convolution. Throws std::invalid_argument on length mismatch.
RingElement ring_mul(const FieldSpec& fs, const RingElement& a, const RingElement& b);

/// (x - 1)^i in F_q[x]/(x^n - 1) with n a power of the characteristic,
/// expanded binomially with coefficients reduced mod p by Lucas' theorem.
/// i == n gives zero. Throws std::invalid_argument if n is not a power of p
/// and std::out_of_range unless 0 <= i <= n.
RingElement x_minus_one_power(const FieldSpec& fs, std::size_t i, std::size_t n);

/// Binomial coefficient C(a, b) mod prime p via Lucas' theorem.
std::uint32_t binomial_mod_p(std::uint64_t a, std::uint64_t b, std::uint32_t p);

/// Coefficient at j moves to (j + s) mod n; s may be negative.
RingElement cyclic_shift(const RingElement& v, std::int64_t s);

}  // namespace spair::ring
