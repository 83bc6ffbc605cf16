#pragma once

// Exact arithmetic in F_p and F_{p^m}.
//
// An element of F_{p^m} is stored as a single integer in [0, p^m) whose
// base-p digits are its coefficients in the polynomial basis
// {1, x, ..., x^{m-1}}, constant digit least significant. Encoding 0 is the
// additive identity and encoding 1 the multiplicative identity.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace spair::gf {

struct FieldElement {
  std::uint32_t code = 0;

  constexpr bool is_zero() const { return code == 0; }
  constexpr auto operator<=>(const FieldElement&) const = default;
};

bool is_prime(std::uint64_t n);

/// Monic irreducibility over F_p by trial division against every monic
/// polynomial of degree 1..deg/2. `coeffs` is c_0..c_deg with c_deg == 1.
/// Throws std::invalid_argument for degree 0, non-monic input, or digits >= p.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> coeffs);

class FieldSpec {
 public:
  /// Validates that p is prime and `modulus` (c_0..c_m, monic) is irreducible.
  FieldSpec(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return static_cast<std::uint32_t>(modulus_.size() - 1); }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool contains(FieldElement a) const { return a.code < q_; }

  /// Throws std::out_of_range unless code < q.
  FieldElement element(std::uint64_t code) const;
  static constexpr FieldElement zero() { return FieldElement{0}; }
  static constexpr FieldElement one() { return FieldElement{1}; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t k) const;
  /// a^{q-2}; throws std::domain_error for a == 0.
  FieldElement inv(FieldElement a) const;

  /// Encodings 0, 1, ..., q-1 in ascending order.
  std::vector<FieldElement> enumerate_elements() const;

  /// e.g. "x^2 + x + 1"
  std::string modulus_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables;

  std::uint32_t mul_direct(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t add_direct(std::uint32_t a, std::uint32_t b, bool subtract) const;

  std::uint32_t p_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::shared_ptr<const Tables> tables_;
};

/// Field whose modulus is the first monic irreducible degree-m polynomial
/// when candidates are ordered by the integer with base-p digits
/// (c_0, ..., c_{m-1}). For m == 1 this is x, i.e. the prime field.
FieldSpec build_field(std::uint32_t p, std::uint32_t m);

}  // namespace spair::gf
