#pragma once

// Repeated-root cyclic codes C_i = <(x - 1)^i> of length p^e over F_{p^m},
// with closed-form Hamming and symbol-pair minimum distances.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spair/gf.hpp"
#include "spair/polyring.hpp"

namespace spair::codes {

using gf::FieldSpec;
using ring::Poly;
using ring::RingElement;

/// (p, m, e, i) naming C_i in F_{p^m}[x]/(x^{p^e} - 1).
struct CodeSpec {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::uint32_t e = 1;
  std::uint64_t i = 0;

  std::uint64_t n() const;
  std::uint64_t q() const;
  std::uint64_t dimension() const { return n() - i; }

  /// Throws std::invalid_argument for non-prime p, m or e of zero, p^e or
  /// p^m overflowing, or i > p^e.
  void validate() const;

  bool operator==(const CodeSpec&) const = default;
};

/// A closed-form value together with the case of the piecewise formula that
/// produced it.
struct BranchValue {
  std::uint64_t value = 0;
  std::string branch;
};

/// Minimum Hamming distance of C_i; 0 for the zero code.
BranchValue classify_hamming_distance(const CodeSpec& spec);
std::uint64_t closed_form_hamming_distance(const CodeSpec& spec);

/// Minimum pair distance of C_i; 0 for the zero code by convention.
/// Where several cases cover the same i they must agree, otherwise
/// std::logic_error is thrown.
BranchValue classify_pair_distance(const CodeSpec& spec);
std::uint64_t closed_form_pair_distance(const CodeSpec& spec);

/// Meets the pair Singleton bound M <= q^{n - d_p + 2} with equality, which
/// for dimension n - i reduces to d_p == i + 2. Throws std::invalid_argument
/// for the zero code (i == p^e).
bool is_mds_pair(const CodeSpec& spec);

struct DistanceRecord {
  std::uint64_t i = 0;
  std::uint64_t dimension = 0;
  std::uint64_t d_h = 0;
  std::uint64_t d_p = 0;
  /// Unset for the zero code, which is outside the bound's hypothesis.
  std::optional<bool> mds_pair;
  std::string branch;
  std::optional<bool> verified;
};

/// One closed-form record per i = 0..p^e.
std::vector<DistanceRecord> distance_table(std::uint32_t p, std::uint32_t e, std::uint32_t m);

/// C_i over a concrete field: generator, encoder and membership.
class CyclicCode {
 public:
  explicit CyclicCode(const CodeSpec& spec);
  /// Uses `field` instead of the default modulus; its p and m must match.
  CyclicCode(const CodeSpec& spec, FieldSpec field);

  const CodeSpec& spec() const { return spec_; }
  const FieldSpec& field() const { return field_; }
  std::size_t length() const { return static_cast<std::size_t>(spec_.n()); }
  std::size_t dimension() const { return static_cast<std::size_t>(spec_.dimension()); }

  /// (x - 1)^i as a length-n ring element.
  const RingElement& generator() const { return generator_; }

  /// message * (x - 1)^i. Throws std::invalid_argument when
  /// deg(message) >= dimension.
  RingElement encode(const Poly& message) const;

  /// True iff (x - 1)^i divides the degree < n lift of v.
  bool contains(const RingElement& v) const;

 private:
  CodeSpec spec_;
  FieldSpec field_;
  RingElement generator_;
};

}  // namespace spair::codes
