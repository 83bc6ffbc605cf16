#pragma once

// Brute-force ground truth for minimum Hamming and pair weights of C_i, and
// verification of the closed forms and of d_p = d_H + L against it.
//
// Codewords are produced by encoding messages in ascending order of their
// integer encoding (base-q digits, constant coefficient least significant).
// With scalar reduction only messages whose leading coefficient is 1 are
// visited; weights are invariant under nonzero scalars so minima agree.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spair/codes.hpp"

namespace spair::oracle {

using codes::CodeSpec;
using codes::CyclicCode;
using ring::RingElement;

struct EnumBudget {
  std::uint64_t max_codewords = 10'000'000;
  bool reduce_by_scalars = true;
};

struct WeightWitness {
  std::uint64_t weight = 0;
  RingElement witness{1};
};

/// Thrown when the search space is larger than the budget. Carries the best
/// values seen over the enumerated prefix; these are upper bounds on the
/// true minima, not certified minima.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(std::uint64_t required, std::uint64_t budget, std::optional<WeightWitness> best_pair,
                  std::optional<WeightWitness> best_hamming);

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }
  const std::optional<WeightWitness>& best_pair_so_far() const { return best_pair_; }
  const std::optional<WeightWitness>& best_hamming_so_far() const { return best_hamming_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
  std::optional<WeightWitness> best_pair_;
  std::optional<WeightWitness> best_hamming_;
};

enum class EnumStatus { completed, budget_exhausted };

/// Number of nonzero codewords the enumeration visits (before the budget).
std::uint64_t codeword_count(const CyclicCode& code, bool reduce_by_scalars);

/// Message number `index` (0-based) of the nonzero enumeration order.
ring::Poly message_at(const CyclicCode& code, std::uint64_t index, bool reduce_by_scalars);

/// Streams nonzero codewords in enumeration order to `visit`. Stops and
/// reports budget_exhausted after max_codewords if more remain.
EnumStatus enumerate_codewords(const CyclicCode& code, const EnumBudget& budget,
                               const std::function<void(const RingElement&)>& visit);

struct MinimumWeights {
  WeightWitness pair;
  WeightWitness hamming;
};

/// Exact minimum pair and Hamming weights over nonzero codewords, with the
/// lexicographically smallest achieving codeword as witness. The zero code
/// yields 0 with a zero witness. `jobs` splits the enumeration by message
/// index; the result does not depend on it. Throws BudgetExhausted.
MinimumWeights minimum_weights(const CyclicCode& code, const EnumBudget& budget, unsigned jobs = 1);

WeightWitness min_pair_weight_bruteforce(const CyclicCode& code, const EnumBudget& budget, unsigned jobs = 1);
WeightWitness min_hamming_weight_bruteforce(const CyclicCode& code, const EnumBudget& budget, unsigned jobs = 1);

enum class EntryStatus { match, mismatch, skipped };

std::string to_string(EntryStatus s);

struct VerificationEntry {
  std::uint64_t i = 0;
  std::uint64_t formula_dh = 0;
  std::uint64_t formula_dp = 0;
  std::optional<std::uint64_t> oracle_dh;
  std::optional<std::uint64_t> oracle_dp;
  std::optional<RingElement> witness;
  EntryStatus status = EntryStatus::skipped;
};

struct VerificationReport {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t m = 0;
  std::vector<VerificationEntry> entries;

  std::size_t count(EntryStatus s) const;
  /// mismatch if any entry mismatches, else skipped if any was skipped.
  EntryStatus verdict() const;
};

/// Compares both closed forms to both brute-force minima for every
/// i = 0..p^e. An optional field overrides the default modulus.
VerificationReport verify_family(std::uint32_t p, std::uint32_t e, std::uint32_t m, const EnumBudget& budget,
                                 unsigned jobs = 1, const std::optional<gf::FieldSpec>& field = std::nullopt);

struct Prop22Mode {
  /// Unset means exhaustive over all ordered pairs.
  std::optional<std::uint64_t> sample_count;
  std::uint64_t seed = 0;

  static Prop22Mode exhaustive() { return {}; }
  static Prop22Mode sample(std::uint64_t count, std::uint64_t seed) { return {count, seed}; }
};

struct Prop22Violation {
  RingElement x{1};
  RingElement y{1};
  std::size_t d_h = 0;
  std::size_t block_count = 0;
  std::size_t d_p = 0;
};

struct Prop22Report {
  std::uint64_t pairs_checked = 0;
  /// Pairs with 0 < d_H < n, checked against d_p = d_H + L.
  std::uint64_t identity_checked = 0;
  /// Pairs with d_H = n, checked against d_p = n.
  std::uint64_t full_support_checked = 0;
  std::vector<Prop22Violation> violations;
};

/// Checks d_p = d_H + L on ordered pairs of F_q^n. Exhaustive mode is
/// limited to q^{2n} <= 2^20 pairs (std::invalid_argument otherwise).
Prop22Report verify_prop22(const gf::FieldSpec& field, std::size_t n, const Prop22Mode& mode);

}  // namespace spair::oracle
