#pragma once

// Symbol-pair read channel: pair-error injection and exhaustive
// minimum-pair-distance decoding.

#include <cstdint>
#include <optional>
#include <vector>

#include "spair/codes.hpp"
#include "spair/oracle.hpp"
#include "spair/pairmetrics.hpp"

namespace spair::channel {

using codes::CyclicCode;
using metrics::PairVector;
using metrics::SymbolPair;
using ring::RingElement;

struct PairErrorPattern {
  /// Ascending, distinct.
  std::vector<std::size_t> positions;
  /// replacements[k] is the pair read at positions[k].
  std::vector<SymbolPair> replacements;
};

/// Replaces t distinct positions, chosen uniformly, by a uniformly chosen
/// pair over F_q different from the original one. Throws
/// std::invalid_argument for t > n.
std::pair<PairVector, PairErrorPattern> inject_pair_errors(const PairVector& u, std::size_t t, std::uint32_t q,
                                                           std::uint64_t seed);

struct DecodeResult {
  /// Unset when the nearest codeword is not unique.
  std::optional<RingElement> codeword;
  std::size_t distance = 0;
};

/// Full codebook with precomputed pair reads; decoding scans all of it.
class MinPairDistanceDecoder {
 public:
  /// Throws oracle::BudgetExhausted when q^k exceeds the budget.
  MinPairDistanceDecoder(const CyclicCode& code, std::uint64_t max_codewords);

  DecodeResult decode(const PairVector& received) const;
  std::size_t codebook_size() const { return codewords_.size(); }

 private:
  std::vector<RingElement> codewords_;
  std::vector<PairVector> reads_;
};

/// Convenience wrapper that builds the codebook for a single decode.
DecodeResult decode_min_pair_distance(const CyclicCode& code, const PairVector& received, std::uint64_t max_codewords);

struct TrialOutcome {
  RingElement transmitted{2};
  PairVector received{{}};
  std::optional<RingElement> decoded;
  bool success = false;
};

struct ExperimentResult {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::vector<TrialOutcome> outcomes;

  double success_rate() const { return trials == 0 ? 1.0 : static_cast<double>(successes) / static_cast<double>(trials); }
};

/// Each trial draws a uniform codeword and t pair errors from
/// derive_seed(seed, trial), decodes, and compares.
ExperimentResult correctability_experiment(const CyclicCode& code, std::size_t t, std::size_t trials, std::uint64_t seed,
                                           std::uint64_t max_codewords);

/// floor((d_p - 1) / 2) for the closed-form d_p; 0 when d_p == 0.
std::size_t guaranteed_correctable(const codes::CodeSpec& spec);

}  // namespace spair::channel
