#pragma once

// Symbol-pair metric: pair reads, Hamming and pair weights/distances, and
// the cyclic run count linking them (d_p = d_H + L when 0 < d_H < n).

#include <cstddef>
#include <utility>
#include <vector>

#include "spair/polyring.hpp"

namespace spair::metrics {

using gf::FieldElement;
using ring::RingElement;

using SymbolPair = std::pair<FieldElement, FieldElement>;

class PairVector {
 public:
  explicit PairVector(std::vector<SymbolPair> pairs);

  std::size_t size() const { return pairs_.size(); }
  const std::vector<SymbolPair>& pairs() const& { return pairs_; }
  std::vector<SymbolPair> pairs() && { return std::move(pairs_); }
  const SymbolPair& operator[](std::size_t k) const { return pairs_[k]; }
  SymbolPair& operator[](std::size_t k) { return pairs_[k]; }

  /// Second symbol of each pair equals the first symbol of the next,
  /// cyclically. Channel-corrupted reads need not satisfy this.
  bool consistent() const;

  bool operator==(const PairVector&) const = default;

 private:
  std::vector<SymbolPair> pairs_;
};

struct RunProfile {
  /// Ascending indices where the two words differ.
  std::vector<std::size_t> support;
  /// Maximal runs of cyclically consecutive indices in `support`;
  /// 1 when the support is all of Z_n.
  std::size_t block_count = 0;
};

/// pair k is (x_k, x_{(k+1) mod n}). Throws std::invalid_argument for n < 2.
PairVector pair_read(const RingElement& x);

std::size_t hamming_weight(const RingElement& x);
std::size_t pair_weight(const RingElement& x);

std::size_t hamming_distance(const RingElement& x, const RingElement& y);
std::size_t pair_distance(const RingElement& x, const RingElement& y);

/// Positionwise disagreement count between two pair sequences.
std::size_t pair_seq_distance(const PairVector& u, const PairVector& v);

RunProfile run_count(const RingElement& x, const RingElement& y);

}  // namespace spair::metrics
