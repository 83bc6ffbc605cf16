#include "spair/pairmetrics.hpp"

#include <stdexcept>
#include <string>

namespace spair::metrics {
namespace {

void require_pair_length(std::size_t n) {
  if (n < 2) throw std::invalid_argument("pair operations need length >= 2, got " + std::to_string(n));
}

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

PairVector::PairVector(std::vector<SymbolPair> pairs) : pairs_(std::move(pairs)) {}

bool PairVector::consistent() const {
  const std::size_t n = pairs_.size();
  for (std::size_t k = 0; k < n; ++k)
    if (pairs_[k].second != pairs_[(k + 1) % n].first) return false;
  return true;
}

PairVector pair_read(const RingElement& x) {
  const std::size_t n = x.size();
  require_pair_length(n);
  std::vector<SymbolPair> pairs(n);
  for (std::size_t k = 0; k < n; ++k) pairs[k] = {x[k], x[(k + 1) % n]};
  return PairVector(std::move(pairs));
}

std::size_t hamming_weight(const RingElement& x) {
  std::size_t w = 0;
  for (auto c : x.coeffs()) w += c.is_zero() ? 0 : 1;
  return w;
}

std::size_t pair_weight(const RingElement& x) {
  const std::size_t n = x.size();
  require_pair_length(n);
  std::size_t w = 0;
  for (std::size_t k = 0; k < n; ++k) w += (x[k].is_zero() && x[(k + 1) % n].is_zero()) ? 0 : 1;
  return w;
}

std::size_t hamming_distance(const RingElement& x, const RingElement& y) {
  require_same_length(x.size(), y.size());
  std::size_t d = 0;
  for (std::size_t k = 0; k < x.size(); ++k) d += x[k] != y[k] ? 1 : 0;
  return d;
}

std::size_t pair_distance(const RingElement& x, const RingElement& y) {
  require_same_length(x.size(), y.size());
  require_pair_length(x.size());
  const std::size_t n = x.size();
  std::size_t d = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t next = (k + 1) % n;
    d += (x[k] != y[k] || x[next] != y[next]) ? 1 : 0;
  }
  return d;
}

std::size_t pair_seq_distance(const PairVector& u, const PairVector& v) {
  require_same_length(u.size(), v.size());
  std::size_t d = 0;
  for (std::size_t k = 0; k < u.size(); ++k) d += u[k] != v[k] ? 1 : 0;
  return d;
}

RunProfile run_count(const RingElement& x, const RingElement& y) {
  require_same_length(x.size(), y.size());
  const std::size_t n = x.size();
  RunProfile out;
  std::vector<bool> differs(n);
  for (std::size_t k = 0; k < n; ++k) {
    differs[k] = x[k] != y[k];
    if (differs[k]) out.support.push_back(k);
  }
  if (out.support.empty()) return out;
  if (out.support.size() == n) {
    out.block_count = 1;
    return out;
  }
  // A run starts wherever the cyclic predecessor is outside the support.
  for (std::size_t k : out.support)
    if (!differs[(k + n - 1) % n]) ++out.block_count;
  return out;
}

}  // namespace spair::metrics
