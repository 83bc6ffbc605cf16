#include "spair/channel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "spair/random.hpp"

namespace spair::channel {

std::pair<PairVector, PairErrorPattern> inject_pair_errors(const PairVector& u, std::size_t t, std::uint32_t q,
                                                           std::uint64_t seed) {
  const std::size_t n = u.size();
  if (t > n) throw std::invalid_argument("cannot corrupt " + std::to_string(t) + " of " + std::to_string(n) + " pairs");
  if (t > 0 && q < 2) throw std::invalid_argument("alphabet too small to corrupt a pair");

  SeededRng rng(seed);
  // Partial Fisher-Yates picks t distinct positions.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t k = 0; k < t; ++k) std::swap(order[k], order[k + rng.below(n - k)]);

  PairErrorPattern pattern;
  pattern.positions.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t));
  std::sort(pattern.positions.begin(), pattern.positions.end());

  PairVector out = u;
  const std::uint64_t pairs = static_cast<std::uint64_t>(q) * q;
  for (std::size_t pos : pattern.positions) {
    const SymbolPair& orig = u[pos];
    const std::uint64_t orig_code = static_cast<std::uint64_t>(orig.first.code) * q + orig.second.code;
    // Uniform over the q^2 - 1 other pairs: skip over the original.
    std::uint64_t pick = rng.below(pairs - 1);
    if (pick >= orig_code) ++pick;
    const SymbolPair repl{gf::FieldElement{static_cast<std::uint32_t>(pick / q)},
                          gf::FieldElement{static_cast<std::uint32_t>(pick % q)}};
    out[pos] = repl;
    pattern.replacements.push_back(repl);
  }
  return {std::move(out), std::move(pattern)};
}

MinPairDistanceDecoder::MinPairDistanceDecoder(const CyclicCode& code, std::uint64_t max_codewords) {
  // Every codeword, zero included; scalar multiples decode differently.
  const std::uint64_t nonzero = oracle::codeword_count(code, false);
  if (nonzero == UINT64_MAX || nonzero + 1 > max_codewords)
    throw oracle::BudgetExhausted(nonzero == UINT64_MAX ? nonzero : nonzero + 1, max_codewords, std::nullopt, std::nullopt);
  codewords_.reserve(nonzero + 1);
  codewords_.emplace_back(code.length());
  for (std::uint64_t idx = 0; idx < nonzero; ++idx) codewords_.push_back(code.encode(oracle::message_at(code, idx, false)));
  reads_.reserve(codewords_.size());
  for (const auto& c : codewords_) reads_.push_back(metrics::pair_read(c));
}

DecodeResult MinPairDistanceDecoder::decode(const PairVector& received) const {
  std::size_t best = SIZE_MAX;
  std::size_t best_idx = 0;
  bool tied = false;
  for (std::size_t k = 0; k < reads_.size(); ++k) {
    const std::size_t d = metrics::pair_seq_distance(reads_[k], received);
    if (d < best) {
      best = d;
      best_idx = k;
      tied = false;
    } else if (d == best) {
      tied = true;
    }
  }
  DecodeResult out;
  out.distance = best;
  if (!tied) out.codeword = codewords_[best_idx];
  return out;
}

DecodeResult decode_min_pair_distance(const CyclicCode& code, const PairVector& received, std::uint64_t max_codewords) {
  return MinPairDistanceDecoder(code, max_codewords).decode(received);
}

ExperimentResult correctability_experiment(const CyclicCode& code, std::size_t t, std::size_t trials, std::uint64_t seed,
                                           std::uint64_t max_codewords) {
  if (t > code.length()) throw std::invalid_argument("error count exceeds code length");
  const MinPairDistanceDecoder decoder(code, max_codewords);
  const std::uint32_t q = code.field().q();
  const std::size_t k = code.dimension();

  ExperimentResult result;
  result.trials = trials;
  result.outcomes.reserve(trials);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    SeededRng rng(derive_seed(seed, trial));
    std::vector<gf::FieldElement> message(k);
    for (auto& c : message) c = gf::FieldElement{static_cast<std::uint32_t>(rng.below(q))};
    TrialOutcome outcome;
    outcome.transmitted = code.encode(ring::Poly(std::move(message)));
    outcome.received = inject_pair_errors(metrics::pair_read(outcome.transmitted), t, q, rng.next()).first;
    outcome.decoded = decoder.decode(outcome.received).codeword;
    outcome.success = outcome.decoded && *outcome.decoded == outcome.transmitted;
    if (outcome.success) ++result.successes;
    result.outcomes.push_back(std::move(outcome));
  }
  return result;
}

std::size_t guaranteed_correctable(const codes::CodeSpec& spec) {
  const std::uint64_t d = codes::closed_form_pair_distance(spec);
  return d == 0 ? 0 : static_cast<std::size_t>((d - 1) / 2);
}

}  // namespace spair::channel
