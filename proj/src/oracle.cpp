#include "spair/oracle.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "spair/pairmetrics.hpp"
#include "spair/random.hpp"

namespace spair::oracle {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return b > kSaturated - a ? kSaturated : a + b; }

// Keeps the smaller weight; ties go to the lexicographically smaller word.
void improve(std::optional<WeightWitness>& best, std::uint64_t weight, const RingElement& word) {
  if (!best || weight < best->weight || (weight == best->weight && word < best->witness))
    best = WeightWitness{weight, word};
}

struct Partial {
  std::optional<WeightWitness> pair;
  std::optional<WeightWitness> hamming;
};

Partial scan_range(const CyclicCode& code, bool reduce, std::uint64_t lo, std::uint64_t hi) {
  Partial out;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    const RingElement c = code.encode(message_at(code, idx, reduce));
    improve(out.pair, metrics::pair_weight(c), c);
    improve(out.hamming, metrics::hamming_weight(c), c);
  }
  return out;
}

}  // namespace

BudgetExhausted::BudgetExhausted(std::uint64_t required, std::uint64_t budget, std::optional<WeightWitness> best_pair,
                                 std::optional<WeightWitness> best_hamming)
    : std::runtime_error("enumeration budget exhausted: " + std::to_string(budget) + " of " +
                         (required == kSaturated ? std::string("more than 2^64") : std::to_string(required)) +
                         " codewords"),
      required_(required),
      budget_(budget),
      best_pair_(std::move(best_pair)),
      best_hamming_(std::move(best_hamming)) {}

std::uint64_t codeword_count(const CyclicCode& code, bool reduce_by_scalars) {
  const std::uint64_t q = code.field().q();
  const std::uint64_t k = code.dimension();
  if (k == 0) return 0;
  if (reduce_by_scalars) {
    // 1 + q + ... + q^{k-1}
    std::uint64_t total = 0;
    std::uint64_t term = 1;
    for (std::uint64_t d = 0; d < k; ++d) {
      total = sat_add(total, term);
      term = sat_mul(term, q);
    }
    return total;
  }
  std::uint64_t total = 1;
  for (std::uint64_t d = 0; d < k; ++d) total = sat_mul(total, q);
  return total == kSaturated ? kSaturated : total - 1;
}

ring::Poly message_at(const CyclicCode& code, std::uint64_t index, bool reduce_by_scalars) {
  const std::uint64_t q = code.field().q();
  std::vector<gf::FieldElement> digits;
  if (reduce_by_scalars) {
    // Block d holds the q^d messages of degree d with leading coefficient 1.
    std::uint64_t block = 1;
    std::uint64_t degree = 0;
    while (index >= block) {
      index -= block;
      block *= q;
      ++degree;
    }
    digits.resize(degree + 1);
    for (std::uint64_t d = 0; d < degree; ++d) {
      digits[d] = gf::FieldElement{static_cast<std::uint32_t>(index % q)};
      index /= q;
    }
    digits[degree] = gf::FieldSpec::one();
  } else {
    std::uint64_t value = index + 1;
    while (value > 0) {
      digits.push_back(gf::FieldElement{static_cast<std::uint32_t>(value % q)});
      value /= q;
    }
  }
  return ring::Poly(std::move(digits));
}

EnumStatus enumerate_codewords(const CyclicCode& code, const EnumBudget& budget,
                               const std::function<void(const RingElement&)>& visit) {
  const std::uint64_t total = codeword_count(code, budget.reduce_by_scalars);
  const std::uint64_t limit = std::min(total, budget.max_codewords);
  for (std::uint64_t idx = 0; idx < limit; ++idx) visit(code.encode(message_at(code, idx, budget.reduce_by_scalars)));
  return total > budget.max_codewords ? EnumStatus::budget_exhausted : EnumStatus::completed;
}

MinimumWeights minimum_weights(const CyclicCode& code, const EnumBudget& budget, unsigned jobs) {
  if (code.dimension() == 0) {
    const RingElement zero(code.length());
    return {{0, zero}, {0, zero}};
  }
  const std::uint64_t total = codeword_count(code, budget.reduce_by_scalars);
  const std::uint64_t limit = std::min(total, budget.max_codewords);
  const std::uint64_t workers = std::clamp<std::uint64_t>(jobs, 1, std::max<std::uint64_t>(limit, 1));

  std::vector<Partial> parts(workers);
  if (workers == 1) {
    parts[0] = scan_range(code, budget.reduce_by_scalars, 0, limit);
  } else {
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (limit + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = std::min(limit, w * chunk);
      const std::uint64_t hi = std::min(limit, lo + chunk);
      threads.emplace_back([&, w, lo, hi] { parts[w] = scan_range(code, budget.reduce_by_scalars, lo, hi); });
    }
    for (auto& t : threads) t.join();
  }

  Partial merged;
  for (const auto& part : parts) {
    if (part.pair) improve(merged.pair, part.pair->weight, part.pair->witness);
    if (part.hamming) improve(merged.hamming, part.hamming->weight, part.hamming->witness);
  }
  if (total > budget.max_codewords) throw BudgetExhausted(total, budget.max_codewords, merged.pair, merged.hamming);
  return {*merged.pair, *merged.hamming};
}

WeightWitness min_pair_weight_bruteforce(const CyclicCode& code, const EnumBudget& budget, unsigned jobs) {
  return minimum_weights(code, budget, jobs).pair;
}

WeightWitness min_hamming_weight_bruteforce(const CyclicCode& code, const EnumBudget& budget, unsigned jobs) {
  return minimum_weights(code, budget, jobs).hamming;
}

std::string to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::match:
      return "match";
    case EntryStatus::mismatch:
      return "mismatch";
    case EntryStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

std::size_t VerificationReport::count(EntryStatus s) const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [s](const auto& e) { return e.status == s; }));
}

EntryStatus VerificationReport::verdict() const {
  if (count(EntryStatus::mismatch) > 0) return EntryStatus::mismatch;
  if (count(EntryStatus::skipped) > 0) return EntryStatus::skipped;
  return EntryStatus::match;
}

VerificationReport verify_family(std::uint32_t p, std::uint32_t e, std::uint32_t m, const EnumBudget& budget,
                                 unsigned jobs, const std::optional<gf::FieldSpec>& field) {
  CodeSpec spec{p, m, e, 0};
  spec.validate();
  const gf::FieldSpec fs = field ? *field : gf::build_field(p, m);

  VerificationReport report{p, e, m, {}};
  for (std::uint64_t i = 0; i <= spec.n(); ++i) {
    spec.i = i;
    VerificationEntry entry;
    entry.i = i;
    entry.formula_dh = codes::closed_form_hamming_distance(spec);
    entry.formula_dp = codes::closed_form_pair_distance(spec);
    try {
      const CyclicCode code(spec, fs);
      const MinimumWeights w = minimum_weights(code, budget, jobs);
      entry.oracle_dh = w.hamming.weight;
      entry.oracle_dp = w.pair.weight;
      entry.witness = w.pair.witness;
      entry.status = (entry.formula_dh == w.hamming.weight && entry.formula_dp == w.pair.weight) ? EntryStatus::match
                                                                                               : EntryStatus::mismatch;
    } catch (const BudgetExhausted&) {
      entry.status = EntryStatus::skipped;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace {

RingElement word_from_index(std::uint64_t index, std::uint64_t q, std::size_t n) {
  RingElement w(n);
  for (std::size_t k = 0; k < n; ++k) {
    w[k] = gf::FieldElement{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return w;
}

void check_pair(const RingElement& x, const RingElement& y, Prop22Report& report) {
  ++report.pairs_checked;
  const std::size_t n = x.size();
  const std::size_t d_h = metrics::hamming_distance(x, y);
  if (d_h == 0) return;
  const std::size_t d_p = metrics::pair_distance(x, y);
  if (d_h == n) {
    ++report.full_support_checked;
    if (d_p != n) report.violations.push_back({x, y, d_h, metrics::run_count(x, y).block_count, d_p});
    return;
  }
  ++report.identity_checked;
  const std::size_t runs = metrics::run_count(x, y).block_count;
  if (d_p != d_h + runs) report.violations.push_back({x, y, d_h, runs, d_p});
}

}  // namespace

Prop22Report verify_prop22(const gf::FieldSpec& field, std::size_t n, const Prop22Mode& mode) {
  if (n < 2) throw std::invalid_argument("pair distance needs n >= 2");
  const std::uint64_t q = field.q();
  std::uint64_t words = 1;
  for (std::size_t k = 0; k < n; ++k) words = sat_mul(words, q);

  Prop22Report report;
  if (!mode.sample_count) {
    if (sat_mul(words, words) > (std::uint64_t{1} << 20))
      throw std::invalid_argument("exhaustive check limited to 2^20 ordered pairs; use sampling");
    for (std::uint64_t a = 0; a < words; ++a) {
      const RingElement x = word_from_index(a, q, n);
      for (std::uint64_t b = 0; b < words; ++b) check_pair(x, word_from_index(b, q, n), report);
    }
    return report;
  }

  SeededRng rng(mode.seed);
  for (std::uint64_t s = 0; s < *mode.sample_count; ++s) {
    RingElement x(n);
    RingElement y(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = gf::FieldElement{static_cast<std::uint32_t>(rng.below(q))};
    for (std::size_t k = 0; k < n; ++k) y[k] = gf::FieldElement{static_cast<std::uint32_t>(rng.below(q))};
    check_pair(x, y, report);
  }
  return report;
}

}  // namespace spair::oracle
