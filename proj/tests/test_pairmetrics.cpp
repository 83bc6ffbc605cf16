#include <gtest/gtest.h>

#include "spair/pairmetrics.hpp"
#include "spair/random.hpp"

namespace spair::metrics {
namespace {

using gf::FieldSpec;

RingElement word(std::initializer_list<std::uint32_t> codes) {
  std::vector<FieldElement> v;
  for (auto c : codes) v.push_back(FieldElement{c});
  return RingElement(std::move(v));
}

RingElement word_from_index(std::uint64_t index, std::uint32_t q, std::size_t n) {
  RingElement w(n);
  for (std::size_t k = 0; k < n; ++k) {
    w[k] = FieldElement{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return w;
}

std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Rotate so that index 0 is outside the support, then count linear runs.
std::size_t runs_by_rotation(const std::vector<bool>& in) {
  const std::size_t n = in.size();
  std::size_t start = n;
  for (std::size_t k = 0; k < n; ++k)
    if (!in[k]) start = k;
  if (start == n) return 1;
  std::size_t runs = 0;
  bool prev = false;
  for (std::size_t k = 1; k <= n; ++k) {
    const bool cur = in[(start + k) % n];
    if (cur && !prev) ++runs;
    prev = cur;
  }
  return runs;
}

TEST(PairRead, Examples) {
  const PairVector pv = pair_read(word({3, 5, 7}));
  ASSERT_EQ(pv.size(), 3U);
  EXPECT_EQ(pv[0], (SymbolPair{{3}, {5}}));
  EXPECT_EQ(pv[1], (SymbolPair{{5}, {7}}));
  EXPECT_EQ(pv[2], (SymbolPair{{7}, {3}}));
  EXPECT_TRUE(pv.consistent());

  for (const auto& pr : pair_read(RingElement(6)).pairs()) EXPECT_EQ(pr, (SymbolPair{{0}, {0}}));

  const PairVector one = pair_read(word({1, 0, 0, 0}));
  EXPECT_EQ(one.pairs(), (std::vector<SymbolPair>{{{1}, {0}}, {{0}, {0}}, {{0}, {0}}, {{0}, {1}}}));
}

TEST(PairRead, InconsistentWhenCorrupted) {
  PairVector pv = pair_read(word({1, 2, 0, 1}));
  pv[1] = {FieldElement{2}, FieldElement{2}};
  EXPECT_FALSE(pv.consistent());
}

TEST(PairRead, RejectsLengthOne) {
  EXPECT_THROW(pair_read(RingElement(1)), std::invalid_argument);
  EXPECT_THROW(pair_weight(RingElement(1)), std::invalid_argument);
  EXPECT_THROW(pair_distance(RingElement(1), RingElement(1)), std::invalid_argument);
}

TEST(Weights, Examples) {
  EXPECT_EQ(hamming_weight(RingElement(9)), 0U);
  EXPECT_EQ(hamming_weight(word({1, 1, 1, 1, 1, 1, 1, 1, 1})), 9U);
  EXPECT_EQ(hamming_weight(word({1, 2, 0, 2, 1, 0, 0, 0, 0})), 4U);

  EXPECT_EQ(pair_weight(word({2, 1, 0, 0, 0, 0, 0, 0, 0})), 3U);
  EXPECT_EQ(pair_weight(word({2, 0, 0, 1, 0, 0, 0, 0, 0})), 4U);
  EXPECT_EQ(pair_weight(word({1, 3, 1, 0, 0})), 4U);
  EXPECT_EQ(pair_weight(RingElement(5)), 0U);
}

TEST(Distances, Examples) {
  const RingElement x = word({1, 0, 1, 0, 0});
  EXPECT_EQ(hamming_distance(x, x), 0U);
  EXPECT_EQ(pair_distance(x, x), 0U);
  EXPECT_EQ(hamming_distance(x, RingElement(5)), 2U);
  EXPECT_EQ(pair_distance(x, RingElement(5)), 4U);

  const RingElement wrap = word({1, 0, 0, 0, 1});
  EXPECT_EQ(hamming_distance(wrap, RingElement(5)), 2U);
  EXPECT_EQ(pair_distance(wrap, RingElement(5)), 3U);
}

TEST(Distances, LengthMismatchThrows) {
  EXPECT_THROW(hamming_distance(RingElement(3), RingElement(4)), std::invalid_argument);
  EXPECT_THROW(pair_distance(RingElement(3), RingElement(4)), std::invalid_argument);
  EXPECT_THROW(run_count(RingElement(3), RingElement(4)), std::invalid_argument);
  EXPECT_THROW(pair_seq_distance(pair_read(RingElement(3)), pair_read(RingElement(4))), std::invalid_argument);
}

TEST(PairSeqDistance, Examples) {
  const RingElement x = word({1, 2, 0, 1});
  const RingElement y = word({1, 0, 0, 2});
  EXPECT_EQ(pair_seq_distance(pair_read(x), pair_read(x)), 0U);
  EXPECT_EQ(pair_seq_distance(pair_read(x), pair_read(y)), pair_distance(x, y));
  PairVector corrupted = pair_read(x);
  corrupted[2] = {FieldElement{1}, FieldElement{1}};
  EXPECT_EQ(pair_seq_distance(pair_read(x), corrupted), 1U);
}

TEST(RunCount, Examples) {
  const RingElement zero(5);
  EXPECT_EQ(run_count(word({1, 0, 1, 0, 0}), zero).block_count, 2U);
  const RunProfile wrap = run_count(word({1, 0, 0, 0, 1}), zero);
  EXPECT_EQ(wrap.block_count, 1U);
  EXPECT_EQ(wrap.support, (std::vector<std::size_t>{0, 4}));
  const RunProfile none = run_count(zero, zero);
  EXPECT_EQ(none.block_count, 0U);
  EXPECT_TRUE(none.support.empty());
  EXPECT_EQ(run_count(word({1, 1, 1, 1, 1}), zero).block_count, 1U);
}

TEST(RunCount, MatchesRotationCount) {
  for (std::size_t n = 2; n <= 10; ++n) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<bool> in(n);
      RingElement x(n);
      for (std::size_t k = 0; k < n; ++k) {
        in[k] = (mask >> k) & 1U;
        if (in[k]) x[k] = FieldElement{1};
      }
      const RunProfile rp = run_count(x, RingElement(n));
      ASSERT_EQ(rp.block_count, runs_by_rotation(in)) << "n=" << n << " mask=" << mask;
      ASSERT_GE(rp.block_count, 1U);
      ASSERT_LE(rp.block_count, rp.support.size());
    }
  }
}

// d_p = d_H + L over every ordered pair of F_2^5 and F_3^4.
TEST(Prop22Identity, Exhaustive) {
  for (auto [q, n] : {std::pair{2U, std::size_t{5}}, std::pair{3U, std::size_t{4}}}) {
    const std::uint64_t words = power(q, n);
    for (std::uint64_t a = 0; a < words; ++a) {
      const RingElement x = word_from_index(a, q, n);
      for (std::uint64_t b = 0; b < words; ++b) {
        const RingElement y = word_from_index(b, q, n);
        const std::size_t dh = hamming_distance(x, y);
        if (dh == 0) continue;
        if (dh == n)
          ASSERT_EQ(pair_distance(x, y), n);
        else
          ASSERT_EQ(pair_distance(x, y), dh + run_count(x, y).block_count);
      }
    }
  }
}

TEST(WeightInvariants, SandwichExhaustive) {
  const std::size_t n = 4;
  for (std::uint64_t a = 0; a < power(3, n); ++a) {
    const RingElement x = word_from_index(a, 3, n);
    const std::size_t wh = hamming_weight(x);
    const std::size_t wp = pair_weight(x);
    EXPECT_EQ(wp == 0, x.is_zero());
    if (wh > 0 && wh < n) {
      EXPECT_LE(wh + 1, wp);
      EXPECT_LE(wp, 2 * wh);
    }
    if (wh == n) EXPECT_EQ(wp, n);
  }
}

TEST(WeightInvariants, ShiftScalarAndLinearity) {
  const FieldSpec f = gf::build_field(3, 2);
  SeededRng rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 2 + rng.below(15);
    RingElement x(n), y(n);
    for (std::size_t k = 0; k < n; ++k) {
      // Sparse words exercise the interesting run structures.
      if (rng.below(3) == 0) x[k] = FieldElement{static_cast<std::uint32_t>(rng.below(f.q()))};
      y[k] = FieldElement{static_cast<std::uint32_t>(rng.below(f.q()))};
    }
    const std::size_t wp = pair_weight(x);
    ASSERT_EQ(pair_weight(ring::cyclic_shift(x, static_cast<std::int64_t>(rng.below(2 * n)) - static_cast<std::int64_t>(n))), wp);
    ASSERT_EQ(hamming_weight(ring::cyclic_shift(x, 1)), hamming_weight(x));
    const FieldElement lambda{static_cast<std::uint32_t>(1 + rng.below(f.q() - 1))};
    ASSERT_EQ(pair_weight(ring::ring_scale(f, lambda, x)), wp);
    ASSERT_EQ(pair_distance(x, y), pair_weight(ring::ring_sub(f, x, y)));
  }
}

// Pair weight 3 exactly for the shifts of (a, b, 0, ..., 0) with a, b != 0.
TEST(WeightInvariants, PairWeightThreeCharacterization) {
  const std::size_t n = 4;
  for (std::uint64_t idx = 0; idx < power(3, n); ++idx) {
    const RingElement x = word_from_index(idx, 3, n);
    bool adjacent_pair = false;
    for (std::size_t s = 0; s < n; ++s) {
      const RingElement r = ring::cyclic_shift(x, -static_cast<std::int64_t>(s));
      if (!r[0].is_zero() && !r[1].is_zero() && r[2].is_zero() && r[3].is_zero()) adjacent_pair = true;
    }
    EXPECT_EQ(pair_weight(x) == 3, adjacent_pair) << idx;
  }
}

}  // namespace
}  // namespace spair::metrics
