#include <gtest/gtest.h>

#include "spair/polyring.hpp"
#include "spair/random.hpp"

namespace spair::ring {
namespace {

std::vector<FieldElement> elems(std::initializer_list<std::uint32_t> codes) {
  std::vector<FieldElement> out;
  for (auto c : codes) out.push_back(FieldElement{c});
  return out;
}

Poly poly(std::initializer_list<std::uint32_t> codes) { return Poly(elems(codes)); }
RingElement word(std::initializer_list<std::uint32_t> codes) { return RingElement(elems(codes)); }

RingElement random_word(const FieldSpec& f, std::size_t n, SeededRng& rng) {
  RingElement w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = FieldElement{static_cast<std::uint32_t>(rng.below(f.q()))};
  return w;
}

TEST(Poly, Normalizes) {
  EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(poly({0, 0}).is_zero());
  EXPECT_EQ(Poly{}.degree(), -1);
}

TEST(Poly, Examples) {
  const FieldSpec f3 = gf::build_field(3, 1);
  const FieldSpec f2 = gf::build_field(2, 1);
  EXPECT_EQ(poly_mul(f3, poly({1, 1}), poly({2, 1})), poly({2, 0, 1}));
  EXPECT_TRUE(poly_mul(f3, poly({1, 2, 1}), Poly{}).is_zero());
  const auto [q, r] = poly_divrem(f2, poly({1, 0, 1}), poly({1, 1}));
  EXPECT_EQ(q, poly({1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(poly_add(f2, poly({1, 1}), poly({0, 1})), poly({1}));
  EXPECT_EQ(poly_sub(f3, poly({0, 1}), poly({1, 1})), poly({2}));
}

TEST(Poly, DivisionByZeroThrows) {
  const FieldSpec f3 = gf::build_field(3, 1);
  EXPECT_THROW(poly_divrem(f3, poly({1, 1}), Poly{}), std::domain_error);
}

TEST(Poly, DivremReconstructs) {
  const FieldSpec f = gf::build_field(3, 2);
  SeededRng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<FieldElement> a(1 + rng.below(9)), b(1 + rng.below(5));
    for (auto& c : a) c = FieldElement{static_cast<std::uint32_t>(rng.below(f.q()))};
    for (auto& c : b) c = FieldElement{static_cast<std::uint32_t>(rng.below(f.q()))};
    const Poly pa(a), pb(b);
    if (pb.is_zero()) continue;
    const auto [q, r] = poly_divrem(f, pa, pb);
    EXPECT_LT(r.degree(), pb.degree());
    EXPECT_EQ(poly_add(f, poly_mul(f, q, pb), r), pa);
  }
}

TEST(Ring, Examples) {
  const FieldSpec f2 = gf::build_field(2, 1);
  const FieldSpec f3 = gf::build_field(3, 1);
  EXPECT_EQ(ring_mul(f2, word({0, 0, 1}), word({0, 0, 1})), word({0, 1, 0}));
  const RingElement a = word({2, 0, 1, 1});
  EXPECT_EQ(ring_mul(f3, a, word({1, 0, 0, 0})), a);
  EXPECT_TRUE(ring_mul(f3, word({2, 1, 0, 0}), word({1, 1, 1, 1})).is_zero());
  EXPECT_EQ(to_ring(f3, poly({1, 0, 0, 0, 2}), 4), word({0, 0, 0, 0}));
  EXPECT_EQ(to_ring(f3, poly({1, 0, 0, 0, 1}), 4), word({2, 0, 0, 0}));
}

TEST(Ring, LengthMismatchThrows) {
  const FieldSpec f2 = gf::build_field(2, 1);
  EXPECT_THROW(ring_mul(f2, RingElement(3), RingElement(4)), std::invalid_argument);
  EXPECT_THROW(ring_add(f2, RingElement(3), RingElement(4)), std::invalid_argument);
  EXPECT_THROW(RingElement(0), std::invalid_argument);
}

TEST(Ring, MultiplicationIsCommutativeAndAssociative) {
  const FieldSpec f = gf::build_field(2, 2);
  SeededRng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(9);
    const RingElement a = random_word(f, n, rng), b = random_word(f, n, rng), c = random_word(f, n, rng);
    ASSERT_EQ(ring_mul(f, a, b), ring_mul(f, b, a));
    ASSERT_EQ(ring_mul(f, ring_mul(f, a, b), c), ring_mul(f, a, ring_mul(f, b, c)));
  }
}

TEST(XMinusOnePower, Examples) {
  const FieldSpec f3 = gf::build_field(3, 1);
  EXPECT_EQ(x_minus_one_power(f3, 8, 9), word({1, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(x_minus_one_power(f3, 3, 9), word({2, 0, 0, 1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(x_minus_one_power(f3, 4, 9), word({1, 2, 0, 2, 1, 0, 0, 0, 0}));
  EXPECT_EQ(x_minus_one_power(f3, 0, 9), word({1, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(x_minus_one_power(f3, 9, 9).is_zero());
  EXPECT_TRUE(x_minus_one_power(gf::build_field(2, 1), 4, 4).is_zero());
}

TEST(XMinusOnePower, RejectsBadArguments) {
  const FieldSpec f3 = gf::build_field(3, 1);
  EXPECT_THROW(x_minus_one_power(f3, 10, 9), std::out_of_range);
  EXPECT_THROW(x_minus_one_power(f3, 1, 6), std::invalid_argument);
}

TEST(XMinusOnePower, AgreesWithRepeatedMultiplication) {
  for (auto [p, e, m] : {std::tuple{2U, 4U, 1U}, std::tuple{3U, 3U, 1U}, std::tuple{5U, 2U, 1U}, std::tuple{2U, 3U, 2U}}) {
    const FieldSpec f = gf::build_field(p, m);
    std::size_t n = 1;
    for (unsigned k = 0; k < e; ++k) n *= p;
    RingElement x_minus_one(n);
    x_minus_one[0] = f.neg(FieldSpec::one());
    x_minus_one[1 % n] = f.add(x_minus_one[1 % n], FieldSpec::one());
    RingElement acc(n);
    acc[0] = FieldSpec::one();
    for (std::size_t i = 0; i <= n; ++i) {
      ASSERT_EQ(x_minus_one_power(f, i, n), acc) << "p=" << p << " e=" << e << " i=" << i;
      acc = ring_mul(f, acc, x_minus_one);
    }
  }
}

TEST(XMinusOnePower, FreshmansDream) {
  for (auto [p, e] : {std::pair{2U, 4U}, std::pair{3U, 3U}, std::pair{5U, 2U}, std::pair{7U, 2U}}) {
    const FieldSpec f = gf::build_field(p, 1);
    std::size_t n = 1;
    for (unsigned k = 0; k < e; ++k) n *= p;
    for (std::size_t pk = 1; pk < n; pk *= p) {
      const RingElement g = x_minus_one_power(f, pk, n);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == 0)
          EXPECT_EQ(g[j], f.neg(FieldSpec::one()));
        else if (j == pk)
          EXPECT_EQ(g[j], FieldSpec::one());
        else
          EXPECT_TRUE(g[j].is_zero());
      }
    }
  }
}

TEST(BinomialModP, MatchesPascal) {
  // Exact Pascal triangle up to 60 fits in 64 bits.
  std::vector<std::vector<std::uint64_t>> c(61, std::vector<std::uint64_t>(61, 0));
  for (std::size_t a = 0; a <= 60; ++a) {
    c[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) c[a][b] = c[a - 1][b - 1] + c[a - 1][b];
  }
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 13U})
    for (std::uint64_t a = 0; a <= 60; ++a)
      for (std::uint64_t b = 0; b <= 61; ++b)
        ASSERT_EQ(binomial_mod_p(a, b, p), b > a ? 0 : c[a][b] % p) << a << " choose " << b << " mod " << p;
}

TEST(CyclicShift, Examples) {
  const RingElement v = word({1, 2, 0, 0});
  EXPECT_EQ(cyclic_shift(v, 0), v);
  EXPECT_EQ(cyclic_shift(v, 4), v);
  EXPECT_EQ(cyclic_shift(v, 1), word({0, 1, 2, 0}));
  EXPECT_EQ(cyclic_shift(v, -1), word({2, 0, 0, 1}));
  EXPECT_EQ(cyclic_shift(cyclic_shift(v, 3), -3), v);
}

}  // namespace
}  // namespace spair::ring
