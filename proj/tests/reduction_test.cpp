#include "brieskorn/normal_form.hpp"

#include <gtest/gtest.h>

#include <random>

#include "brieskorn/errors.hpp"

namespace brieskorn {
namespace {

TEST(ReduceMonomial, GoldenValues) {
  const BPShape shape = BPShape::parse("7,3");

  // One excess power of x1: one u, factor (8-7+1)/7.
  const auto r1 = reduce_monomial(shape, {8, 1});
  EXPECT_FALSE(r1.zero);
  EXPECT_EQ(r1.j, 1);
  EXPECT_EQ(r1.nu, (GammaIndex{1, 1}));
  EXPECT_EQ(r1.coeff, Rational(2, 7));

  // 6 + 1 = 7 kills the class.
  EXPECT_TRUE(reduce_monomial(shape, {6, 0}).zero);
  // The kill condition is mod-based: 13 = 6 (mod 7) dies as well.
  EXPECT_TRUE(reduce_monomial(shape, {13, 1}).zero);

  // Already in the box: identity.
  const auto r0 = reduce_monomial(shape, {5, 1});
  EXPECT_FALSE(r0.zero);
  EXPECT_EQ(r0.j, 0);
  EXPECT_EQ(r0.coeff, Rational(1));

  // Two excess powers in one coordinate.
  const auto r2 = reduce_monomial(shape, {0, 7});
  EXPECT_FALSE(r2.zero);
  EXPECT_EQ(r2.j, 2);
  EXPECT_EQ(r2.nu, (GammaIndex{0, 1}));
  EXPECT_EQ(r2.coeff, Rational(5, 3) * Rational(2, 3));

  EXPECT_THROW(reduce_monomial(shape, {1}), DomainError);
  EXPECT_THROW(reduce_monomial(shape, {-1, 0}), DomainError);
}

// Invariant: reduce(nu + m_i e_i) = u * ((nu_i + 1)/m_i) * reduce(nu).
TEST(ReduceMonomial, ShiftIdentityRandomized) {
  std::mt19937 rng(20240806);
  std::uniform_int_distribution<long> expo(2, 7);
  std::uniform_int_distribution<long> val(0, 20);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<long> m(static_cast<std::size_t>(n));
    for (auto &mi : m) {
      mi = expo(rng);
    }
    const BPShape shape(m);
    MonomialIndex nu(static_cast<std::size_t>(n));
    for (auto &ni : nu) {
      ni = val(rng);
    }
    const std::size_t i =
        std::uniform_int_distribution<std::size_t>(0, nu.size() - 1)(rng);

    const auto base = reduce_monomial(shape, nu);
    MonomialIndex shifted = nu;
    shifted[i] += shape.exponent(i);
    const auto lifted = reduce_monomial(shape, shifted);

    if (base.zero) {
      EXPECT_TRUE(lifted.zero);
      continue;
    }
    ASSERT_FALSE(lifted.zero);
    EXPECT_EQ(lifted.j, base.j + 1);
    EXPECT_EQ(lifted.nu, base.nu);
    EXPECT_EQ(lifted.coeff,
              base.coeff * Rational(nu[i] + 1, shape.exponent(i)));
  }
}

// Confluence: the coordinates are independent, so reducing them in reverse
// order gives an identical result.
ReductionResult reduce_reversed(const BPShape &shape, const MonomialIndex &nu) {
  ReductionResult res;
  res.j = 0;
  res.nu = nu;
  res.coeff = 1;
  for (std::size_t step = shape.vars(); step-- > 0;) {
    const long m = shape.exponent(step);
    if (res.nu[step] % m == m - 1) {
      return ReductionResult::make_zero();
    }
    while (res.nu[step] >= m) {
      res.coeff *= Rational(res.nu[step] - m + 1, m);
      res.nu[step] -= m;
      res.j += 1;
    }
  }
  return res;
}

TEST(ReduceMonomial, ConfluenceRandomized) {
  std::mt19937 rng(20240807);
  std::uniform_int_distribution<long> expo(2, 6);
  std::uniform_int_distribution<long> val(0, 15);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    std::vector<long> m(static_cast<std::size_t>(n));
    for (auto &mi : m) {
      mi = expo(rng);
    }
    const BPShape shape(m);
    MonomialIndex nu(static_cast<std::size_t>(n));
    for (auto &ni : nu) {
      ni = val(rng);
    }
    const auto fwd = reduce_monomial(shape, nu);
    const auto rev = reduce_reversed(shape, nu);
    EXPECT_EQ(fwd.zero, rev.zero);
    if (!fwd.zero) {
      EXPECT_EQ(fwd.j, rev.j);
      EXPECT_EQ(fwd.nu, rev.nu);
      EXPECT_EQ(fwd.coeff, rev.coeff);
    }
  }
}

TEST(NormalFormElement, AddMergeCancel) {
  const BPShape shape = BPShape::parse("7,3");
  NormalFormElement x(shape, 3);
  EXPECT_TRUE(x.is_zero());

  x.add(DeformIndex(), 0, 0, Rational(1, 2));
  x.add(DeformIndex(), 0, 0, Rational(1, 2));
  ASSERT_EQ(x.terms().size(), 1u);
  EXPECT_EQ(x.terms().begin()->second, Rational(1));

  x.add(DeformIndex(), 0, 0, Rational(-1));
  EXPECT_TRUE(x.is_zero());

  x.add(DeformIndex::single(11, 1), -2, 3, Rational(5));
  x.add(DeformIndex::single(11, 1), -2, 3, Rational(0)); // no-op
  EXPECT_EQ(x.terms().size(), 1u);

  EXPECT_THROW(x.add(DeformIndex::single(0, 4), 0, 0, Rational(1)),
               DomainError);
  EXPECT_THROW(NormalFormElement(shape, -1), DomainError);
}

TEST(NormalFormElement, LinearOps) {
  const BPShape shape = BPShape::parse("7,3");
  NormalFormElement x(shape, 3);
  x.add(DeformIndex(), 0, 0, Rational(2));
  x.add(DeformIndex::single(11, 1), -1, 5, Rational(1, 3));

  const NormalFormElement y = x.scaled(Rational(-3));
  EXPECT_EQ(y.terms().at({DeformIndex(), 0, 0}), Rational(-6));

  NormalFormElement z = x;
  z += y;
  EXPECT_EQ(z, x.scaled(Rational(-2)));
  z -= y;
  EXPECT_EQ(z, x);
  EXPECT_TRUE(x.scaled(Rational(0)).is_zero());
}

TEST(NormalFormElement, SShiftTruncates) {
  const BPShape shape = BPShape::parse("7,3");
  NormalFormElement x(shape, 2);
  x.add(DeformIndex(), 0, 0, Rational(1));
  x.add(DeformIndex::single(11, 2), 0, 0, Rational(7));

  const NormalFormElement shifted = x.s_shifted(DeformIndex::single(9, 1));
  // degree-2 term pushed to degree 3 > k: dropped; constant survives at s^b.
  ASSERT_EQ(shifted.terms().size(), 1u);
  const auto &[key, c] = *shifted.terms().begin();
  EXPECT_EQ(std::get<0>(key), DeformIndex::single(9, 1));
  EXPECT_EQ(c, Rational(1));
}

} // namespace
} // namespace brieskorn
