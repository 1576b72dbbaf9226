#include "brieskorn/moduli.hpp"

#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "brieskorn/errors.hpp"
#include "brieskorn/splitting.hpp"

namespace brieskorn {
namespace {

TEST(Moduli, GoldenShapes) {
  EXPECT_EQ(moduli_dimension(bp_exponents(BPShape({7, 3}))).total, Integer(0));
  EXPECT_EQ(moduli_dimension(bp_exponents(BPShape({2, 2}))).total, Integer(0));
  EXPECT_EQ(moduli_dimension(bp_exponents(BPShape({5, 5}))).total, Integer(2));
  EXPECT_EQ(moduli_dimension(bp_exponents(BPShape({4, 4}))).total, Integer(1));
}

TEST(Moduli, ClassBreakdownFiveFive) {
  const ModuliDimension out = moduli_dimension(bp_exponents(BPShape({5, 5})));
  const std::vector<std::pair<Rational, Integer>> expected = {
      {Rational(0), Integer(0)},
      {Rational(1, 5), Integer(0)},
      {Rational(2, 5), Integer(2)},
  };
  EXPECT_EQ(out.classes, expected);
  EXPECT_EQ(out.total, Integer(2));
}

TEST(Moduli, ClassBreakdownFourFour) {
  const ModuliDimension out = moduli_dimension(bp_exponents(BPShape({4, 4})));
  const std::vector<std::pair<Rational, Integer>> expected = {
      {Rational(0), Integer(0)},
      {Rational(1, 4), Integer(0)},
      {Rational(1, 2), Integer(1)},
  };
  EXPECT_EQ(out.classes, expected);
}

// A conjugate pair of classes with two levels each contributes e * e'.
TEST(Moduli, TwoLevelClassContribution) {
  const std::vector<Rational> values = {
      Rational(1, 3), Rational(1, 3),
      Rational(2, 3), Rational(2, 3), Rational(2, 3),
      Rational(4, 3), Rational(4, 3), Rational(4, 3),
      Rational(5, 3), Rational(5, 3)};
  const Spectrum spectrum(values, 2);
  ASSERT_TRUE(spectrum.verify_symmetry());

  const ModuliDimension out = moduli_dimension(spectrum);
  EXPECT_EQ(out.total, Integer(6)); // 2 * 3 across levels 0 and 1
  ASSERT_EQ(out.classes.size(), 1u);
  EXPECT_EQ(out.classes[0].first, Rational(1, 3));
  EXPECT_EQ(out.classes[0].second, Integer(6));
}

TEST(Moduli, RequiresSymmetricSpectrum) {
  EXPECT_THROW(moduli_dimension(Spectrum({Rational(1, 2)}, 2)), DomainError);
  EXPECT_THROW(
      moduli_dimension(Spectrum({Rational(1, 3), Rational(1, 3),
                                 Rational(5, 3)},
                                2)),
      DomainError);
}

// Constructive version of the count for the 2/5-class of exponents (5,5):
// double the class with its conjugate, pair them antisymmetrically, and ask
// for splittings that keep each side inside itself.  The side-respecting
// attachments on the conjugate side are free (two of them), the lambda-side
// ones are forced equal to them, and the remaining cross coefficients stay
// zero -- a family of dimension exactly 2, matching the class contribution.
TEST(Moduli, DoubledSpaceFamilyForFiveFive) {
  // Level 0: x1 (the 2/5 vector) and x2, x3 (the conjugate 3/5 vectors).
  // Level 1: y3 (the conjugate 8/5 vector) and y1, y2 (the 7/5 vectors),
  // ordered so that the coupling block is the identity.
  Matrix s(6, 6);
  const auto couple = [&](std::size_t low, std::size_t high) {
    s.at(low, high) = Rational(1);
    s.at(high, low) = Rational(-1);
  };
  couple(0, 3); // S(x1, y3)
  couple(1, 4); // S(x2, y1)
  couple(2, 5); // S(x3, y2)
  const FilteredPairedSpace space(1, {{0, 3}, {1, 3}}, s);
  const AdaptedBasis basis = adapted_basis(space);
  EXPECT_EQ(basis.vectors, Matrix::identity(6));

  const SplittingParameters params = independent_parameter_set(space);
  EXPECT_EQ(params.independent.size(), 6u);
  EXPECT_EQ(params.depending.size(), 3u);
  EXPECT_EQ(Integer(2), class_parameter_count({{0, 1}, {1, 2}}));

  for (const auto &[r1, r2] :
       std::vector<std::pair<Rational, Rational>>{{Rational(1), Rational(0)},
                                                  {Rational(0), Rational(1)},
                                                  {Rational(2, 3),
                                                   Rational(-5)}}) {
    // Side-respecting assignment: conjugate-side attachments free, every
    // cross-side coefficient pinned to zero.
    const std::map<ThetaKey, Rational> assignment = {
        {ThetaKey{0, 0, 1, 0}, Rational(0)}, // x1 -> y3 (cross)
        {ThetaKey{0, 1, 1, 0}, r1},          // x2 -> y3
        {ThetaKey{0, 1, 1, 1}, Rational(0)}, // x2 -> y1 (cross)
        {ThetaKey{0, 2, 1, 0}, r2},          // x3 -> y3
        {ThetaKey{0, 2, 1, 1}, Rational(0)}, // x3 -> y1 (cross)
        {ThetaKey{0, 2, 1, 2}, Rational(0)}, // x3 -> y2 (cross)
    };
    const Splitting split = solve_splitting(space, basis, assignment);
    EXPECT_TRUE(verify_orthogonal(space, split));

    // the lambda-side attachments are forced to mirror the conjugate side
    EXPECT_EQ(split.theta.at(ThetaKey{0, 0, 1, 1}), r1); // x1 -> y1
    EXPECT_EQ(split.theta.at(ThetaKey{0, 0, 1, 2}), r2); // x1 -> y2
    // and the last cross coefficient comes out zero by itself
    EXPECT_EQ(split.theta.at(ThetaKey{0, 1, 1, 2}), Rational(0));

    // resulting splitting vectors, explicitly
    Matrix expected = Matrix::identity(6);
    expected.at(4, 0) = r1; // w(x1) = x1 + r1 y1 + r2 y2
    expected.at(5, 0) = r2;
    expected.at(3, 1) = r1; // w(x2) = x2 + r1 y3
    expected.at(3, 2) = r2; // w(x3) = x3 + r2 y3
    EXPECT_EQ(split.vectors, expected);
  }
}

} // namespace
} // namespace brieskorn
