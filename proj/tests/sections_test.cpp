#include "brieskorn/section_examples.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "brieskorn/connection.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/model_io.hpp"
#include "brieskorn/spectrum.hpp"

namespace brieskorn {
namespace {

LatticeElement random_lattice_element(std::size_t rank, std::mt19937 &rng) {
  std::uniform_int_distribution<std::size_t> pick(0, rank - 1);
  std::uniform_int_distribution<long> pick_j(-3, 3);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  LatticeElement x;
  const int terms = std::uniform_int_distribution<int>(1, 5)(rng);
  for (int t = 0; t < terms; ++t) {
    x.add(pick(rng), pick_j(rng), Rational(num(rng), den(rng)));
  }
  return x;
}

AbstractLattice random_lattice(std::size_t rank, std::mt19937 &rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<Rational> alphas;
  for (std::size_t k = 0; k < rank; ++k) {
    alphas.emplace_back(num(rng), den(rng));
  }
  std::vector<std::vector<ActionTerm>> action(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    if (!alphas[k].is_zero()) {
      action[k].push_back({k, 1, alphas[k]});
    }
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
      const std::size_t target =
          std::uniform_int_distribution<std::size_t>(0, rank - 1)(rng);
      const long j = std::uniform_int_distribution<long>(0, 2)(rng);
      const Rational coeff(num(rng) * 2 + 1, den(rng));
      if (target != k || j != 1) {
        action[k].push_back({target, j, coeff});
      }
    }
  }
  return AbstractLattice(std::move(alphas), std::move(action));
}

// [t, u] = u^2, i.e. t(u x) = u t(x) + u^2 x for every element x.
TEST(SectionLattice, CommutatorRandomized) {
  std::mt19937 rng(20240812);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t rank =
        std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const AbstractLattice lattice = random_lattice(rank, rng);
    const LatticeElement x = random_lattice_element(rank, rng);

    LatticeElement rhs = t_apply(lattice, x).u_shifted(1);
    rhs += x.u_shifted(2);
    EXPECT_EQ(t_apply(lattice, x.u_shifted(1)), rhs);
  }
}

TEST(SectionLattice, SemisimpleActionGolden) {
  const AbstractLattice lattice =
      AbstractLattice::semisimple({Rational(1, 2), Rational(3, 2)});
  // t(u^j v_k) = (alpha_k + j) u^{j+1} v_k
  LatticeElement x = LatticeElement::basis(1, -2);
  const LatticeElement y = t_apply(lattice, x);
  ASSERT_EQ(y.terms().size(), 1u);
  EXPECT_EQ(y.terms().at({1, -1}), Rational(3, 2) + Rational(-2));
  EXPECT_TRUE(t_apply(lattice, LatticeElement()).is_zero());
}

// Every example model satisfies its own connection equation
// t w_i = sum_k (A0)_{ki} w_k + sum_k (A1)_{ki} u w_k exactly.
void check_connection_roundtrip(const SectionModel &model) {
  const ConnectionPair pair =
      compute_connection(model.lattice, model.generators);
  const std::size_t n = model.generators.size();
  ASSERT_EQ(pair.a0.rows(), n);
  ASSERT_EQ(pair.a0.cols(), n);
  ASSERT_EQ(pair.a1.rows(), n);
  ASSERT_EQ(pair.a1.cols(), n);
  for (std::size_t i = 0; i < n; ++i) {
    LatticeElement expected;
    for (std::size_t k = 0; k < n; ++k) {
      expected += model.generators[k].scaled(pair.a0.at(k, i));
      expected += model.generators[k].u_shifted(1).scaled(pair.a1.at(k, i));
    }
    EXPECT_EQ(t_apply(model.lattice, model.generators[i]), expected)
        << "generator " << i;
  }
}

TEST(SectionExamples, DeformedExtremesModel) {
  const Rational e(3);
  const SectionModel model = build_example("ex41", {{"e", e}});
  ASSERT_EQ(model.lattice.rank(), 12u);
  ASSERT_EQ(model.generators.size(), 12u);

  const auto alphas = bp_exponents(BPShape({7, 3})).values();
  const ConnectionPair pair =
      compute_connection(model.lattice, model.generators);

  // A1 is diagonal: first/last exponents shifted toward each other by 1.
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t k = 0; k < 12; ++k) {
      if (i != k) {
        EXPECT_TRUE(pair.a1.at(k, i).is_zero());
      }
    }
  }
  EXPECT_EQ(pair.a1.at(0, 0), alphas.front() + 1);
  EXPECT_EQ(pair.a1.at(11, 11), alphas.back() - 1);
  for (std::size_t k = 1; k < 11; ++k) {
    EXPECT_EQ(pair.a1.at(k, k), alphas[k]);
  }

  // A0 has the single coupling (alpha_1 - alpha_mu + 1)/e = (-1/21)/e.
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t k = 0; k < 12; ++k) {
      if (!(k == 0 && i == 11)) {
        EXPECT_TRUE(pair.a0.at(k, i).is_zero());
      }
    }
  }
  EXPECT_EQ(pair.a0.at(0, 11), Rational(-1, 21) / e);
  EXPECT_EQ(pair.a0.at(0, 11), (alphas.front() - alphas.back() + 1) / e);

  const A1Spectrum spec = a1_spectrum(pair);
  EXPECT_TRUE(spec.semisimple);
  std::vector<Rational> expected_eigen = alphas;
  expected_eigen.front() += 1;
  expected_eigen.back() -= 1;
  std::sort(expected_eigen.begin(), expected_eigen.end());
  ASSERT_EQ(spec.eigenvalues.size(), expected_eigen.size());
  for (std::size_t i = 0; i < expected_eigen.size(); ++i) {
    EXPECT_EQ(spec.eigenvalues[i].first, expected_eigen[i]);
    EXPECT_EQ(spec.eigenvalues[i].second, 1);
  }

  // The last generator mixes two degrees, so the section is not graded.
  EXPECT_FALSE(is_very_good(model.lattice, model.generators));
  check_connection_roundtrip(model);
}

TEST(SectionExamples, DeformedExtremesCouplingVanishes) {
  // The coupling entry is (alpha_min - alpha_max + 1)/e; it vanishes exactly
  // when the exponent spread is 1, e.g. 1/a + 1/b = 1/2.
  for (const auto &[a, b] : std::vector<std::pair<long, long>>{{4, 4},
                                                               {3, 6},
                                                               {6, 3}}) {
    const SectionModel model = build_example(
        "ex41", {{"e", Rational(5)}, {"a", Rational(a)}, {"b", Rational(b)}});
    const ConnectionPair pair =
        compute_connection(model.lattice, model.generators);
    EXPECT_TRUE(pair.a0.is_zero()) << a << "," << b;
    EXPECT_TRUE(is_very_good(model.lattice, model.generators));
  }
  // Any other spread keeps the coupling and breaks gradedness.
  for (const auto &[a, b] : std::vector<std::pair<long, long>>{{2, 3},
                                                               {5, 5},
                                                               {7, 3}}) {
    const SectionModel model = build_example(
        "ex41", {{"e", Rational(5)}, {"a", Rational(a)}, {"b", Rational(b)}});
    const ConnectionPair pair =
        compute_connection(model.lattice, model.generators);
    EXPECT_FALSE(pair.a0.is_zero()) << a << "," << b;
    EXPECT_FALSE(is_very_good(model.lattice, model.generators));
  }
}

TEST(SectionExamples, NilpotentCouplingModel) {
  const Rational beta(2, 5);
  const Rational c(3);
  const SectionModel model =
      build_example("ex42", {{"beta", beta}, {"c", c}});
  const ConnectionPair pair =
      compute_connection(model.lattice, model.generators);

  Matrix a0(3, 3);
  a0.at(2, 0) = Rational(1);
  EXPECT_EQ(pair.a0, a0);

  Matrix a1(3, 3);
  a1.at(0, 0) = beta;
  a1.at(1, 0) = c;
  a1.at(1, 1) = beta;
  a1.at(2, 2) = beta + 1;
  EXPECT_EQ(pair.a1, a1);

  const A1Spectrum spec = a1_spectrum(pair);
  ASSERT_EQ(spec.eigenvalues.size(), 2u);
  EXPECT_EQ(spec.eigenvalues[0], (std::pair<Rational, long>{beta, 2}));
  EXPECT_EQ(spec.eigenvalues[1], (std::pair<Rational, long>{beta + 1, 1}));
  EXPECT_FALSE(spec.semisimple); // c != 0 couples the repeated eigenvalue

  // All three generators are homogeneous, so the section stays graded even
  // though the residue matrix is not semisimple.
  EXPECT_TRUE(is_very_good(model.lattice, model.generators));
  check_connection_roundtrip(model);

  const SectionModel diag =
      build_example("ex42", {{"beta", beta}, {"c", Rational(0)}});
  const ConnectionPair dpair =
      compute_connection(diag.lattice, diag.generators);
  EXPECT_TRUE(a1_spectrum(dpair).semisimple);
}

TEST(SectionExamples, TensorPairModel) {
  const Rational c(2);
  const Rational cp(-1, 3);
  const Rational gamma(5, 7);
  const SectionModel model =
      build_example("ex43", {{"c", c}, {"cp", cp}, {"gamma", gamma}});
  ASSERT_EQ(model.lattice.rank(), 6u);
  const ConnectionPair pair =
      compute_connection(model.lattice, model.generators);

  Matrix a0(6, 6);
  a0.at(2, 0) = Rational(1);
  a0.at(3, 0) = gamma;
  a0.at(5, 2) = gamma;
  a0.at(5, 3) = Rational(1);
  EXPECT_EQ(pair.a0, a0);

  const Rational beta(17, 15);
  const Rational betap(28, 15);
  Matrix a1(6, 6);
  a1.at(0, 0) = beta;
  a1.at(1, 0) = c;
  a1.at(1, 1) = beta;
  a1.at(2, 2) = beta + 1;
  a1.at(3, 3) = betap;
  a1.at(4, 4) = betap + 1;
  a1.at(5, 4) = cp;
  a1.at(5, 5) = betap + 1;
  EXPECT_EQ(pair.a1, a1);

  const A1Spectrum spec = a1_spectrum(pair);
  ASSERT_EQ(spec.eigenvalues.size(), 4u);
  EXPECT_EQ(spec.eigenvalues[0], (std::pair<Rational, long>{beta, 2}));
  EXPECT_EQ(spec.eigenvalues[1], (std::pair<Rational, long>{betap, 1}));
  EXPECT_EQ(spec.eigenvalues[2], (std::pair<Rational, long>{beta + 1, 1}));
  EXPECT_EQ(spec.eigenvalues[3], (std::pair<Rational, long>{betap + 1, 2}));
  EXPECT_FALSE(spec.semisimple);
  check_connection_roundtrip(model);

  // Both off-diagonal couplings must vanish for a squarefree minimal
  // polynomial.
  const SectionModel half = build_example(
      "ex43", {{"c", Rational(0)}, {"cp", cp}, {"gamma", gamma}});
  EXPECT_FALSE(
      a1_spectrum(compute_connection(half.lattice, half.generators))
          .semisimple);
  const SectionModel both = build_example(
      "ex43", {{"c", Rational(0)}, {"cp", Rational(0)}, {"gamma", gamma}});
  EXPECT_TRUE(
      a1_spectrum(compute_connection(both.lattice, both.generators))
          .semisimple);
}

TEST(SectionExamples, EigenvectorMixModel) {
  const Rational g1(1), g2(1, 2), g3(2), g4(1, 3);
  const Rational c(4), cp(-5);
  const SectionModel model = build_example("ex44", {{"gamma1", g1},
                                                    {"gamma2", g2},
                                                    {"gamma3", g3},
                                                    {"gamma4", g4},
                                                    {"c", c},
                                                    {"cp", cp}});
  const ConnectionPair pair =
      compute_connection(model.lattice, model.generators);

  Matrix a0(4, 4);
  a0.at(0, 1) = g1 - g2;
  a0.at(2, 1) = c * (g3 - g2);
  a0.at(0, 3) = g1 - g4;
  a0.at(2, 3) = c * (g3 - g4);
  EXPECT_EQ(pair.a0, a0);

  Matrix a1(4, 4);
  a1.at(0, 0) = g1 + 1;
  a1.at(1, 1) = g2;
  a1.at(2, 2) = g3 + 1;
  a1.at(3, 3) = g4;
  EXPECT_EQ(pair.a1, a1);

  EXPECT_TRUE(a1_spectrum(pair).semisimple); // diagonal residue matrix
  EXPECT_FALSE(is_very_good(model.lattice, model.generators));
  check_connection_roundtrip(model);
}

TEST(SectionExamples, ParameterValidation) {
  EXPECT_THROW(build_example("ex41", {}), DomainError);
  EXPECT_THROW(build_example("ex41", {{"e", Rational(0)}}), DomainError);
  EXPECT_THROW(build_example("ex41", {{"e", Rational(1)},
                                      {"a", Rational(1, 2)}}),
               DomainError);
  EXPECT_THROW(build_example("ex41", {{"e", Rational(1)},
                                      {"a", Rational(65)}}),
               DomainError);
  EXPECT_THROW(build_example("ex41", {{"e", Rational(1)},
                                      {"zz", Rational(1)}}),
               DomainError);
  EXPECT_THROW(build_example("ex42", {{"beta", Rational(1)}}), DomainError);
  EXPECT_THROW(build_example("ex43", {{"c", Rational(1)},
                                      {"cp", Rational(1)},
                                      {"gamma", Rational(0)}}),
               DomainError);
  EXPECT_THROW(build_example("ex44", {{"gamma1", Rational(1)},
                                      {"gamma2", Rational(1)},
                                      {"gamma3", Rational(1)},
                                      {"gamma4", Rational(1)},
                                      {"c", Rational(0)},
                                      {"cp", Rational(1)}}),
               DomainError);
  EXPECT_THROW(build_example("nope", {}), DomainError);
}

// Monomial sections u^{j_k} v_k of a semisimple lattice are closed under t
// with A0 = 0 and diagonal A1 = alpha_k + j_k; mixing them by any invertible
// constant matrix M keeps the span, so the connection must come out as
// A0 = 0, A1 = M^{-1} D M, and the section stays graded.
TEST(SectionExamples, MonomialSectionsStayGradedUnderMixing) {
  std::mt19937 rng(20240813);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 4);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n =
        std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    std::vector<Rational> alphas;
    for (std::size_t k = 0; k < n; ++k) {
      alphas.emplace_back(num(rng), den(rng));
    }
    const AbstractLattice lattice = AbstractLattice::semisimple(alphas);

    std::vector<long> shifts(n);
    for (auto &j : shifts) {
      j = std::uniform_int_distribution<long>(0, 3)(rng);
    }

    // unit lower * unit upper: invertible with determinant 1
    Matrix mix = Matrix::identity(n);
    Matrix lower = Matrix::identity(n);
    Matrix upper = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        lower.at(i, j) = Rational(num(rng), den(rng));
        upper.at(j, i) = Rational(num(rng), den(rng));
      }
    }
    mix = lower * upper;

    std::vector<LatticeElement> generators(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!mix.at(k, i).is_zero()) {
          generators[i].add(k, shifts[k], mix.at(k, i));
        }
      }
    }

    const ConnectionPair pair = compute_connection(lattice, generators);
    EXPECT_TRUE(pair.a0.is_zero());

    Matrix diag(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      diag.at(k, k) = alphas[k] + Rational(shifts[k]);
    }
    EXPECT_EQ(pair.a1, mix.inverse() * diag * mix);

    EXPECT_TRUE(is_very_good(lattice, generators));
  }
}

TEST(SectionExamples, ConnectionErrorCases) {
  const AbstractLattice lattice =
      AbstractLattice::semisimple({Rational(1, 2), Rational(3, 2)});

  // t-image of v_1 + v_2 is u(v_1/2 + 3v_2/2), outside the candidate span.
  LatticeElement mixed;
  mixed.add(0, 0, Rational(1));
  mixed.add(1, 0, Rational(1));
  EXPECT_THROW(compute_connection(lattice, {mixed}), NotGood);

  // v_1 and u v_1 make the 2n candidates linearly dependent.
  EXPECT_THROW(compute_connection(lattice, {LatticeElement::basis(0, 0),
                                            LatticeElement::basis(0, 1)}),
               DependentGenerators);

  EXPECT_THROW(compute_connection(lattice, {}), DomainError);

  ConnectionPair swap;
  swap.a0 = Matrix(2, 2);
  swap.a1 = Matrix(2, 2);
  swap.a1.at(0, 1) = Rational(1);
  swap.a1.at(1, 0) = Rational(1);
  EXPECT_THROW(a1_spectrum(swap), NonTriangular);
}

TEST(ModelIo, RoundTripsExamples) {
  const std::vector<SectionModel> models = {
      build_example("ex41", {{"e", Rational(3)}}),
      build_example("ex42", {{"beta", Rational(2, 5)}, {"c", Rational(3)}}),
      build_example("ex43", {{"c", Rational(2)},
                             {"cp", Rational(-1, 3)},
                             {"gamma", Rational(5, 7)}}),
      build_example("ex44", {{"gamma1", Rational(1)},
                             {"gamma2", Rational(1, 2)},
                             {"gamma3", Rational(2)},
                             {"gamma4", Rational(1, 3)},
                             {"c", Rational(4)},
                             {"cp", Rational(-5)}}),
  };
  for (const SectionModel &model : models) {
    const SectionModel back = parse_model_text(write_model(model));
    EXPECT_EQ(back.lattice, model.lattice);
    EXPECT_EQ(back.generators, model.generators);
    // serialization is canonical: writing again is byte-identical
    EXPECT_EQ(write_model(back), write_model(model));
  }
}

TEST(ModelIo, ParsesExplicitFile) {
  const std::string text = "# three-dimensional model\n"
                           "rank 3\n"
                           "alpha 1 2/5\n"
                           "alpha 2 2/5\n"
                           "alpha 3 7/5\n"
                           "t 1 1 1 2/5\n"
                           "t 1 3 0 1\n"
                           "tzero 2\n"
                           "\n"
                           "gen 1 1 0 1\n"
                           "gen 2 2 0 1\n"
                           "gen 3 3 0 1\n"
                           "gen 3 2 1 -3\n";
  const SectionModel model = parse_model_text(text);
  ASSERT_EQ(model.lattice.rank(), 3u);
  EXPECT_EQ(model.lattice.alpha(2), Rational(7, 5));
  // label 2 has a declared empty action: t v_2 = 0
  EXPECT_TRUE(model.lattice.t_terms(1).empty());
  EXPECT_TRUE(
      t_apply(model.lattice, LatticeElement::basis(1)).is_zero());
  // label 3 has no t lines at all: semisimple default
  ASSERT_EQ(model.lattice.t_terms(2).size(), 1u);
  EXPECT_EQ(model.lattice.t_terms(2)[0].coeff, Rational(7, 5));
  ASSERT_EQ(model.generators.size(), 3u);
  EXPECT_EQ(model.generators[2].terms().at({1, 1}), Rational(-3));
}

TEST(ModelIo, RejectsMalformedInput) {
  const auto expect_parse_error = [](const std::string &text,
                                     const std::string &needle) {
    try {
      parse_model_text(text);
      FAIL() << "expected ParseError for: " << text;
    } catch (const ParseError &e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos)
          << e.what();
    }
  };

  expect_parse_error("alpha 1 1/2\n", "rank");
  expect_parse_error("rank 0\n", "line 1");
  expect_parse_error("rank 2\nrank 2\n", "line 2");
  expect_parse_error("rank 1\nalpha 1 1\nalpha 1 2\ngen 1 1 0 1\n",
                     "duplicate");
  expect_parse_error("rank 1\nalpha 1 1\ngen 1 1 0 1/0\n", "line 3");
  expect_parse_error("rank 1\nalpha 1 1\ngen 1 2 0 1\n", "out of range");
  expect_parse_error("rank 1\nalpha 1 1\nfrob 1\ngen 1 1 0 1\n",
                     "unknown directive");
  expect_parse_error("rank 2\nalpha 1 1\ngen 1 1 0 1\n", "missing alpha");
  expect_parse_error("rank 1\nalpha 1 1\ngen 2 1 0 1\n", "without gaps");
  expect_parse_error("rank 1\nalpha 1 1\n", "no generators");
  expect_parse_error("rank 1\nalpha 1 1\ngen 1 1 0 1\ngen 1 1 0 -1\n",
                     "zero");
}

} // namespace
} // namespace brieskorn
