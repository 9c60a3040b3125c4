#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "ppclass/eigen.hpp"
#include "ppclass/error.hpp"
#include "ppclass/pp.hpp"

using namespace ppclass;

TEST(Permutation, VerdictAndWitness) {
  const Field F = Field::build(3, 2);
  const PermVerdict sq = is_permutation(F, parse_poly(F, "x^2"));
  EXPECT_FALSE(sq.is_pp);
  ASSERT_TRUE(sq.witness.has_value());
  EXPECT_NE(sq.witness->first, sq.witness->second);
  EXPECT_EQ(evaluate(F, parse_poly(F, "x^2"), sq.witness->first), evaluate(F, parse_poly(F, "x^2"), sq.witness->second));
  const PermVerdict cube = is_permutation(F, parse_poly(F, "x^3"));
  EXPECT_TRUE(cube.is_pp && cube.is_ppr);
  EXPECT_FALSE(cube.witness.has_value());
  const PermVerdict shifted = is_permutation(F, parse_poly(F, "x^3 + 1"));
  EXPECT_TRUE(shifted.is_pp);
  EXPECT_FALSE(shifted.is_ppr);
  EXPECT_FALSE(is_permutation(F, parse_poly(F, "2*x^3")).is_ppr);
}

TEST(Interpolation, MatchesLagrangeOracle) {
  std::mt19937_64 rng(21);
  for (auto [p, n] : {std::pair{3u, 2u}, {5u, 1u}, {2u, 3u}, {5u, 2u}}) {
    const Field F = Field::build(p, n);
    std::uniform_int_distribution<std::uint32_t> d(0, F.q() - 1);
    for (int t = 0; t < 20; ++t) {
      std::vector<Elem> values(F.q());
      for (auto& v : values) v = Elem{d(rng)};
      const Poly f = interpolate(F, values);
      EXPECT_EQ(f.coeffs(), oracle::lagrange(F, values));
      EXPECT_EQ(evaluation_table(F, f), values);
    }
  }
}

TEST(Inverse, ComposesToIdentity) {
  std::mt19937_64 rng(8);
  for (auto [p, n] : {std::pair{3u, 2u}, {5u, 2u}, {7u, 1u}}) {
    const Field F = Field::build(p, n);
    std::vector<Elem> perm(F.q());
    for (int t = 0; t < 20; ++t) {
      for (std::uint32_t i = 0; i < F.q(); ++i) perm[i] = Elem{i};
      std::shuffle(perm.begin(), perm.end(), rng);
      const Poly f = interpolate(F, perm);
      const Poly h = compositional_inverse(F, f);
      EXPECT_EQ(compose(F, f, h), Poly::monomial(1));
      EXPECT_EQ(compose(F, h, f), Poly::monomial(1));
      const Poly r = normalize_to_ppr(F, f);
      EXPECT_TRUE(is_permutation(F, r).is_ppr);
    }
  }
  const Field F = Field::build(3, 2);
  EXPECT_THROW(compositional_inverse(F, parse_poly(F, "x^2")), Error);
}

TEST(Hermite, AgreesWithDirectTestExhaustively) {
  for (std::uint32_t p : {3u, 5u}) {
    const Field F = Field::build(p, 1);
    const std::size_t dim = p - 2;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Coords c(dim);
      std::uint64_t rest = idx;
      for (auto& x : c) {
        x = Elem{static_cast<std::uint32_t>(rest % p)};
        rest /= p;
      }
      const Poly f = from_coords(c);
      EXPECT_EQ(hermite_test(F, f), is_permutation(F, f).is_pp) << format_poly(f);
    }
  }
}

TEST(Hermite, RandomAgreementAndCaps) {
  std::mt19937_64 rng(13);
  const Field F = Field::build(3, 2);
  for (int t = 0; t < 300; ++t) {
    const Poly f = oracle::random_v(F, rng);
    EXPECT_EQ(hermite_test(F, f), is_permutation(F, f).is_pp);
  }
  EXPECT_TRUE(hermite_test(F, parse_poly(F, "x^3")));
  const Field big = Field::build(67, 1);
  EXPECT_THROW(hermite_test(big, Poly::monomial(1)), Error);
  EXPECT_THROW(hermite_test(Field::build(2, 1), Poly::monomial(1)), Error);
}

TEST(Enumeration, FrozenCounts) {
  const Field F9 = Field::build(3, 2);
  EXPECT_EQ(enumerate_pprs(F9, intersection_space(F9, 1)).ppr_count, 6u);
  const EnumReport v2 = enumerate_pprs(F9, intersection_space(F9, 2));
  EXPECT_EQ(v2.searched, 59049u);
  EXPECT_EQ(v2.ppr_count, 54u);  // 48 beyond the 6 linearized ones
  const Field F27 = Field::build(3, 3);
  EXPECT_EQ(enumerate_pprs(F27, intersection_space(F27, 1)).ppr_count, 432u);
}

TEST(Enumeration, ParallelDeterminism) {
  const Field F = Field::build(3, 2);
  const Subspace v2 = intersection_space(F, 2);
  EnumOptions one;
  const EnumReport base = enumerate_pprs(F, v2, one);
  EXPECT_TRUE(base.list_emitted);
  EXPECT_TRUE(std::is_sorted(base.ppr_list.begin(), base.ppr_list.end()));
  for (unsigned w : {2u, 3u, 7u}) {
    EnumOptions many;
    many.workers = w;
    EXPECT_EQ(enumerate_pprs(F, v2, many), base) << w << " workers";
  }
}

TEST(Enumeration, BudgetAndThreshold) {
  const Field F = Field::build(3, 2);
  EnumOptions tight;
  tight.budget = 100;
  try {
    enumerate_pprs(F, intersection_space(F, 2), tight);
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EnumOptions small_list;
  small_list.list_threshold = 10;
  const EnumReport r = enumerate_pprs(F, intersection_space(F, 2), small_list);
  EXPECT_EQ(r.ppr_count, 54u);
  EXPECT_FALSE(r.list_emitted);
  EXPECT_TRUE(r.ppr_list.empty());
}

TEST(Enumeration, EveryListedPolynomialIsAPpr) {
  const Field F = Field::build(3, 2);
  const EnumReport r = enumerate_pprs(F, intersection_space(F, 2));
  for (const auto& c : r.ppr_list) EXPECT_TRUE(is_permutation(F, from_coords(c)).is_ppr);
}

TEST(DegreeDistribution, PrimeFields) {
  const DegreeCensus f5 = degree_distribution(Field::build(5, 1));
  EXPECT_EQ(f5.by_degree, (std::map<unsigned, std::uint64_t>{{1, 1}, {2, 0}, {3, 5}}));
  EXPECT_EQ(f5.total, 6u);
  EXPECT_TRUE(f5.stage_mismatches.empty());
  const DegreeCensus f7 = degree_distribution(Field::build(7, 1));
  EXPECT_EQ(f7.total, 120u);
  EXPECT_TRUE(f7.stage_mismatches.empty());
  EXPECT_THROW(degree_distribution(Field::build(13, 1)), Error);
  EXPECT_THROW(degree_distribution(Field::build(3, 2)), Error);
}

TEST(Enumeration, EveryPermutationIsAnAffineImageOfAPpr) {
  for (std::uint32_t p : {5u, 7u}) {
    const Field F = Field::build(p, 1);
    std::vector<Elem> perm(p);
    for (std::uint32_t i = 0; i < p; ++i) perm[i] = Elem{i};
    std::uint64_t pps = 0, pprs = 0;
    do {
      ++pps;
      pprs += is_permutation(F, interpolate(F, perm)).is_ppr;
    } while (std::next_permutation(perm.begin(), perm.end(),
                                   [](Elem a, Elem b) { return a.index < b.index; }));
    EXPECT_EQ(pps, std::uint64_t{p} * (p - 1) * pprs) << "p=" << p;
    EXPECT_EQ(pprs, degree_distribution(F).total);
  }
}

TEST(Enumeration, CountsIgnoreTheModulus) {
  const Field a = Field::build(3, 2);
  const Field b = Field::build(3, 2, std::vector<std::uint32_t>{2, 1, 1});
  const Field c = Field::build(5, 2, std::vector<std::uint32_t>{2, 1, 1});
  for (unsigned k = 1; k <= 3; ++k) {
    EXPECT_EQ(intersection_space(a, k).dim(), intersection_space(b, k).dim());
    EXPECT_EQ(kernel_power(b, b.primitive(), k).dim(), k < 3 ? 3u * k : 7u);
  }
  EXPECT_EQ(enumerate_pprs(b, intersection_space(b, 1)).ppr_count, 6u);
  EXPECT_EQ(enumerate_pprs(b, intersection_space(b, 2)).ppr_count, 54u);
  std::vector<std::size_t> dims;
  for (unsigned k = 1; k <= 5; ++k) dims.push_back(intersection_space(c, k).dim());
  EXPECT_EQ(dims, (std::vector<std::size_t>{2, 5, 10, 17, 23}));
}
