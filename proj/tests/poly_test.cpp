#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ppclass/error.hpp"
#include "ppclass/poly.hpp"

using namespace ppclass;

namespace {

Poly P(const Field& F, std::string_view text) { return parse_poly(F, text); }

}  // namespace

TEST(Poly, ReductionFoldsExponents) {
  const Field F = Field::build(3, 2);
  EXPECT_EQ(P(F, "x^9"), P(F, "x"));
  EXPECT_EQ(P(F, "x^17"), P(F, "x^1"));
  EXPECT_EQ(P(F, "x^16"), P(F, "x^8"));
  EXPECT_EQ(pow(F, P(F, "x"), 9), P(F, "x"));
  EXPECT_EQ(P(F, "x^0"), P(F, "1"));
}

TEST(Poly, ProductsEvaluatePointwise) {
  std::mt19937_64 rng(11);
  for (auto [p, n] : {std::pair{3u, 2u}, {5u, 2u}, {2u, 3u}}) {
    const Field F = Field::build(p, n);
    for (int i = 0; i < 50; ++i) {
      const Poly a = oracle::random_v(F, rng), b = oracle::random_v(F, rng);
      const Poly ab = mul(F, a, b), comp = compose(F, a, b), cube = pow(F, a, 3);
      ASSERT_LE(ab.coeffs().size(), F.q());
      for (std::uint32_t x = 0; x < F.q(); ++x) {
        const Elem ax = oracle::horner(F, a.coeffs(), Elem{x});
        const Elem bx = oracle::horner(F, b.coeffs(), Elem{x});
        ASSERT_EQ(evaluate(F, ab, Elem{x}), F.mul(ax, bx));
        ASSERT_EQ(evaluate(F, comp, Elem{x}), oracle::horner(F, a.coeffs(), bx));
        ASSERT_EQ(evaluate(F, cube, Elem{x}), F.pow(ax, 3));
        ASSERT_EQ(evaluate(F, add(F, a, b), Elem{x}), F.add(ax, bx));
      }
    }
  }
}

TEST(Poly, FormatAndParse) {
  const Field F = Field::build(3, 2);
  EXPECT_EQ(format_poly(Poly{}), "0");
  EXPECT_EQ(format_poly(P(F, "x^3 + 2*x")), "1*x^3 + 2*x^1");
  EXPECT_EQ(format_poly(P(F, "5 + x + 3*x^2")), "3*x^2 + 1*x^1 + 5*x^0");
  EXPECT_EQ(P(F, "x + x"), P(F, "2*x"));
  for (auto bad : {"", "x^", "9*x", "x^-1", "2*y", "x + + x"}) {
    EXPECT_THROW(P(F, bad), Error) << bad;
  }
}

TEST(Poly, FormatParseRoundTrip) {
  std::mt19937_64 rng(3);
  for (auto [p, n] : {std::pair{3u, 2u}, {5u, 2u}, {7u, 1u}}) {
    const Field F = Field::build(p, n);
    for (int i = 0; i < 200; ++i) {
      const Poly f = oracle::random_v(F, rng);
      EXPECT_EQ(P(F, format_poly(f)), f);
    }
  }
}

TEST(Poly, Coordinates) {
  const Field F = Field::build(3, 2);
  EXPECT_EQ(v_dimension(F), 7u);
  const Poly f = P(F, "x^3 + 1*x");
  const Coords c = to_coords(F, f);
  ASSERT_EQ(c.size(), 7u);
  EXPECT_EQ(c[0], Elem{1});
  EXPECT_EQ(c[2], Elem{1});
  EXPECT_EQ(from_coords(c), f);
  EXPECT_FALSE(in_v(F, P(F, "x^8")));
  EXPECT_FALSE(in_v(F, P(F, "x + 1")));
  EXPECT_THROW(to_coords(F, P(F, "x^8")), Error);
}

TEST(Linearized, MatrixRoundTripAndInvertibleCount) {
  const Field F = Field::build(3, 2);
  int invertible = 0;
  for (std::uint32_t a = 0; a < 9; ++a) {
    for (std::uint32_t b = 0; b < 9; ++b) {
      const LinearizedPoly l{{Elem{a}, Elem{b}}};
      const PrimeMatrix m = linearized_to_matrix(F, l);
      EXPECT_EQ(matrix_to_linearized(F, m).d, l.d);
      const Poly f = to_poly(F, l);
      ASSERT_TRUE(as_linearized(F, f).has_value());
      invertible += determinant_mod_p(m, 3) != 0;
    }
  }
  EXPECT_EQ(invertible, 48);  // |GL_2(F_3)|
  EXPECT_FALSE(as_linearized(F, P(F, "x^2")).has_value());
}

TEST(Blocks, BuildAndValidate) {
  const Field F = Field::build(5, 2);
  const Elem b = roots_of_unity(F, 6)[1];
  const Poly g = build_gmb_hmd(F, 3, b, BlockKind::G);
  EXPECT_EQ(g.degree(), 15u);
  const Elem d = h_parameter(F, 3, b);
  EXPECT_EQ(d, F.neg(F.pow(b, 15)));
  EXPECT_EQ(build_gmb_hmd(F, 3, b, BlockKind::H), build_gmb_hmd(F, 3, d, BlockKind::G));
  EXPECT_THROW(build_gmb_hmd(F, 1, b, BlockKind::G), Error);
  EXPECT_THROW(build_gmb_hmd(F, 5, b, BlockKind::G), Error);
  EXPECT_THROW(build_gmb_hmd(F, 2, F.primitive(), BlockKind::G), Error);
}
