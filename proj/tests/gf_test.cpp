#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "ppclass/error.hpp"
#include "ppclass/gf.hpp"

using namespace ppclass;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ppclass::Error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Field, DefaultModuliAndPrimitives) {
  struct Row {
    std::uint32_t p, n;
    std::vector<std::uint32_t> modulus;
    std::uint32_t primitive;
  };
  const Row rows[] = {
      {3, 2, {1, 0, 1}, 4},   // t^2 + 1, t + 1
      {5, 2, {1, 1, 1}, 7},   // t^2 + t + 1
      {7, 2, {1, 0, 1}, 9},   // t^2 + 1
      {2, 2, {1, 1, 1}, 2},
      {5, 1, {0, 1}, 2},
      {7, 1, {0, 1}, 3},
  };
  for (const auto& r : rows) {
    const Field F = Field::build(r.p, r.n);
    EXPECT_EQ(F.modulus(), r.modulus) << r.p << "^" << r.n;
    EXPECT_EQ(F.primitive().index, r.primitive) << r.p << "^" << r.n;
  }
  EXPECT_EQ(Field::build(3, 2).describe_modulus(), "t^2 + 1");
}

TEST(Field, ModulusMatchesLexSearch) {
  for (auto [p, n] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 3u}, {5u, 2u}, {5u, 3u}, {7u, 2u}, {11u, 2u}}) {
    EXPECT_EQ(Field::build(p, n).modulus(), oracle::smallest_irreducible_small(p, n)) << p << "^" << n;
  }
}

TEST(Field, ArithmeticAgreesWithSchoolbook) {
  for (auto [p, n] : {std::pair{2u, 3u}, {3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 2u}}) {
    const Field F = Field::build(p, n);
    const oracle::Schoolbook S{p, F.modulus()};
    for (std::uint32_t a = 0; a < F.q(); ++a) {
      for (std::uint32_t b = 0; b < F.q(); ++b) {
        const auto da = F.digits(Elem{a}), db = F.digits(Elem{b});
        ASSERT_EQ(F.add(Elem{a}, Elem{b}), F.from_digits(S.add(da, db)));
        ASSERT_EQ(F.mul(Elem{a}, Elem{b}), F.from_digits(S.mul(da, db)));
      }
    }
  }
}

TEST(Field, PrimitiveGeneratesEverything) {
  for (auto [p, n] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {13u, 1u}}) {
    const Field F = Field::build(p, n);
    std::set<std::uint32_t> seen;
    for (std::uint32_t e = 0; e + 1 < F.q(); ++e) seen.insert(F.exp(e).index);
    EXPECT_EQ(seen.size(), F.q() - 1);
    EXPECT_EQ(F.multiplicative_order(F.primitive()), F.q() - 1);
    // smallest index with full order
    for (std::uint32_t c = 1; c < F.primitive().index; ++c) EXPECT_LT(F.multiplicative_order(Elem{c}), F.q() - 1);
  }
}

TEST(Field, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (auto [p, n] : {std::pair{3u, 2u}, {5u, 2u}, {2u, 5u}, {3u, 5u}}) {
    const Field F = Field::build(p, n);
    std::uniform_int_distribution<std::uint32_t> d(0, F.q() - 1);
    for (int i = 0; i < 2000; ++i) {
      const Elem a{d(rng)}, b{d(rng)}, c{d(rng)};
      EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      EXPECT_EQ(F.add(a, F.neg(a)), F.zero());
      EXPECT_EQ(F.sub(F.add(a, b), b), a);
      EXPECT_EQ(F.frobenius(F.add(a, b)), F.add(F.frobenius(a), F.frobenius(b)));
      if (a.index != 0) {
        EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
        EXPECT_EQ(F.pow(a, F.q() - 1), F.one());
      }
    }
  }
}

TEST(Field, PowEdgeCases) {
  const Field F = Field::build(3, 2);
  EXPECT_EQ(F.pow(F.zero(), 0), F.one());
  EXPECT_EQ(F.pow(F.zero(), 5), F.zero());
  EXPECT_EQ(F.pow(Elem{3}, 2), F.from_int(-1));  // t^2 = -1
}

TEST(Field, Errors) {
  EXPECT_EQ(code_of([] { Field::build(4, 1); }), ErrorCode::NonPrime);
  EXPECT_EQ(code_of([] { Field::build(2, 17); }), ErrorCode::CapExceeded);
  EXPECT_EQ(code_of([] { Field::build(3, 2, std::vector<std::uint32_t>{2, 0, 1}); }), ErrorCode::NotIrreducible);
  const Field F = Field::build(3, 2);
  EXPECT_EQ(code_of([&] { F.element(9); }), ErrorCode::InvalidElement);
  EXPECT_EQ(code_of([&] { F.inv(F.zero()); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([&] { roots_of_unity(F, 3); }), ErrorCode::NotADivisor);
}

TEST(Field, ModulusOverride) {
  const Field F = Field::build(3, 2, std::vector<std::uint32_t>{2, 1, 1});  // t^2 + t + 2
  EXPECT_EQ(F.modulus(), (std::vector<std::uint32_t>{2, 1, 1}));
  EXPECT_EQ(F.mul(Elem{3}, Elem{3}), F.from_digits(std::vector<std::uint32_t>{1, 2}));  // t^2 = -t - 2
}

TEST(RootsOfUnity, MatchBruteForce) {
  for (auto [p, n] : {std::pair{3u, 2u}, {5u, 2u}, {7u, 2u}, {3u, 3u}}) {
    const Field F = Field::build(p, n);
    for (std::uint64_t d = 1; d < F.q(); ++d) {
      if ((F.q() - 1) % d != 0) continue;
      std::vector<Elem> brute;
      for (std::uint32_t x = 1; x < F.q(); ++x)
        if (F.pow(Elem{x}, d) == F.one()) brute.push_back(Elem{x});
      EXPECT_EQ(roots_of_unity(F, d), brute) << "d=" << d;
    }
  }
}

TEST(Lines, PartitionAndInvariant) {
  for (auto [p, n] : {std::pair{3u, 2u}, {5u, 2u}, {2u, 3u}, {3u, 3u}}) {
    const Field F = Field::build(p, n);
    const auto lines = line_decomposition(F);
    EXPECT_EQ(lines.size(), line_count(F));
    std::set<std::uint32_t> all;
    for (const auto& line : lines) {
      EXPECT_EQ(line.members.size(), p - 1);
      EXPECT_EQ(F.pow(line.b, line_count(F)), F.one());
      for (const Elem r : line.members) {
        EXPECT_EQ(F.pow(r, p - 1), line.b);
        EXPECT_TRUE(all.insert(r.index).second);
      }
    }
    EXPECT_EQ(all.size(), F.q() - 1);
  }
  EXPECT_EQ(line_count(Field::build(3, 2)), 4u);
}
