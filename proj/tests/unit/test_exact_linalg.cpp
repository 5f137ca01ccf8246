#include <gtest/gtest.h>

#include <algorithm>

#include "plift/linalg.hpp"
#include "plift/poly.hpp"
#include "plift/random.hpp"
#include "support/common.hpp"
#include "support/oracles.hpp"

using namespace plift;
using plift::test::random_matrix;

namespace {

VectorK vec(const PrimeField& f, std::initializer_list<std::int64_t> xs) {
  VectorK v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

}  // namespace

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(PrimeField(4), Error);
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(2147483647u));
}

TEST(PrimeField, Arithmetic) {
  const PrimeField f(5);
  EXPECT_EQ(f.from_int(-1).value, 4u);
  EXPECT_EQ(f.inv(FieldElem{2}).value, 3u);
  EXPECT_EQ(f.mul(FieldElem{4}, FieldElem{4}).value, 1u);
  EXPECT_EQ(f.pow(FieldElem{2}, 4).value, 1u);
  EXPECT_THROW(f.inv(FieldElem{0}), Error);
  for (std::uint32_t a = 1; a < 5; ++a) EXPECT_EQ(f.mul(FieldElem{a}, f.inv(FieldElem{a})), f.one());
}

TEST(Rref, AlreadyEchelon) {
  const PrimeField f(2);
  const auto r = rref(MatrixK::from_ints(f, {{1, 1}, {0, 0}}));
  EXPECT_EQ(r.reduced, MatrixK::from_ints(f, {{1, 1}, {0, 0}}));
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
  EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, Identity) {
  const PrimeField f(5);
  const auto r = rref(MatrixK::identity(f, 3));
  EXPECT_TRUE(r.reduced.is_identity());
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(r.rank, 3u);
}

TEST(Rref, ScalesByInverse) {
  const PrimeField f(5);
  const auto r = rref(MatrixK::from_ints(f, {{2, 4}, {1, 2}}));
  EXPECT_EQ(r.reduced, MatrixK::from_ints(f, {{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
  EXPECT_EQ(r.rank, 1u);
}

TEST(KernelBasis, Examples) {
  const PrimeField f2(2), f3(3), f5(5);
  EXPECT_EQ(kernel_basis(MatrixK::from_ints(f2, {{1, 1}})), std::vector<VectorK>{vec(f2, {1, 1})});
  EXPECT_TRUE(kernel_basis(MatrixK::from_ints(f3, {{1, 1}, {0, 2}})).empty());
  EXPECT_EQ(kernel_basis(MatrixK::from_ints(f5, {{1, 2, 0}})),
            (std::vector<VectorK>{vec(f5, {3, 1, 0}), vec(f5, {0, 0, 1})}));
}

TEST(Solve, Examples) {
  const PrimeField f2(2);
  const VectorK b = vec(f2, {1, 0, 1});
  EXPECT_EQ(solve(MatrixK::identity(f2, 3), b), b);
  EXPECT_EQ(solve(MatrixK::from_ints(f2, {{1, 1}}), vec(f2, {1})), vec(f2, {1, 0}));
  EXPECT_FALSE(solve(MatrixK::from_ints(f2, {{0}}), vec(f2, {1})).has_value());
}

TEST(MinimalPolynomial, Examples) {
  const PrimeField f5(5);
  EXPECT_EQ(minimal_polynomial(MatrixK::identity(f5, 3)), PolyK::from_ints(f5, {-1, 1}));
  EXPECT_EQ(minimal_polynomial(MatrixK::from_ints(f5, {{0, 1}, {0, 0}})), PolyK::from_ints(f5, {0, 0, 1}));
  EXPECT_EQ(minimal_polynomial(MatrixK::from_ints(f5, {{1, 0}, {0, 2}})), PolyK::from_ints(f5, {2, 2, 1}));
}

TEST(FactorPoly, Examples) {
  const PrimeField f3(3);
  EXPECT_EQ(factor_poly(PolyK::from_ints(f3, {-1, 0, 1})),
            (std::vector<Factor>{{PolyK::from_ints(f3, {1, 1}), 1}, {PolyK::from_ints(f3, {2, 1}), 1}}));
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField f(p);
    EXPECT_EQ(factor_poly(PolyK::monomial(f, 2)), (std::vector<Factor>{{PolyK::monomial(f, 1), 2}}));
  }
  EXPECT_EQ(factor_poly(PolyK::from_ints(f3, {1, 0, 1})), (std::vector<Factor>{{PolyK::from_ints(f3, {1, 0, 1}), 1}}));
}

TEST(Poly, ExtendedGcd) {
  const PrimeField f(7);
  const PolyK a = PolyK::from_ints(f, {1, 2, 1});  // (x+1)^2
  const PolyK b = PolyK::from_ints(f, {2, 3, 1});  // (x+1)(x+2)
  const auto e = extended_gcd(a, b);
  EXPECT_EQ(e.g, PolyK::from_ints(f, {1, 1}));
  EXPECT_EQ(e.s * a + e.t * b, e.g);
}

TEST(KernelProperty, RandomMatricesAgainstEnumeration) {
  XorShift64Star rng(11);
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(5);
      const MatrixK a = random_matrix(f, rows, cols, rng);
      const auto ker = kernel_basis(a);
      const auto r = rank(a);
      ASSERT_EQ(ker.size(), cols - r);
      for (const auto& v : ker) {
        const VectorK image = a.apply(v);
        EXPECT_TRUE(std::all_of(image.begin(), image.end(), [](FieldElem c) { return c.value == 0; }));
      }
      EXPECT_EQ(oracle::kernel_size(a), oracle::ipow(p, ker.size()));
    }
  }
}

TEST(SolveProperty, SolutionsSatisfyTheSystem) {
  XorShift64Star rng(12);
  const PrimeField f(5);
  for (int trial = 0; trial < 100; ++trial) {
    const MatrixK a = random_matrix(f, 1 + rng.below(4), 1 + rng.below(4), rng);
    VectorK b(a.rows());
    for (auto& c : b) c = rng.element(f);
    const auto x = solve(a, b);
    // Consistent iff appending b keeps the rank.
    MatrixK aug = hstack(a, MatrixK::from_columns(f, a.rows(), {b}));
    EXPECT_EQ(x.has_value(), rank(aug) == rank(a));
    if (x) EXPECT_EQ(a.apply(*x), b);
  }
}

TEST(MinimalPolynomialProperty, AnnihilatesAndIsMinimal) {
  XorShift64Star rng(13);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng.below(5);
      MatrixK a = random_matrix(f, n, n, rng);
      if (trial % 3 == 0) a = a * a * a;  // bias towards repeated factors
      const PolyK m = minimal_polynomial(a);
      ASSERT_TRUE(m.is_monic());
      EXPECT_TRUE(evaluate(m, a).is_zero());
      const auto factors = factor_poly(m);
      EXPECT_EQ(product(factors, f), m);
      for (const auto& fac : factors) {
        EXPECT_TRUE(oracle::is_irreducible(fac.base)) << fac.base.to_string();
        EXPECT_FALSE(evaluate(m / fac.base, a).is_zero());
      }
    }
  }
}

TEST(FactorProperty, ProductsOfIrreduciblesRoundTrip) {
  XorShift64Star rng(14);
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      PolyK g = PolyK::constant(f, f.one());
      const int deg = 1 + static_cast<int>(rng.below(7));
      for (int i = 0; i < deg; ++i) g = g * PolyK(f, {rng.element(f), f.one()});
      if (rng.below(2)) g = g * PolyK::from_ints(f, {1, 1, 1});
      const auto factors = factor_poly(g);
      EXPECT_EQ(product(factors, f), g);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        EXPECT_TRUE(oracle::is_irreducible(factors[i].base));
        for (std::size_t j = 0; j < i; ++j) EXPECT_NE(factors[i].base, factors[j].base);
      }
    }
  }
}

TEST(Inverse, MatchesIdentity) {
  XorShift64Star rng(15);
  const PrimeField f(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    const MatrixK a = random_matrix(f, n, n, rng);
    const auto inv = inverse(a);
    EXPECT_EQ(inv.has_value(), rank(a) == n);
    if (inv) EXPECT_TRUE((a * *inv).is_identity());
  }
}

TEST(SolveLeft, RowSpace) {
  const PrimeField f(5);
  const MatrixK a = MatrixK::from_ints(f, {{1, 2}, {3, 4}});
  const MatrixK x = MatrixK::from_ints(f, {{2, 1}});
  const auto got = solve_left(a, x * a);
  ASSERT_TRUE(got.has_value());
  EXPECT_EQ(*got * a, x * a);
}

TEST(Determinism, RepeatedRunsAgree) {
  XorShift64Star a(99), b(99);
  const PrimeField f(7);
  const MatrixK m1 = random_matrix(f, 4, 4, a), m2 = random_matrix(f, 4, 4, b);
  EXPECT_EQ(rref(m1).reduced, rref(m2).reduced);
  EXPECT_EQ(minimal_polynomial(m1), minimal_polynomial(m2));
}
