// Sanity checks for the brute-force references themselves.

#include <gtest/gtest.h>

#include "plift/witness.hpp"
#include "support/common.hpp"
#include "support/oracles.hpp"

using namespace plift;
using plift::test::share;

TEST(Oracle, EnumerationCountsVectors) {
  std::size_t n = 0;
  oracle::for_each_vector(PrimeField(3), 3, [&](const VectorK&) { ++n; });
  EXPECT_EQ(n, 27u);
  n = 0;
  oracle::for_each_vector(PrimeField(2), 0, [&](const VectorK&) { ++n; });
  EXPECT_EQ(n, 1u);
}

TEST(Oracle, KernelSize) {
  const PrimeField f(3);
  EXPECT_EQ(oracle::kernel_size(MatrixK::from_ints(f, {{1, 1, 0}})), 9u);
  EXPECT_EQ(oracle::kernel_size(MatrixK::identity(f, 3)), 1u);
}

TEST(Oracle, Irreducibility) {
  const PrimeField f2(2), f3(3);
  EXPECT_TRUE(oracle::is_irreducible(PolyK::from_ints(f2, {1, 1, 1})));
  EXPECT_FALSE(oracle::is_irreducible(PolyK::from_ints(f2, {1, 0, 1})));  // (x+1)^2
  EXPECT_TRUE(oracle::is_irreducible(PolyK::from_ints(f3, {1, 0, 1})));
  EXPECT_FALSE(oracle::is_irreducible(PolyK::from_ints(f3, {2, 0, 1})));  // x^2 - 1
  EXPECT_TRUE(oracle::is_irreducible(PolyK::from_ints(f2, {1, 1, 0, 0, 1})));      // x^4 + x + 1
  EXPECT_FALSE(oracle::is_irreducible(PolyK::from_ints(f2, {1, 0, 1, 0, 1})));     // (x^2 + x + 1)^2
}

TEST(Oracle, IdempotentFamilies) {
  const PrimeField f(2);
  auto k = share(ArtinAlgebra::field_algebra(f));
  auto q = share(QuiverPresentation::linear(f, 3));
  const auto i1 = interval_module(k, q, 1, 1), i13 = interval_module(k, q, 1, 3), i23 = interval_module(k, q, 2, 3);
  EXPECT_EQ(oracle::max_orthogonal_idempotents(oracle::all_homs(i13, i13)), 1u);
  const auto sum = direct_sum({i1, i13, i23}).module;
  EXPECT_EQ(oracle::max_orthogonal_idempotents(oracle::all_homs(sum, sum)), 3u);
  const auto twice = direct_sum(i13, i13).module;  // End = M_2(k)
  EXPECT_EQ(oracle::all_homs(twice, twice).size(), 16u);
  EXPECT_EQ(oracle::max_orthogonal_idempotents(oracle::all_homs(twice, twice)), 2u);
}
