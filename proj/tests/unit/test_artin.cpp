#include <gtest/gtest.h>

#include "plift/algebra.hpp"
#include "plift/extension.hpp"
#include "plift/matrix_r.hpp"
#include "plift/witness.hpp"
#include "support/common.hpp"
#include "support/oracles.hpp"

using namespace plift;
using plift::test::random_element;
using plift::test::random_matrix;
using plift::test::share;

namespace {

std::vector<AlgebraPtr> sample_algebras() {
  std::vector<AlgebraPtr> out;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (auto kind : {AlgebraKind::Field, AlgebraKind::DualNumbers, AlgebraKind::Cubic, AlgebraKind::SquareZeroXY})
      out.push_back(make_algebra(kind, f));
    out.push_back(share(ArtinAlgebra::truncated_polynomial(f, 5)));
    out.push_back(share(ArtinAlgebra::square_zero(f, {"x", "y", "z"})));
  }
  return out;
}

ArtinAlgebra from_table(std::uint32_t p, std::vector<std::string> names, const std::vector<std::int64_t>& table) {
  const PrimeField f(p);
  std::vector<FieldElem> t;
  for (auto v : table) t.push_back(f.from_int(v));
  return ArtinAlgebra(f, std::move(names), std::move(t));
}

}  // namespace

TEST(ValidateAlgebra, Examples) {
  EXPECT_FALSE(validate_algebra(ArtinAlgebra::dual_numbers(PrimeField(3))).has_value());
  EXPECT_FALSE(validate_algebra(ArtinAlgebra::field_algebra(PrimeField(7))).has_value());
  // e^2 = 1
  const auto bad = from_table(3, {"1", "e"}, {1, 0, 0, 1, 0, 1, 1, 0});
  const auto d = validate_algebra(bad);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->kind, "MaxIdealNotNilpotent");
}

TEST(ValidateAlgebra, Diagnostics) {
  // 1*e = 0 breaks the unit.
  EXPECT_EQ(validate_algebra(from_table(2, {"1", "e"}, {1, 0, 0, 0, 0, 1, 0, 0}))->kind, "NotUnital");
  // x*y = x, y*x = 0.
  std::vector<std::int64_t> t(27, 0);
  auto set = [&](int i, int j, int l) { t[(i * 3 + j) * 3 + l] = 1; };
  for (int i = 0; i < 3; ++i) set(0, i, i), set(i, 0, i);
  set(1, 2, 1);
  EXPECT_EQ(validate_algebra(from_table(2, {"1", "x", "y"}, t))->kind, "NotCommutative");
  // x*x = 1 + x would leave m: nilpotency fails first.
  std::vector<std::int64_t> u(8, 0);
  u[0] = 1, u[3] = 1, u[5] = 1, u[6] = 1, u[7] = 1;
  EXPECT_TRUE(validate_algebra(from_table(2, {"1", "x"}, u)).has_value());
}

TEST(RingArithmetic, DualNumbers) {
  const auto r = ArtinAlgebra::dual_numbers(PrimeField(5));
  const RingElem one_plus = r.from_ints({1, 1}), one_minus = r.from_ints({1, -1});
  EXPECT_EQ(r.mul(one_plus, one_minus), r.one());
  EXPECT_EQ(r.inverse(one_plus), one_minus);
  EXPECT_FALSE(r.is_unit(r.basis(1)));
  EXPECT_THROW(r.inverse(r.basis(1)), Error);
}

TEST(RingArithmetic, InverseAgreesWithSearch) {
  XorShift64Star rng(21);
  for (const auto& r : sample_algebras()) {
    if (r->dim() > 3 || r->field().modulus() > 3) continue;
    for (int trial = 0; trial < 10; ++trial) {
      const RingElem a = random_element(*r, rng);
      const auto found = oracle::inverse_by_search(*r, a);
      EXPECT_EQ(found.has_value(), r->is_unit(a));
      if (found) EXPECT_EQ(r->inverse(a), *found);
    }
  }
}

TEST(IdealPowerBasis, Examples) {
  const PrimeField f(3);
  const auto dual = ArtinAlgebra::dual_numbers(f);
  EXPECT_EQ(ideal_power_basis(dual, 1), std::vector<RingElem>{dual.basis(1)});
  EXPECT_TRUE(ideal_power_basis(dual, 2).empty());
  const auto cubic = ArtinAlgebra::truncated_polynomial(f, 3);
  EXPECT_EQ(ideal_power_basis(cubic, 2), std::vector<RingElem>{cubic.basis(2)});
  const auto k = ArtinAlgebra::field_algebra(f);
  EXPECT_TRUE(ideal_power_basis(k, 1).empty());
  EXPECT_TRUE(ideal_power_basis(k, 3).empty());
  EXPECT_EQ(nilpotency_index(cubic), 3u);
}

TEST(SmallExtension, Examples) {
  const PrimeField f(3);
  const auto cubic = share(ArtinAlgebra::truncated_polynomial(f, 3));
  const auto e3 = small_extension(cubic);
  EXPECT_EQ(e3.t, cubic->basis(2));
  EXPECT_EQ(e3.target->dim(), 2u);
  EXPECT_EQ(e3.target->structure(), ArtinAlgebra::truncated_polynomial(f, 2).structure());

  const auto dual = share(ArtinAlgebra::dual_numbers(f));
  const auto e2 = small_extension(dual);
  EXPECT_EQ(e2.t, dual->basis(1));
  EXPECT_TRUE(e2.target->is_field());

  const auto xy = share(ArtinAlgebra::square_zero(f, {"x", "y"}));
  const auto exy = small_extension(xy);
  EXPECT_EQ(exy.t, xy->basis(1));
  EXPECT_EQ(exy.target->basis_names(), (std::vector<std::string>{"1", "y"}));
  EXPECT_EQ(exy.target->structure(), ArtinAlgebra::truncated_polynomial(f, 2, "y").structure());

  EXPECT_THROW(small_extension(share(ArtinAlgebra::field_algebra(f))), Error);
}

TEST(ExtensionChain, Lengths) {
  const PrimeField f(2);
  EXPECT_TRUE(extension_chain(share(ArtinAlgebra::field_algebra(f))).empty());
  EXPECT_EQ(extension_chain(share(ArtinAlgebra::dual_numbers(f))).size(), 1u);
  const auto chain = extension_chain(share(ArtinAlgebra::truncated_polynomial(f, 3)));
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_EQ(chain[0].target->length(), 2u);
  EXPECT_EQ(chain[1].target->length(), 1u);
}

TEST(ExtensionChain, SmallExtensionAxiomsHoldExhaustively) {
  for (const auto& r : sample_algebras()) {
    const auto chain = extension_chain(r);
    ASSERT_EQ(chain.size() + 1, r->length());
    MatrixK composed = MatrixK::identity(r->field(), r->dim());
    for (std::size_t s = 0; s < chain.size(); ++s) {
      const SmallExtension& e = chain[s];
      const ArtinAlgebra& src = *e.source;
      const ArtinAlgebra& dst = *e.target;
      EXPECT_FALSE(validate_algebra(dst).has_value());
      EXPECT_EQ(dst.length() + 1, src.length());
      // ker θ = span(t), one-dimensional, killed by m.
      const auto ker = kernel_basis(e.theta);
      ASSERT_EQ(ker.size(), 1u);
      EXPECT_EQ(rank(MatrixK::from_columns(src.field(), src.dim(), {ker[0], e.t.coeffs})), 1u);
      for (std::size_t i = 1; i < src.dim(); ++i) EXPECT_TRUE(src.is_zero(src.mul(src.basis(i), e.t)));
      // θ multiplicative and θ∘section = id.
      for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j)
          EXPECT_EQ(e.apply(src.mul(src.basis(i), src.basis(j))), dst.mul(e.apply(src.basis(i)), e.apply(src.basis(j))));
      for (std::size_t i = 0; i < dst.dim(); ++i) EXPECT_EQ(e.apply(e.lift(dst.basis(i))), dst.basis(i));
      composed = e.theta * composed;
    }
    // The composite of the chain is the residue map.
    MatrixK residue(r->field(), 1, r->dim());
    residue.at(0, 0) = FieldElem{1};
    EXPECT_EQ(composed, residue);
  }
}

TEST(MatrixR, Examples) {
  const auto r = share(ArtinAlgebra::dual_numbers(PrimeField(3)));
  MatrixR a(r, 1, 1);
  a.set(0, 0, r->from_ints({1, 1}));
  ASSERT_TRUE(is_invertible(a));
  EXPECT_EQ(inverse(a).at(0, 0), r->from_ints({1, -1}));
  MatrixR eps(r, 1, 1);
  eps.set(0, 0, r->basis(1));
  EXPECT_FALSE(is_invertible(eps));
  try {
    inverse(eps);
    FAIL() << "expected NotInvertible";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
    EXPECT_NE(std::string(e.what()).find("rank 0"), std::string::npos) << e.what();
  }
  const auto id = MatrixR::identity(r, 3);
  EXPECT_EQ(inverse(id), id);
}

TEST(MatrixR, InvertibilityPathsAgree) {
  XorShift64Star rng(22);
  for (const auto& r : sample_algebras()) {
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t n = 1 + rng.below(3);
      const MatrixR a = random_matrix(r, n, n, rng);
      const bool inv = is_invertible(a);
      EXPECT_EQ(inv, rank(a.residue()) == n);
      if (inv) {
        EXPECT_EQ(a * inverse(a), MatrixR::identity(r, n));
        EXPECT_EQ(inverse(a) * a, MatrixR::identity(r, n));
      }
    }
  }
}

TEST(MatrixR, ExpandContractRoundTrip) {
  XorShift64Star rng(23);
  for (const auto& r : sample_algebras()) {
    const MatrixR a = random_matrix(r, 2, 3, rng), b = random_matrix(r, 3, 2, rng);
    EXPECT_EQ(MatrixR::contract(r, a.expand(), 2, 3), a);
    EXPECT_EQ((a * b).expand(), a.expand() * b.expand());
    EXPECT_EQ((a * b).residue(), a.residue() * b.residue());
  }
}
