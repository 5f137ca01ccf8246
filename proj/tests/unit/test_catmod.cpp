#include <gtest/gtest.h>

#include "plift/hom.hpp"
#include "plift/module.hpp"
#include "plift/witness.hpp"
#include "support/common.hpp"
#include "support/oracles.hpp"

using namespace plift;
using plift::test::fx_lift;
using plift::test::fx_module;
using plift::test::random_matrix;
using plift::test::share;

namespace {

ModulePtr p1() { return fx_module("dual_numbers_p1", "P1"); }
ModulePtr s1() { return fx_module("dual_numbers_p1", "S1"); }
ModulePtr vex() { return fx_module("a3_vex", "V_ex"); }
ModulePtr i12() { return fx_module("a3_vex", "I12"); }
ModulePtr i23() { return fx_module("a3_vex", "I23"); }

// Random module over k on a relation-free quiver.
ModulePtr random_module(const AlgebraPtr& k, const QuiverPtr& q, const std::vector<std::size_t>& ranks, XorShift64Star& rng) {
  std::vector<MatrixK> maps;
  for (const Arrow& a : q->arrows()) maps.push_back(random_matrix(k->field(), ranks[a.target], ranks[a.source], rng));
  return make_module(RepModule::from_k_matrices(k, q, ranks, maps));
}

}  // namespace

TEST(Quiver, RejectsBadInput) {
  const PrimeField f(2);
  EXPECT_THROW(QuiverPresentation(f, {"1"}, {Arrow{"a", 0, 1}}, {}), Error);
  EXPECT_THROW(QuiverPresentation(f, {"1", "2"}, {Arrow{"a", 0, 1}, Arrow{"a", 1, 0}}, {}), Error);
  // a: 1 -> 2 and the empty path at 1 are not parallel.
  EXPECT_THROW(QuiverPresentation(f, {"1", "2"}, {Arrow{"a", 0, 1}},
                                  {Relation{{RelationTerm{f.one(), Path{0, {0}}}, RelationTerm{f.one(), Path{0, {}}}}}}),
               Error);
}

TEST(Quiver, LinearOrder) {
  const PrimeField f(3);
  EXPECT_EQ(linear_order(QuiverPresentation::linear(f, 4)), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_FALSE(linear_order(QuiverPresentation::zigzag(f, {true, false})).has_value());
  EXPECT_FALSE(linear_order(QuiverPresentation::loop_square_zero(f)).has_value());
  // Vertices listed out of order still give the path order.
  const QuiverPresentation q(f, {"c", "a", "b"}, {Arrow{"x", 1, 2}, Arrow{"y", 2, 0}}, {});
  EXPECT_EQ(linear_order(q), (std::vector<std::size_t>{1, 2, 0}));
}

TEST(ValidateModule, Examples) {
  EXPECT_FALSE(validate_module(*p1()).has_value());
  const PrimeField f(3);
  auto k = share(ArtinAlgebra::field_algebra(f));
  auto loop = share(QuiverPresentation::loop_square_zero(f));
  const auto bad = RepModule::from_k_matrices(k, loop, {1}, {MatrixK::identity(f, 1)});
  const auto d = validate_module(bad);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->kind, "RelationViolated");
  XorShift64Star rng(31);
  auto a4 = share(QuiverPresentation::linear(f, 4));
  EXPECT_FALSE(validate_module(*random_module(k, a4, {2, 1, 3, 2}, rng)).has_value());
}

TEST(EvaluatePath, Examples) {
  const auto& q = *p1()->quiver();
  EXPECT_EQ(evaluate_path(*p1(), Path{0, {}}), MatrixR::identity(p1()->algebra(), 1));
  EXPECT_TRUE(evaluate_path(*p1(), q.path_from_labels({"gamma", "gamma"}, std::nullopt)).is_zero());
  const auto ba = evaluate_path(*vex(), vex()->quiver()->path_from_labels({"a2", "a1"}, std::nullopt));
  EXPECT_EQ(ba.rows(), 1u);
  EXPECT_EQ(ba.cols(), 1u);
  EXPECT_TRUE(ba.is_zero());
  EXPECT_THROW(evaluate_path(*vex(), Path{0, {1}}), Error);
}

TEST(DirectSum, Examples) {
  const auto sum = direct_sum(i12(), i23());
  EXPECT_EQ(sum.module->ranks(), (std::vector<std::size_t>{1, 2, 1}));
  // I[1,2] + I[2,3] is V_ex exactly in the block basis.
  EXPECT_EQ(*sum.module, *vex());
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_TRUE(sum.inclusions[i].is_natural());
    EXPECT_TRUE(compose(sum.projections[i], sum.inclusions[i]) == NatTransform::identity(i == 0 ? i12() : i23()));
  }
  auto zero = make_module(RepModule::zero(vex()->algebra(), vex()->quiver()));
  const auto with_zero = direct_sum(vex(), zero);
  EXPECT_TRUE(is_isomorphism(NatTransform(vex(), with_zero.module, with_zero.inclusions[0].components())));
}

TEST(ResidueModule, Examples) {
  EXPECT_EQ(residue_module(*p1()), *s1());
  EXPECT_EQ(residue_module(*fx_module("a3_vex", "V_ex_trivial")), *vex());
  EXPECT_EQ(residue_module(*vex()), *vex());
}

TEST(TrivialLift, Examples) {
  const auto t = trivial_lift(s1(), p1()->algebra());
  EXPECT_EQ(t.lift->ranks(), std::vector<std::size_t>{1});
  EXPECT_TRUE(t.lift->arrow_map(0).is_zero());
  EXPECT_FALSE(validate_lift(t).has_value());
  const auto same = trivial_lift(vex(), vex()->algebra());
  EXPECT_EQ(*same.lift, *vex());
  const auto cubic = fx_module("a3_vex_cubic", "V_ex_trivial");
  for (std::size_t a = 0; a < 2; ++a) {
    EXPECT_EQ(cubic->arrow_map(a).residue(), vex()->arrow_map(a).residue());
    EXPECT_EQ(cubic->arrow_map(a), MatrixR::embed(cubic->algebra(), vex()->arrow_map(a).residue()));
  }
}

TEST(HomBasis, Examples) {
  EXPECT_EQ(hom_dimension(i12(), i23()), 0u);
  EXPECT_EQ(hom_dimension(i23(), i12()), 1u);
  EXPECT_EQ(hom_dimension(p1(), p1()), 2u);
  EXPECT_EQ(hom_dimension(vex(), vex()), 3u);  // k + k + Hom(I23, I12)
}

TEST(HomBasis, MatchesExhaustiveEnumeration) {
  XorShift64Star rng(32);
  std::vector<std::pair<ModulePtr, ModulePtr>> pairs = {
      {p1(), p1()}, {p1(), fx_module("dual_numbers_p1", "T1")}, {fx_module("dual_numbers_p1", "T1"), p1()},
      {i23(), i12()}, {vex(), vex()}, {fx_module("a3_vex", "V_ex_perturbed"), fx_module("a3_vex", "V_ex_trivial")}};
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField f(p);
    auto k = share(ArtinAlgebra::field_algebra(f));
    auto dual = share(ArtinAlgebra::dual_numbers(f));
    auto zig = share(QuiverPresentation::zigzag(f, {true, false}));
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::size_t> r1{rng.below(2) + 0u, 1 + rng.below(2), rng.below(2) + 0u};
      std::vector<std::size_t> r2{rng.below(2) + 0u, 1u, 1u};
      pairs.emplace_back(random_module(k, zig, r1, rng), random_module(k, zig, r2, rng));
      const auto w = trivial_lift(random_module(k, zig, {1, 1, 0}, rng), dual);
      pairs.emplace_back(w.lift, w.lift);
    }
  }
  for (const auto& [m, n] : pairs) {
    const std::size_t unknowns = oracle::unknown_count(*m, *n);
    ASSERT_LE(unknowns, 12u);
    const auto basis = hom_basis(m, n);
    for (const auto& f : basis) EXPECT_TRUE(f.is_natural());
    std::vector<VectorK> cols;
    for (const auto& f : basis) cols.push_back(f.flatten());
    if (!cols.empty()) EXPECT_EQ(rank(MatrixK::from_columns(m->algebra()->field(), unknowns, cols)), basis.size());
    const auto all = oracle::all_homs(m, n);
    EXPECT_EQ(all.size(), oracle::ipow(m->algebra()->field().modulus(), basis.size()));
    for (const auto& f : all) EXPECT_TRUE(coordinates(basis, f).has_value());
  }
}

TEST(HomBasis, DimensionInvariantUnderBasisChange) {
  XorShift64Star rng(33);
  const PrimeField f(3);
  auto k = share(ArtinAlgebra::field_algebra(f));
  auto q = share(QuiverPresentation::zigzag(f, {true, false, true}));
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<std::size_t> ranks{1 + rng.below(2), 1 + rng.below(2), 1 + rng.below(2), 1 + rng.below(2)};
    const auto m = random_module(k, q, ranks, rng);
    std::vector<MatrixK> g, maps;
    for (std::size_t r : ranks) g.push_back(random_invertible(f, r, rng));
    for (std::size_t a = 0; a < q->arrow_count(); ++a) {
      const Arrow& arr = q->arrow(a);
      maps.push_back(g[arr.target] * m->arrow_map(a).residue() * *inverse(g[arr.source]));
    }
    const auto conj = make_module(RepModule::from_k_matrices(k, q, ranks, maps));
    EXPECT_EQ(hom_dimension(m, m), hom_dimension(conj, conj));
    EXPECT_EQ(hom_dimension(m, conj), hom_dimension(m, m));
  }
}

TEST(Compose, Laws) {
  const auto basis = hom_basis(vex(), vex());
  const auto id = NatTransform::identity(vex());
  for (const auto& f : basis) {
    EXPECT_EQ(compose(f, id), f);
    EXPECT_EQ(compose(id, f), f);
    EXPECT_TRUE(scalar_action(vex()->algebra()->zero(), f).is_zero());
    for (const auto& g : basis)
      for (const auto& h : basis) EXPECT_EQ(compose(h, compose(g, f)), compose(compose(h, g), f));
  }
  const auto& r = *p1()->algebra();
  const auto end = hom_basis(p1(), p1());
  const RingElem a = r.from_ints({2, 1}), b = r.from_ints({1, 2});
  for (const auto& f : end) EXPECT_EQ(scalar_action(a, scalar_action(b, f)), scalar_action(r.mul(a, b), f));
}

TEST(Compose, EpsilonActsAsIotaPi) {
  // 0 -> S1 -> P1 -> S1 -> 0 with π the residue and ι the inclusion of εR.
  const auto mu = multiplication_map(p1(), p1()->algebra()->basis(1));
  EXPECT_EQ(mu.component(0).at(0, 0), p1()->algebra()->basis(1));
  EXPECT_TRUE(mu.is_natural());
  EXPECT_EQ(mu, NatTransform(p1(), p1(), {p1()->arrow_map(0)}));
}

TEST(IsIsomorphism, Examples) {
  EXPECT_TRUE(is_isomorphism(NatTransform::identity(vex())));
  const auto h = hom_basis(i23(), i12());
  ASSERT_EQ(h.size(), 1u);
  EXPECT_FALSE(is_isomorphism(h[0]));
  const auto t1 = fx_module("dual_numbers_p1", "T1");
  const auto homs = oracle::all_homs(p1(), t1);
  ASSERT_FALSE(homs.empty());
  for (const auto& f : homs) EXPECT_FALSE(is_isomorphism(f));
}

TEST(ValidateLift, Examples) {
  const auto& w = fx_lift("dual_numbers_p1", "P1_over_S1");
  EXPECT_FALSE(validate_lift(w).has_value());
  EXPECT_FALSE(validate_lift(trivial_lift(vex(), fx_module("a3_vex", "V_ex_trivial")->algebra())).has_value());
  LiftWitness bad = w;
  bad.phi = {MatrixK(PrimeField(3), 1, 1)};
  ASSERT_TRUE(validate_lift(bad).has_value());
  EXPECT_EQ(validate_lift(bad)->kind, "PhiNotInvertible");
  // φ swapping the V_ex middle basis does not commute.
  LiftWitness swap = fx_lift("a3_vex", "V_ex_trivial_over_V_ex");
  swap.phi[1] = MatrixK::from_ints(PrimeField(2), {{0, 1}, {1, 0}});
  EXPECT_EQ(validate_lift(swap)->kind, "PhiNotNatural");
}

TEST(ResidueHom, MatchesEnumerationOfRLinearMaps) {
  // Hom_R(M, V) enumerated as k-linear maps on expanded coordinates that kill m·M.
  for (const auto* name : {"P1_over_S1", "T1_over_S1", "C2_perturbed_over_cycle2"}) {
    const auto& w = fx_lift("dual_numbers_p1", name);
    const auto basis = hom_to_residue_target(w.lift, w.base);
    for (const auto& g : basis) EXPECT_TRUE(g.is_natural());
    const std::size_t r = w.lift->rank(0), v = w.base->rank(0), n = w.lift->algebra()->dim();
    const PrimeField& f = w.lift->algebra()->field();
    const MatrixK eps_action = MatrixR::identity(w.lift->algebra(), r).scaled(w.lift->algebra()->basis(1)).expand();
    std::size_t count = 0;
    oracle::for_each_vector(f, v * r * n, [&](const VectorK& c) {
      const MatrixK g = MatrixK::from_rows(f, r * n, [&] {
        std::vector<VectorK> rows;
        for (std::size_t i = 0; i < v; ++i) rows.emplace_back(c.begin() + i * r * n, c.begin() + (i + 1) * r * n);
        return rows;
      }());
      if (!(g * eps_action).is_zero()) return;
      if (!(g * w.lift->arrow_map(0).expand() == w.base->arrow_map(0).residue() * g)) return;
      ++count;
    });
    EXPECT_EQ(count, oracle::ipow(f.modulus(), basis.size())) << name;
  }
}
