#include "plift/fixtures.hpp"

namespace plift {

namespace {

struct Builder {
  Instance inst;

  Builder(AlgebraPtr r, QuiverPresentation q) {
    inst.algebra = std::move(r);
    inst.residue_field = std::make_shared<const ArtinAlgebra>(ArtinAlgebra::field_algebra(inst.algebra->field()));
    inst.quiver = std::make_shared<const QuiverPresentation>(std::move(q));
  }

  // maps[a] lists the entries row-major, each entry a coefficient vector.
  ModulePtr module(const std::string& name, bool over_r, std::vector<std::size_t> ranks,
                   const std::vector<std::vector<std::vector<std::int64_t>>>& maps) {
    const AlgebraPtr& r = over_r ? inst.algebra : inst.residue_field;
    std::vector<MatrixR> ms;
    for (std::size_t a = 0; a < inst.quiver->arrow_count(); ++a) {
      const Arrow& arr = inst.quiver->arrow(a);
      MatrixR m(r, ranks[arr.target], ranks[arr.source]);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, r->from_ints(maps[a][i * m.cols() + j]));
      ms.push_back(std::move(m));
    }
    auto mod = make_module(r, inst.quiver, std::move(ranks), std::move(ms));
    inst.modules.emplace(name, mod);
    return mod;
  }

  void trivial(const std::string& name, const std::string& base) {
    LiftWitness w = trivial_lift(inst.modules.at(base), inst.algebra);
    inst.modules.emplace(name, w.lift);
    inst.lifts.emplace(name + "_over_" + base, LiftEntry{name, base, std::move(w)});
  }

  // φ = identity.
  void lift(const std::string& lift, const std::string& base) {
    LiftWitness w{inst.modules.at(lift), inst.modules.at(base), {}};
    for (std::size_t r : w.base->ranks()) w.phi.push_back(MatrixK::identity(inst.algebra->field(), r));
    inst.lifts.emplace(lift + "_over_" + base, LiftEntry{lift, base, std::move(w)});
  }

  Instance done() {
    validate_instance(inst);
    return std::move(inst);
  }
};

AlgebraPtr shared(ArtinAlgebra a) { return std::make_shared<const ArtinAlgebra>(std::move(a)); }

Instance dual_numbers_p1() {
  const PrimeField f(3);
  Builder b(shared(ArtinAlgebra::dual_numbers(f)), QuiverPresentation::loop_square_zero(f));
  b.module("S1", false, {1}, {{{0}}});
  b.module("P1", true, {1}, {{{0, 1}}});
  b.module("cycle2", false, {2}, {{{0}, {1}, {0}, {0}}});
  b.module("C2_perturbed", true, {2}, {{{0, 1}, {1, 0}, {0, 0}, {0, -1}}});
  b.lift("P1", "S1");
  b.trivial("T1", "S1");
  b.trivial("C2", "cycle2");
  b.lift("C2_perturbed", "cycle2");
  return b.done();
}

void vex_modules(Builder& b, const std::vector<std::int64_t>& t) {
  b.module("V_ex", false, {1, 2, 1}, {{{1}, {0}}, {{0}, {1}}});
  b.module("I12", false, {1, 1, 0}, {{{1}}, {}});
  b.module("I23", false, {0, 1, 1}, {{}, {{1}}});
  b.trivial("V_ex_trivial", "V_ex");
  std::vector<std::int64_t> one(t.size(), 0);
  one[0] = 1;
  b.module("V_ex_perturbed", true, {1, 2, 1}, {{one, t}, {t, one}});
  b.lift("V_ex_perturbed", "V_ex");
}

Instance a3_vex() {
  const PrimeField f(2);
  Builder b(shared(ArtinAlgebra::dual_numbers(f)), QuiverPresentation::linear(f, 3));
  vex_modules(b, {0, 1});
  return b.done();
}

Instance a3_vex_cubic() {
  const PrimeField f(2);
  Builder b(shared(ArtinAlgebra::truncated_polynomial(f, 3)), QuiverPresentation::linear(f, 3));
  vex_modules(b, {0, 1, 1});
  return b.done();
}

Instance a5_field() {
  const PrimeField f(3);
  Builder b(shared(ArtinAlgebra::field_algebra(f)), QuiverPresentation::linear(f, 5));
  b.module("W", false, {1, 2, 2, 2, 1},
           {{{1}, {1}}, {{1}, {0}, {1}, {1}}, {{0}, {1}, {0}, {0}}, {{1}, {1}}});
  b.module("I24", false, {0, 1, 1, 1, 0}, {{}, {{1}}, {{1}}, {}});
  b.module("zero", false, {0, 0, 0, 0, 0}, {{}, {}, {}, {}});
  return b.done();
}

Instance xy_a2() {
  const PrimeField f(3);
  Builder b(shared(ArtinAlgebra::square_zero(f, {"x", "y"})), QuiverPresentation::linear(f, 2));
  b.module("V", false, {1, 1}, {{{1}}});
  b.module("L", true, {1, 1}, {{{1, 1, 2}}});
  b.module("V2", false, {1, 2}, {{{1}, {0}}});
  b.module("L2", true, {1, 2}, {{{1, 1, 0}, {0, 0, 1}}});
  b.lift("L", "V");
  b.lift("L2", "V2");
  b.trivial("V2_trivial", "V2");
  return b.done();
}

}  // namespace

std::vector<std::string> fixture_names() { return {"dual_numbers_p1", "a3_vex", "a3_vex_cubic", "a5_field", "xy_a2"}; }

Instance fixture(const std::string& name) {
  if (name == "dual_numbers_p1") return dual_numbers_p1();
  if (name == "a3_vex") return a3_vex();
  if (name == "a3_vex_cubic") return a3_vex_cubic();
  if (name == "a5_field") return a5_field();
  if (name == "xy_a2") return xy_a2();
  throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + name + "'");
}

}  // namespace plift
