#include "plift/witness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "plift/hom.hpp"
#include "plift/lemmas.hpp"
#include "plift/theorem.hpp"

namespace plift {

ModulePtr interval_module(const AlgebraPtr& k, const QuiverPtr& quiver, std::size_t birth, std::size_t death) {
  const std::size_t n = quiver->vertex_count();
  if (birth < 1 || birth > death || death > n) throw Error(ErrorKind::InvalidArgument, "interval out of range");
  std::vector<std::size_t> ranks(n, 0);
  for (std::size_t x = birth - 1; x < death; ++x) ranks[x] = 1;
  std::vector<MatrixK> maps;
  for (const Arrow& a : quiver->arrows()) {
    MatrixK m(k->field(), ranks[a.target], ranks[a.source]);
    if (ranks[a.target] && ranks[a.source]) m.at(0, 0) = FieldElem{1};
    maps.push_back(std::move(m));
  }
  return make_module(RepModule::from_k_matrices(k, quiver, ranks, maps));
}

MatrixK random_invertible(const PrimeField& field, std::size_t n, XorShift64Star& rng) {
  for (;;) {
    MatrixK m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.element(field);
    if (rank(m) == n) return m;
  }
}

namespace {

RingElem random_radical(const ArtinAlgebra& r, XorShift64Star& rng) {
  RingElem e = r.zero();
  for (std::size_t l = 1; l < r.dim(); ++l) e.coeffs[l] = rng.element(r.field());
  return e;
}

}  // namespace

MatrixR random_invertible(const AlgebraPtr& algebra, std::size_t n, XorShift64Star& rng) {
  MatrixR m = MatrixR::embed(algebra, random_invertible(algebra->field(), n, rng));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, algebra->add(m.at(i, j), random_radical(*algebra, rng)));
  return m;
}

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Field: return "k";
    case AlgebraKind::DualNumbers: return "k[eps]/(eps^2)";
    case AlgebraKind::Cubic: return "k[e]/(e^3)";
    case AlgebraKind::SquareZeroXY: return "k[x,y]/(x^2,xy,y^2)";
  }
  return "?";
}

AlgebraPtr make_algebra(AlgebraKind kind, const PrimeField& field) {
  switch (kind) {
    case AlgebraKind::Field: return std::make_shared<const ArtinAlgebra>(ArtinAlgebra::field_algebra(field));
    case AlgebraKind::DualNumbers: return std::make_shared<const ArtinAlgebra>(ArtinAlgebra::dual_numbers(field));
    case AlgebraKind::Cubic: return std::make_shared<const ArtinAlgebra>(ArtinAlgebra::truncated_polynomial(field, 3));
    case AlgebraKind::SquareZeroXY:
      return std::make_shared<const ArtinAlgebra>(ArtinAlgebra::square_zero(field, {"x", "y"}));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown algebra kind");
}

WitnessInstance random_witness(std::uint64_t seed, std::size_t index, const WitnessOptions& options) {
  const std::uint64_t instance_seed = mix_seed(seed, index);
  XorShift64Star rng(instance_seed);
  const PrimeField field(options.primes[rng.below(static_cast<std::uint32_t>(options.primes.size()))]);
  const AlgebraKind kind = options.algebras[rng.below(static_cast<std::uint32_t>(options.algebras.size()))];
  const std::size_t n = 1 + rng.below(static_cast<std::uint32_t>(options.max_vertices));
  std::vector<bool> forward;
  for (std::size_t i = 0; i + 1 < n; ++i) forward.push_back(rng.below(2) == 1);
  auto quiver = std::make_shared<const QuiverPresentation>(QuiverPresentation::zigzag(field, forward));
  auto k = std::make_shared<const ArtinAlgebra>(ArtinAlgebra::field_algebra(field));
  auto algebra = make_algebra(kind, field);

  const std::size_t count = 1 + rng.below(static_cast<std::uint32_t>(options.max_intervals));
  std::vector<ModulePtr> intervals;
  std::string description = "p=" + std::to_string(field.modulus()) + " R=" + to_string(kind) + " A" +
                            std::to_string(n) + " ";
  for (std::size_t x = 0; x + 1 < n; ++x) description += forward[x] ? '>' : '<';
  description += " V=";
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t b = 1 + rng.below(static_cast<std::uint32_t>(n));
    const std::size_t d = b + rng.below(static_cast<std::uint32_t>(n - b + 1));
    intervals.push_back(interval_module(k, quiver, b, d));
    description += (i ? "+" : "") + std::string("I[") + std::to_string(b) + "," + std::to_string(d) + "]";
  }
  const ModulePtr sum = direct_sum(intervals).module;

  // Base in a random basis: V(a) -> Q_t V(a) Q_s^{-1}.
  std::vector<MatrixK> q, q_inv;
  for (std::size_t x = 0; x < n; ++x) {
    q.push_back(random_invertible(field, sum->rank(x), rng));
    q_inv.push_back(*inverse(q.back()));
  }
  std::vector<MatrixK> base_maps;
  for (std::size_t a = 0; a < quiver->arrow_count(); ++a) {
    const Arrow& arr = quiver->arrow(a);
    base_maps.push_back(q[arr.target] * sum->arrow_map(a).residue() * q_inv[arr.source]);
  }
  auto base = make_module(RepModule::from_k_matrices(k, quiver, sum->ranks(), base_maps));

  // Lift: perturb by m-valued entries (A_n has no relations), then change basis over R.
  std::vector<MatrixR> perturbed;
  for (std::size_t a = 0; a < quiver->arrow_count(); ++a) {
    MatrixR m = MatrixR::embed(algebra, base_maps[a]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, algebra->add(m.at(i, j), random_radical(*algebra, rng)));
    perturbed.push_back(std::move(m));
  }
  std::vector<MatrixR> p, p_inv;
  std::vector<MatrixK> phi;
  for (std::size_t x = 0; x < n; ++x) {
    p.push_back(random_invertible(algebra, sum->rank(x), rng));
    p_inv.push_back(inverse(p.back()));
    phi.push_back(*inverse(p.back().residue()));
  }
  std::vector<MatrixR> lift_maps;
  for (std::size_t a = 0; a < quiver->arrow_count(); ++a) {
    const Arrow& arr = quiver->arrow(a);
    lift_maps.push_back(p[arr.target] * perturbed[a] * p_inv[arr.source]);
  }
  auto lift = make_module(algebra, quiver, sum->ranks(), std::move(lift_maps));
  return WitnessInstance{index, instance_seed, description, LiftWitness{lift, base, std::move(phi)}};
}

void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < jobs; ++t)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  for (auto& w : workers) w.join();
}

bool check_lemma21(const LiftWitness& w, std::string* detail) {
  auto fail = [&](const std::string& why) {
    if (detail) *detail = why;
    return false;
  };
  const auto end_v = hom_basis(w.base, w.base);
  const auto hom_mv = hom_to_residue_target(w.lift, w.base);
  if (end_v.size() != hom_mv.size()) {
    return fail("dim Hom_R(M,V) = " + std::to_string(hom_mv.size()) + " but dim End_k(V) = " +
                std::to_string(end_v.size()));
  }
  for (std::size_t i = 0; i < end_v.size(); ++i)
    if (!(lemma21_psi(lemma21_phi(end_v[i], w), w) == end_v[i])) return fail("Ψ∘Φ differs at basis element " + std::to_string(i));
  for (std::size_t i = 0; i < hom_mv.size(); ++i)
    if (!(lemma21_phi(lemma21_psi(hom_mv[i], w), w) == hom_mv[i])) return fail("Φ∘Ψ differs at basis element " + std::to_string(i));
  return true;
}

bool check_express_as_scalar(const LiftWitness& w, std::string* detail) {
  auto fail = [&](const std::string& why) {
    if (detail) *detail = why;
    return false;
  };
  const auto end_m = hom_basis(w.lift, w.lift);
  const std::size_t length = w.lift->algebra()->length();
  if (end_m.size() != length) {
    return fail("dim End_R(M) = " + std::to_string(end_m.size()) + " but ℓ(R) = " + std::to_string(length));
  }
  for (std::size_t i = 0; i < end_m.size(); ++i) {
    const RingElem r = express_as_scalar(end_m[i], w);
    if (!(multiplication_map(w.lift, r) == end_m[i])) return fail("μ_r differs from End basis element " + std::to_string(i));
  }
  return true;
}

std::vector<InstanceOutcome> run_battery(const BatteryOptions& options) {
  std::vector<InstanceOutcome> out(options.count);
  parallel_for(options.count, options.jobs, [&](std::size_t i) {
    InstanceOutcome& o = out[i];
    o.index = i;
    try {
      const WitnessInstance inst = random_witness(options.seed, i, options.witness);
      o.description = inst.description;
      const LiftWitness& w = inst.witness;
      std::string why;
      o.lemma_ok = check_lemma21(w, &why);
      if (hom_dimension(w.base, w.base) == 1) o.scalar_ok = check_express_as_scalar(w, &why);
      const DecompositionReport report = verify_theorem(w, inst.seed);
      o.theorem = report.verdict;
      o.summands = report.summands.size();
      if (report.verdict != Verdict::Pass) why = report.reason;
      const auto first = decompose(w.lift, 1);
      const auto second = decompose(w.lift, 2);
      o.krull_schmidt_ok = same_isomorphism_classes(first.summands, second.summands, inst.seed);
      if (!o.krull_schmidt_ok) why = "seeds 1 and 2 give different summand classes";
      o.detail = why;
    } catch (const std::exception& e) {
      o.detail = e.what();
    }
  });
  return out;
}

}  // namespace plift
