#include "plift/lemmas.hpp"

#include <algorithm>

namespace plift {

namespace {

void require_valid(const LiftWitness& w) {
  if (auto d = validate_lift(w)) throw Error(ErrorKind::ValidationError, d->to_string());
}

// The scalar c with f_x = c·I at every vertex of positive rank.
std::optional<FieldElem> read_scalar(const std::vector<MatrixK>& comps) {
  std::optional<FieldElem> c;
  for (const auto& m : comps) {
    if (m.rows() == 0) continue;
    if (!c) c = m.at(0, 0);
    if (!(m == MatrixK::identity(m.field(), m.rows()).scaled(*c))) return std::nullopt;
  }
  if (!c) return FieldElem{};
  return c;
}

RingElem scalar_along_chain(const std::vector<SmallExtension>& chain, std::size_t level, const ModulePtr& module,
                            const std::vector<MatrixR>& f, const LiftWitness& w) {
  const AlgebraPtr& R = module->algebra();
  if (!NatTransform(module, module, f).is_natural()) {
    throw Error(ErrorKind::Internal, "reduced endomorphism is not natural at chain level " + std::to_string(level));
  }

  if (R->is_field()) {
    // φ f φ^{-1} lies in End_k(V) = k, hence f = c·id.
    std::vector<MatrixK> conj;
    for (std::size_t x = 0; x < f.size(); ++x) {
      const auto inv = inverse(w.phi[x]);
      conj.push_back(w.phi[x] * f[x].residue() * *inv);
    }
    const auto c = read_scalar(conj);
    if (!c) throw Error(ErrorKind::NotScalar, "residue endomorphism is not a scalar");
    return R->from_scalar(*c);
  }

  const SmallExtension& ext = chain.at(level);
  std::vector<MatrixR> reduced_maps, reduced_f;
  for (const auto& a : module->arrow_maps()) reduced_maps.push_back(ext.apply(a));
  for (const auto& c : f) reduced_f.push_back(ext.apply(c));
  auto reduced = make_module(ext.target, module->quiver(), module->ranks(), std::move(reduced_maps));

  const RingElem r0 = scalar_along_chain(chain, level + 1, reduced, reduced_f, w);
  const RingElem r = ext.lift(r0);

  // g = f - μ_r vanishes mod tR, so each entry is α·t; collect the α as a k-matrix.
  const PrimeField& field = R->field();
  const auto pivot = static_cast<std::size_t>(
      std::find_if(ext.t.coeffs.begin(), ext.t.coeffs.end(), [](FieldElem c) { return c.value != 0; }) -
      ext.t.coeffs.begin());
  std::vector<MatrixK> quotients;
  for (std::size_t x = 0; x < f.size(); ++x) {
    const MatrixR g = f[x] - MatrixR::identity(R, f[x].rows()).scaled(r);
    MatrixK q(field, g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) {
        const RingElem e = g.at(i, j);
        const FieldElem alpha = field.mul(e.coeffs[pivot], field.inv(ext.t.coeffs[pivot]));
        if (!(R->scale(alpha, ext.t) == e)) {
          throw Error(ErrorKind::NotScalar, "f - μ_r has an entry outside tR at vertex " + std::to_string(x) + ": " +
                                                R->format(e));
        }
        q.at(i, j) = alpha;
      }
    const auto inv = inverse(w.phi[x]);
    quotients.push_back(w.phi[x] * q * *inv);
  }
  const auto lambda = read_scalar(quotients);
  if (!lambda) throw Error(ErrorKind::NotScalar, "(f - μ_r)/t is not a scalar endomorphism of V");
  return R->add(r, R->scale(*lambda, ext.t));
}

}  // namespace

ResidueHom lemma21_phi(const NatTransform& f, const LiftWitness& w) {
  require_valid(w);
  if (!(*f.source() == *w.base) || !(*f.target() == *w.base)) {
    throw Error(ErrorKind::NotEndomorphism, "Φ expects an endomorphism of the base module");
  }
  ResidueHom g{w.lift, w.base, {}};
  for (std::size_t x = 0; x < w.phi.size(); ++x) g.components.push_back(f.component(x).residue() * w.phi[x]);
  if (!g.is_natural()) throw Error(ErrorKind::Internal, "Φ(f) is not natural");
  return g;
}

NatTransform lemma21_psi(const ResidueHom& g, const LiftWitness& w) {
  require_valid(w);
  if (!(*g.source == *w.lift) || !(*g.target == *w.base)) {
    throw Error(ErrorKind::ShapeMismatch, "Ψ expects a map from the lift to the base");
  }
  std::vector<MatrixR> comps;
  for (std::size_t x = 0; x < w.phi.size(); ++x) {
    auto fx = solve_left(w.phi[x], g.components.at(x));
    if (!fx) throw Error(ErrorKind::Internal, "f_x φ_x = g_x has no solution");
    comps.push_back(MatrixR::embed(w.base->algebra(), *fx));
  }
  NatTransform f(w.base, w.base, std::move(comps));
  if (!f.is_natural()) throw Error(ErrorKind::Internal, "Ψ(g) is not natural");
  return f;
}

RingElem express_as_scalar(const NatTransform& f, const LiftWitness& w) {
  require_valid(w);
  if (!(*f.source() == *w.lift) || !(*f.target() == *w.lift)) {
    throw Error(ErrorKind::NotEndomorphism, "express_as_scalar expects an endomorphism of the lift");
  }
  const std::size_t end_dim = hom_basis(w.base, w.base).size();
  if (end_dim != 1) {
    throw Error(ErrorKind::HypothesisViolated, "End_k(V) has dimension " + std::to_string(end_dim) + ", not 1");
  }
  const auto chain = extension_chain(w.lift->algebra());
  return scalar_along_chain(chain, 0, w.lift, f.components(), w);
}

}  // namespace plift
