#include "plift/module.hpp"

#include <string>

namespace plift {

namespace {

bool same_module(const ModulePtr& a, const ModulePtr& b) { return a == b || *a == *b; }

void debug_check_natural([[maybe_unused]] const NatTransform& f, [[maybe_unused]] const char* op) {
#ifndef NDEBUG
  if (!f.is_natural()) throw Error(ErrorKind::Internal, std::string(op) + " produced a non-natural transform");
#endif
}

}  // namespace

RepModule::RepModule(AlgebraPtr algebra, QuiverPtr quiver, std::vector<std::size_t> ranks,
                     std::vector<MatrixR> arrow_maps)
    : algebra_(std::move(algebra)), quiver_(std::move(quiver)), ranks_(std::move(ranks)), maps_(std::move(arrow_maps)) {
  if (!algebra_ || !quiver_) throw Error(ErrorKind::InvalidArgument, "module needs an algebra and a quiver");
  if (!(algebra_->field() == quiver_->field())) {
    throw Error(ErrorKind::ShapeMismatch, "algebra and quiver relations live over different fields");
  }
  if (ranks_.size() != quiver_->vertex_count()) {
    throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(quiver_->vertex_count()) + " vertex ranks");
  }
  if (maps_.size() != quiver_->arrow_count()) {
    throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(quiver_->arrow_count()) + " arrow matrices");
  }
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Arrow& arr = quiver_->arrow(a);
    const MatrixR& m = maps_[a];
    if (m.rows() != ranks_[arr.target] || m.cols() != ranks_[arr.source] || !(*m.algebra() == *algebra_)) {
      throw Error(ErrorKind::ShapeMismatch, "arrow '" + arr.label + "' needs a " + std::to_string(ranks_[arr.target]) +
                                                "x" + std::to_string(ranks_[arr.source]) + " matrix over R, got " +
                                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
  }
}

RepModule RepModule::zero(AlgebraPtr algebra, QuiverPtr quiver) {
  std::vector<MatrixR> maps;
  for (std::size_t a = 0; a < quiver->arrow_count(); ++a) maps.emplace_back(algebra, 0, 0);
  std::vector<std::size_t> ranks(quiver->vertex_count(), 0);
  return RepModule(std::move(algebra), std::move(quiver), std::move(ranks), std::move(maps));
}

RepModule RepModule::from_k_matrices(AlgebraPtr algebra, QuiverPtr quiver, std::vector<std::size_t> ranks,
                                     const std::vector<MatrixK>& maps) {
  std::vector<MatrixR> lifted;
  for (const auto& m : maps) lifted.push_back(MatrixR::embed(algebra, m));
  return RepModule(std::move(algebra), std::move(quiver), std::move(ranks), std::move(lifted));
}

std::size_t RepModule::total_rank() const noexcept {
  std::size_t s = 0;
  for (std::size_t r : ranks_) s += r;
  return s;
}

bool operator==(const RepModule& a, const RepModule& b) {
  return a.ranks_ == b.ranks_ && *a.algebra_ == *b.algebra_ && *a.quiver_ == *b.quiver_ && a.maps_ == b.maps_;
}

bool same_algebra_and_quiver(const RepModule& a, const RepModule& b) {
  return *a.algebra() == *b.algebra() && *a.quiver() == *b.quiver();
}

MatrixR evaluate_path(const RepModule& m, const Path& path) {
  const QuiverPresentation& q = *m.quiver();
  if (!q.composable(path)) throw Error(ErrorKind::NotComposable, "path arrows do not compose");
  MatrixR acc = MatrixR::identity(m.algebra(), m.rank(path.start));
  for (auto it = path.arrows.rbegin(); it != path.arrows.rend(); ++it) acc = m.arrow_map(*it) * acc;
  return acc;
}

Validation validate_module(const RepModule& m) {
  const QuiverPresentation& q = *m.quiver();
  const ArtinAlgebra& R = *m.algebra();
  for (std::size_t r = 0; r < q.relations().size(); ++r) {
    const Relation& rel = q.relations()[r];
    const Path& first = rel.terms.front().path;
    MatrixR sum(m.algebra(), m.rank(q.path_target(first)), m.rank(first.start));
    for (const auto& term : rel.terms) sum = sum + evaluate_path(m, term.path).scaled(R.from_scalar(term.coeff));
    if (!sum.is_zero()) {
      return Diagnostic{"RelationViolated", "relation " + std::to_string(r) + " evaluates to " + sum.to_string()};
    }
  }
  return std::nullopt;
}

NatTransform::NatTransform(ModulePtr source, ModulePtr target, std::vector<MatrixR> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!source_ || !target_) throw Error(ErrorKind::InvalidArgument, "transform between null modules");
  if (!same_algebra_and_quiver(*source_, *target_)) {
    throw Error(ErrorKind::ShapeMismatch, "transform between modules over different algebras or quivers");
  }
  if (components_.size() != source_->ranks().size()) {
    throw Error(ErrorKind::ShapeMismatch, "one component per vertex expected");
  }
  for (std::size_t x = 0; x < components_.size(); ++x) {
    if (components_[x].rows() != target_->rank(x) || components_[x].cols() != source_->rank(x)) {
      throw Error(ErrorKind::ShapeMismatch, "component at vertex " + std::to_string(x) + " has the wrong shape");
    }
  }
}

NatTransform NatTransform::identity(const ModulePtr& m) {
  std::vector<MatrixR> comps;
  for (std::size_t r : m->ranks()) comps.push_back(MatrixR::identity(m->algebra(), r));
  return NatTransform(m, m, std::move(comps));
}

NatTransform NatTransform::zero(const ModulePtr& source, const ModulePtr& target) {
  std::vector<MatrixR> comps;
  for (std::size_t x = 0; x < source->ranks().size(); ++x)
    comps.emplace_back(source->algebra(), target->rank(x), source->rank(x));
  return NatTransform(source, target, std::move(comps));
}

bool NatTransform::is_endomorphism() const noexcept { return same_module(source_, target_); }

bool NatTransform::is_zero() const noexcept {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

bool NatTransform::is_natural() const {
  const QuiverPresentation& q = *source_->quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (!(components_[arr.target] * source_->arrow_map(a) == target_->arrow_map(a) * components_[arr.source])) {
      return false;
    }
  }
  return true;
}

VectorK NatTransform::flatten() const {
  VectorK out;
  for (const auto& c : components_) out.insert(out.end(), c.coefficients().begin(), c.coefficients().end());
  return out;
}

NatTransform NatTransform::unflatten(const ModulePtr& source, const ModulePtr& target, const VectorK& coords) {
  const std::size_t n = source->algebra()->dim();
  std::vector<MatrixR> comps;
  std::size_t offset = 0;
  for (std::size_t x = 0; x < source->ranks().size(); ++x) {
    const std::size_t count = target->rank(x) * source->rank(x) * n;
    if (offset + count > coords.size()) throw Error(ErrorKind::ShapeMismatch, "too few coordinates for a transform");
    comps.push_back(MatrixR::from_coefficients(
        source->algebra(), target->rank(x), source->rank(x),
        VectorK(coords.begin() + static_cast<std::ptrdiff_t>(offset),
                coords.begin() + static_cast<std::ptrdiff_t>(offset + count))));
    offset += count;
  }
  if (offset != coords.size()) throw Error(ErrorKind::ShapeMismatch, "too many coordinates for a transform");
  return NatTransform(source, target, std::move(comps));
}

bool operator==(const NatTransform& a, const NatTransform& b) {
  return same_module(a.source_, b.source_) && same_module(a.target_, b.target_) && a.components_ == b.components_;
}

NatTransform compose(const NatTransform& g, const NatTransform& f) {
  if (!same_module(f.target(), g.source())) throw Error(ErrorKind::ShapeMismatch, "compose: f's target is not g's source");
  std::vector<MatrixR> comps;
  for (std::size_t x = 0; x < f.components().size(); ++x) comps.push_back(g.component(x) * f.component(x));
  NatTransform out(f.source(), g.target(), std::move(comps));
  debug_check_natural(out, "compose");
  return out;
}

NatTransform scalar_action(const RingElem& r, const NatTransform& f) {
  std::vector<MatrixR> comps;
  for (const auto& c : f.components()) comps.push_back(c.scaled(r));
  NatTransform out(f.source(), f.target(), std::move(comps));
  debug_check_natural(out, "scalar_action");
  return out;
}

NatTransform multiplication_map(const ModulePtr& m, const RingElem& r) {
  return scalar_action(r, NatTransform::identity(m));
}

NatTransform add(const NatTransform& a, const NatTransform& b) {
  if (!same_module(a.source(), b.source()) || !same_module(a.target(), b.target())) {
    throw Error(ErrorKind::ShapeMismatch, "adding transforms with different endpoints");
  }
  std::vector<MatrixR> comps;
  for (std::size_t x = 0; x < a.components().size(); ++x) comps.push_back(a.component(x) + b.component(x));
  return NatTransform(a.source(), a.target(), std::move(comps));
}

NatTransform subtract(const NatTransform& a, const NatTransform& b) {
  if (!same_module(a.source(), b.source()) || !same_module(a.target(), b.target())) {
    throw Error(ErrorKind::ShapeMismatch, "subtracting transforms with different endpoints");
  }
  std::vector<MatrixR> comps;
  for (std::size_t x = 0; x < a.components().size(); ++x) comps.push_back(a.component(x) - b.component(x));
  return NatTransform(a.source(), a.target(), std::move(comps));
}

NatTransform linear_combination(const std::vector<NatTransform>& basis, const std::vector<FieldElem>& coeffs) {
  if (basis.empty() || basis.size() != coeffs.size()) {
    throw Error(ErrorKind::InvalidArgument, "linear combination needs one coefficient per (nonempty) basis element");
  }
  const PrimeField& f = basis.front().source()->algebra()->field();
  VectorK acc(basis.front().flatten().size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i].value == 0) continue;
    const VectorK v = basis[i].flatten();
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = f.fma(acc[j], coeffs[i], v[j]);
  }
  return NatTransform::unflatten(basis.front().source(), basis.front().target(), acc);
}

bool is_isomorphism(const NatTransform& f) {
  for (const auto& c : f.components())
    if (!is_invertible(c)) return false;
  return true;
}

DirectSum direct_sum(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "direct sum of no modules");
  const ModulePtr& first = parts.front();
  for (const auto& p : parts)
    if (!same_algebra_and_quiver(*first, *p)) {
      throw Error(ErrorKind::ShapeMismatch, "direct sum of modules over different algebras or quivers");
    }
  const AlgebraPtr& alg = first->algebra();
  const QuiverPresentation& q = *first->quiver();
  const std::size_t nv = q.vertex_count();

  std::vector<std::size_t> ranks(nv, 0);
  std::vector<std::vector<std::size_t>> offsets(parts.size(), std::vector<std::size_t>(nv, 0));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t x = 0; x < nv; ++x) {
      offsets[i][x] = ranks[x];
      ranks[x] += parts[i]->rank(x);
    }

  std::vector<MatrixR> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    MatrixR m(alg, ranks[arr.target], ranks[arr.source]);
    for (std::size_t i = 0; i < parts.size(); ++i) m.set_block(offsets[i][arr.target], offsets[i][arr.source], parts[i]->arrow_map(a));
    maps.push_back(std::move(m));
  }
  auto sum = make_module(alg, first->quiver(), ranks, std::move(maps));

  DirectSum out{sum, {}, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<MatrixR> inc, proj;
    for (std::size_t x = 0; x < nv; ++x) {
      MatrixR in(alg, ranks[x], parts[i]->rank(x));
      in.set_block(offsets[i][x], 0, MatrixR::identity(alg, parts[i]->rank(x)));
      proj.push_back(in.transpose());
      inc.push_back(std::move(in));
    }
    out.inclusions.emplace_back(parts[i], sum, std::move(inc));
    out.projections.emplace_back(sum, parts[i], std::move(proj));
  }
  return out;
}

DirectSum direct_sum(const ModulePtr& m, const ModulePtr& n) { return direct_sum(std::vector<ModulePtr>{m, n}); }

RepModule residue_module(const RepModule& m) {
  auto k = std::make_shared<const ArtinAlgebra>(ArtinAlgebra::field_algebra(m.algebra()->field()));
  std::vector<MatrixK> maps;
  for (const auto& a : m.arrow_maps()) maps.push_back(a.residue());
  return RepModule::from_k_matrices(k, m.quiver(), m.ranks(), maps);
}

LiftWitness trivial_lift(const ModulePtr& base, const AlgebraPtr& algebra) {
  if (!base->algebra()->is_field()) throw Error(ErrorKind::InvalidArgument, "trivial lift of a module not over k");
  if (!(base->algebra()->field() == algebra->field())) throw Error(ErrorKind::ShapeMismatch, "fields differ");
  std::vector<MatrixK> maps;
  for (const auto& a : base->arrow_maps()) maps.push_back(a.residue());
  auto lift = make_module(RepModule::from_k_matrices(algebra, base->quiver(), base->ranks(), maps));
  std::vector<MatrixK> phi;
  for (std::size_t r : base->ranks()) phi.push_back(MatrixK::identity(algebra->field(), r));
  return LiftWitness{std::move(lift), base, std::move(phi)};
}

Validation validate_lift(const LiftWitness& w) {
  if (!w.lift || !w.base) return Diagnostic{"ShapeMismatch", "lift witness is missing a module"};
  if (!w.base->algebra()->is_field()) return Diagnostic{"BaseNotOverField", "the base module must be over k"};
  if (!(*w.lift->quiver() == *w.base->quiver()) || !(w.lift->algebra()->field() == w.base->algebra()->field())) {
    return Diagnostic{"ShapeMismatch", "lift and base use different quivers or fields"};
  }
  if (auto d = validate_module(*w.lift)) return Diagnostic{d->kind, "lift: " + d->detail};
  if (auto d = validate_module(*w.base)) return Diagnostic{d->kind, "base: " + d->detail};
  const QuiverPresentation& q = *w.base->quiver();
  if (w.phi.size() != q.vertex_count()) return Diagnostic{"ShapeMismatch", "one φ matrix per vertex expected"};
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    const MatrixK& p = w.phi[x];
    if (p.rows() != w.base->rank(x) || p.cols() != w.lift->rank(x) || !inverse(p)) {
      return Diagnostic{"PhiNotInvertible", "φ at vertex '" + q.vertices()[x] + "' is not an invertible " +
                                                std::to_string(w.base->rank(x)) + "x" + std::to_string(w.lift->rank(x)) +
                                                " matrix"};
    }
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (!(w.phi[arr.target] * w.lift->arrow_map(a).residue() == w.base->arrow_map(a).residue() * w.phi[arr.source])) {
      return Diagnostic{"PhiNotNatural", "φ does not commute with arrow '" + arr.label + "'"};
    }
  }
  return std::nullopt;
}

}  // namespace plift
