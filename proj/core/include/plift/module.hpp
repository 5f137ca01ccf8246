#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "plift/algebra.hpp"
#include "plift/matrix_r.hpp"
#include "plift/quiver.hpp"

namespace plift {

// A representation of a quiver with relations by free R-modules: vertex x
// carries R^{r_x}, arrow a: x -> y carries an r_y x r_x matrix over R. Over
// R = k this is an ordinary persistence module.
class RepModule {
 public:
  // Checks shapes (Error(ShapeMismatch)); relations are checked by
  // validate_module.
  RepModule(AlgebraPtr algebra, QuiverPtr quiver, std::vector<std::size_t> ranks, std::vector<MatrixR> arrow_maps);

  static RepModule zero(AlgebraPtr algebra, QuiverPtr quiver);
  // Module over R = algebra with the given k-matrices embedded as c*b_0.
  static RepModule from_k_matrices(AlgebraPtr algebra, QuiverPtr quiver, std::vector<std::size_t> ranks,
                                   const std::vector<MatrixK>& maps);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const QuiverPtr& quiver() const noexcept { return quiver_; }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  std::size_t rank(std::size_t vertex) const { return ranks_.at(vertex); }
  const MatrixR& arrow_map(std::size_t arrow) const { return maps_.at(arrow); }
  const std::vector<MatrixR>& arrow_maps() const noexcept { return maps_; }

  std::size_t total_rank() const noexcept;
  std::size_t k_dimension() const noexcept { return total_rank() * algebra_->dim(); }
  bool is_zero() const noexcept { return total_rank() == 0; }

  friend bool operator==(const RepModule& a, const RepModule& b);

 private:
  AlgebraPtr algebra_;
  QuiverPtr quiver_;
  std::vector<std::size_t> ranks_;
  std::vector<MatrixR> maps_;
};

using ModulePtr = std::shared_ptr<const RepModule>;

template <class... Args>
ModulePtr make_module(Args&&... args) {
  return std::make_shared<const RepModule>(std::forward<Args>(args)...);
}

bool same_algebra_and_quiver(const RepModule& a, const RepModule& b);

// Diagnostics: RelationViolated (relation index and the nonzero matrix).
Validation validate_module(const RepModule& m);

// Ordered product of arrow matrices; identity of rank r_x for the empty path.
// Throws Error(NotComposable).
MatrixR evaluate_path(const RepModule& m, const Path& path);

// A morphism of representations: per-vertex R-matrices of shape r'_x x r_x.
class NatTransform {
 public:
  // Checks shapes only; is_natural() checks the commuting squares.
  NatTransform(ModulePtr source, ModulePtr target, std::vector<MatrixR> components);

  static NatTransform identity(const ModulePtr& m);
  static NatTransform zero(const ModulePtr& source, const ModulePtr& target);

  const ModulePtr& source() const noexcept { return source_; }
  const ModulePtr& target() const noexcept { return target_; }
  const MatrixR& component(std::size_t vertex) const { return components_.at(vertex); }
  const std::vector<MatrixR>& components() const noexcept { return components_; }

  bool is_endomorphism() const noexcept;
  bool is_zero() const noexcept;
  // f_y M(a) = N(a) f_x for every arrow a: x -> y.
  bool is_natural() const;

  // All coordinates, vertex by vertex, in MatrixR coefficient order.
  VectorK flatten() const;
  static NatTransform unflatten(const ModulePtr& source, const ModulePtr& target, const VectorK& coords);

  friend bool operator==(const NatTransform& a, const NatTransform& b);

 private:
  ModulePtr source_;
  ModulePtr target_;
  std::vector<MatrixR> components_;
};

// g ∘ f. Throws Error(ShapeMismatch) unless f.target matches g.source.
NatTransform compose(const NatTransform& g, const NatTransform& f);
// r·f; scalar_action(r, identity) is the multiplication map μ_r.
NatTransform scalar_action(const RingElem& r, const NatTransform& f);
NatTransform multiplication_map(const ModulePtr& m, const RingElem& r);
NatTransform add(const NatTransform& a, const NatTransform& b);
NatTransform subtract(const NatTransform& a, const NatTransform& b);
// sum_i coeffs[i] * basis[i] with coefficients in k.
NatTransform linear_combination(const std::vector<NatTransform>& basis, const std::vector<FieldElem>& coeffs);

// Every component square and invertible over R.
bool is_isomorphism(const NatTransform& f);

struct DirectSum {
  ModulePtr module;
  std::vector<NatTransform> inclusions;
  std::vector<NatTransform> projections;
};

// Block-diagonal sum with canonical inclusions and projections.
DirectSum direct_sum(const std::vector<ModulePtr>& parts);
DirectSum direct_sum(const ModulePtr& m, const ModulePtr& n);

// k ⊗_R M: entrywise residue, ranks unchanged, over the field algebra.
RepModule residue_module(const RepModule& m);

// A lift (M, φ) of a k-module V: M over R with free vertex modules and
// per-vertex invertible φ_x: k ⊗ M(x) -> V(x) commuting with the arrows.
struct LiftWitness {
  ModulePtr lift;
  ModulePtr base;
  std::vector<MatrixK> phi;
};

// R ⊗_k V with φ = identity.
LiftWitness trivial_lift(const ModulePtr& base, const AlgebraPtr& algebra);

// Diagnostics: PhiNotInvertible, PhiNotNatural, BaseNotOverField, ShapeMismatch,
// plus module diagnostics of either side.
Validation validate_lift(const LiftWitness& w);

}  // namespace plift
