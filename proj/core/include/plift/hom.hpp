#pragma once

#include <optional>
#include <vector>

#include "plift/module.hpp"

namespace plift {

// k-basis of Hom_R(M, N). Unknowns are the coordinates of every component
// entry in the k-basis of R; each arrow contributes the naturality equations
// f_y M(a) - N(a) f_x = 0 expanded through the structure constants. Relations
// are not re-imposed: they hold automatically on valid modules.
std::vector<NatTransform> hom_basis(const ModulePtr& m, const ModulePtr& n);

inline std::size_t hom_dimension(const ModulePtr& m, const ModulePtr& n) { return hom_basis(m, n).size(); }

// The linear system hom_basis solves, exposed for tests and benchmarks.
MatrixK naturality_system(const RepModule& m, const RepModule& n);

// Coordinates of f in a basis produced by hom_basis, nullopt if f is not in
// the span.
std::optional<VectorK> coordinates(const std::vector<NatTransform>& basis, const NatTransform& f);

// An R-linear natural map g: M -> V where M is over R and V is a k-module
// viewed over R with m_R acting as zero. Such a map factors through k ⊗ M, so
// component x is a k-matrix of shape dim V(x) x r_x applied to residues.
struct ResidueHom {
  ModulePtr source;  // over R
  ModulePtr target;  // over k
  std::vector<MatrixK> components;

  // g_y · residue(M(a)) = V(a) · g_x for every arrow.
  bool is_natural() const;
  // The R-linear map R^{r_x} -> V(x) on underlying k-spaces, (dim V(x)) x (r_x n).
  MatrixK k_linear_component(std::size_t vertex) const;
  bool is_zero() const;

  friend bool operator==(const ResidueHom& a, const ResidueHom& b) { return a.components == b.components; }
};

// k-basis of Hom_R(M, V) for V over k viewed as an R-module through the
// residue map.
std::vector<ResidueHom> hom_to_residue_target(const ModulePtr& m, const ModulePtr& v);

}  // namespace plift
