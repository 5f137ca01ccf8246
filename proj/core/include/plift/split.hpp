#pragma once

#include <optional>
#include <vector>

#include "plift/module.hpp"
#include "plift/poly.hpp"

namespace plift {

// A direct summand S of an ambient module with projection ∘ inclusion = id_S.
struct Summand {
  ModulePtr module;
  NatTransform inclusion;   // S -> ambient
  NatTransform projection;  // ambient -> S
};

// Free R-basis of an R-submodule of R^rank given by k-spanning columns in
// expanded coordinates (index i*n + l). Lifts a k-basis of the residue image;
// by Nakayama these generate, and freeness is confirmed by counting
// dimensions. Throws Error(Internal) if the submodule is not free.
MatrixR free_basis(const AlgebraPtr& algebra, const MatrixK& spanning_columns, std::size_t rank);

// parts[k][x] spans (over k, in expanded coordinates) the vertex-x piece of the
// k-th subfunctor; the parts must form a direct sum decomposition of m.
std::vector<Summand> summands_from_subspaces(const ModulePtr& m, const std::vector<std::vector<MatrixK>>& parts);

// Minimal polynomial of the total k-linear action of an endomorphism: the lcm
// of the per-vertex minimal polynomials, returned factored.
std::vector<Factor> endomorphism_factors(const NatTransform& f);

// p(f) with p over k.
NatTransform evaluate(const PolyK& p, const NatTransform& f);

struct FittingSplit {
  Summand kernel;  // ker f^N
  Summand image;   // im f^N
};

// Fitting decomposition with N = total k-dimension. nullopt when f^N is zero
// or invertible. Throws Error(NotEndomorphism).
std::optional<FittingSplit> fitting_split(const ModulePtr& m, const NatTransform& f);

struct MinpolySplit {
  std::vector<Factor> factors;
  std::vector<NatTransform> idempotents;  // e_i(f), orthogonal, summing to id
  std::vector<Summand> summands;          // images of the idempotents
};

// Splits along the coprime prime-power factors q_i^{e_i} of the minimal
// polynomial via Bezout idempotents. nullopt when there is only one distinct
// irreducible factor. Throws Error(NotEndomorphism).
std::optional<MinpolySplit> minpoly_split(const ModulePtr& m, const NatTransform& f);

}  // namespace plift
