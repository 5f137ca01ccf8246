#pragma once

#include "plift/extension.hpp"
#include "plift/hom.hpp"
#include "plift/module.hpp"

namespace plift {

// Φ: End_k(V) -> Hom_R(M, V), f ↦ f ∘ φ ∘ residue, for a lift witness (M, φ)
// of V. The result targets V viewed over R through the residue map.
ResidueHom lemma21_phi(const NatTransform& f, const LiftWitness& w);

// Ψ: Hom_R(M, V) -> End_k(V), the unique f with f ∘ π_M = g. Here π_M is φ
// composed with the residue projection, so f_x solves f_x φ_x = g_x.
NatTransform lemma21_psi(const ResidueHom& g, const LiftWitness& w);

// The unique r in R with f = μ_r, for f in End_R(M) where (M, φ) lifts a V
// with End_k(V) = k. Works down the small-extension chain: reduce f along
// θ, recurse to get r0, lift r0 through the section to r, and read
// g = f - μ_r as t·λ·id.
// Throws Error(HypothesisViolated) if End_k(V) != k, Error(NotScalar) if a
// step fails to produce a scalar (an internal-consistency failure).
RingElem express_as_scalar(const NatTransform& f, const LiftWitness& w);

}  // namespace plift
