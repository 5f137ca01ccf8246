#pragma once

#include <cstdint>
#include <vector>

#include "plift/decompose.hpp"
#include "plift/random.hpp"

namespace plift {

// Isomorphism test for modules over the same algebra and quiver. Exact when
// dim Hom(a, b) <= 1 (any isomorphism is then a multiple of the generator);
// otherwise searches the Hom basis and kRandomSplitAttempts random
// combinations, so a false answer is only a failure to find one.
bool are_isomorphic(const ModulePtr& a, const ModulePtr& b, XorShift64Star& rng);

// σ[i] = index of the base summand with residue(lift[i]) ≅ base[σ[i]], found
// greedily in order. Throws Error(NoMatch) naming the first unmatched summand.
std::vector<std::size_t> match_summands(const std::vector<CertifiedSummand>& lift_summands,
                                        const std::vector<CertifiedSummand>& base_summands,
                                        std::uint64_t seed = kDefaultSeed);

// Whether two decompositions of the same module have the same multiset of
// summand isomorphism classes.
bool same_isomorphism_classes(const std::vector<CertifiedSummand>& a, const std::vector<CertifiedSummand>& b,
                              std::uint64_t seed = kDefaultSeed);

// Decompose the base, require End_k = k for every base summand (Undecided
// otherwise), decompose the lift, require End_R ≅ R for every lift summand
// and a bijective matching of residues to base summands.
// Throws Error(ValidationError) for an invalid witness.
DecompositionReport verify_theorem(const LiftWitness& w, std::uint64_t seed = kDefaultSeed);

}  // namespace plift
