#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plift/module.hpp"
#include "plift/random.hpp"
#include "plift/split.hpp"

namespace plift {

// End_R(M) as a k-algebra: a k-basis of natural endomorphisms and the
// structure constants of composition in that basis.
struct EndAlgebra {
  ModulePtr module;
  std::vector<NatTransform> basis;
  std::vector<FieldElem> mult_table;  // basis[i] ∘ basis[j] = sum_l c[(i*d + j)*d + l] basis[l]

  std::size_t dim() const noexcept { return basis.size(); }
  FieldElem structure_constant(std::size_t i, std::size_t j, std::size_t l) const {
    return mult_table[(i * dim() + j) * dim() + l];
  }
};

EndAlgebra end_algebra(const ModulePtr& m);

// dim_k End_R(M) = ℓ(R). The multiplication maps μ_{b_i} are always independent
// on a nonzero free module, so equality means End_R(M) = {μ_r} ≅ R.
// Throws Error(ZeroModule).
bool end_is_scalar(const ModulePtr& m);

// Exact test that End is local with residue field k: every basis element has
// a single eigenvalue λ, the elements b - λ·id span a codimension-one subspace,
// and that subspace is a nilpotent subalgebra.
bool end_is_local(const ModulePtr& m, const std::vector<NatTransform>& end_basis);

enum class Certificate {
  ScalarRing,    // End ≅ R
  LocalUnknown,  // End local with residue field k, but larger than R
  Undecided,
};

enum class Verdict { Pass, Fail, Undecided };

std::string to_string(Certificate c);
std::string to_string(Verdict v);

struct CertifiedSummand {
  Summand summand;
  Certificate certificate;
  std::size_t end_dimension;
  std::size_t discovery;  // order in which the summand was finalized
};

struct DecompositionReport {
  std::vector<CertifiedSummand> summands;
  // Only filled by verify_theorem: the decomposition of the base module, and
  // matching[i] = index of the base summand matched to summands[i].
  std::vector<CertifiedSummand> base_summands;
  std::optional<std::vector<std::size_t>> matching;
  Verdict verdict = Verdict::Undecided;
  std::string reason;
};

inline constexpr std::size_t kRandomSplitAttempts = 64;

// Worklist decomposition. Each piece is tried, in order: scalar End test,
// minpoly_split and fitting_split on every End basis element, then up to 64
// random F_p-combinations of the basis through both splitters. Summands are
// sorted by (total rank, rank vector, discovery index). Verdict is Pass iff
// every summand is certified ScalarRing.
DecompositionReport decompose(const ModulePtr& m, std::uint64_t seed = kDefaultSeed);

// The transform from the direct sum of the summands to the ambient module
// assembled from their inclusions.
NatTransform reassembly_map(const ModulePtr& ambient, const std::vector<CertifiedSummand>& summands);

}  // namespace plift
