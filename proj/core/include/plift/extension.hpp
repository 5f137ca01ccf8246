#pragma once

#include <vector>

#include "plift/algebra.hpp"
#include "plift/linalg.hpp"
#include "plift/matrix_r.hpp"

namespace plift {

// A surjection θ: R -> R0 = R/tR with tR one-dimensional and m_R t = 0.
// Coordinates are column vectors: θ(a) = theta * a.
struct SmallExtension {
  AlgebraPtr source;
  AlgebraPtr target;
  MatrixK theta;    // n0 x n
  MatrixK section;  // n x n0, theta * section = I; k-linear only
  RingElem t;

  RingElem apply(const RingElem& a) const;
  // Coordinate lift along the section (not multiplicative).
  RingElem lift(const RingElem& a) const;
  MatrixR apply(const MatrixR& m) const;
};

// Takes p maximal with m^{p-1} != 0 and t the first echelon basis vector of
// m^{p-1}. The quotient keeps every original basis vector except the pivot of t.
// Throws Error(LengthOne) when R = k.
SmallExtension small_extension(const AlgebraPtr& algebra);

// Small extensions R -> R_1 -> ... -> k; ℓ(R) - 1 steps.
std::vector<SmallExtension> extension_chain(const AlgebraPtr& algebra);

}  // namespace plift
