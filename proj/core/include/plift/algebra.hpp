#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "plift/error.hpp"
#include "plift/field.hpp"
#include "plift/linalg.hpp"

namespace plift {

// Coordinates of an element of R in the algebra's basis b_0 = 1, b_1, ...
struct RingElem {
  std::vector<FieldElem> coeffs;

  friend bool operator==(const RingElem&, const RingElem&) = default;
};

// A commutative local Artinian F_p-algebra presented by structure constants
// b_i b_j = sum_l c[i][j][l] b_l. The maximal ideal is span(b_1, ..., b_{n-1})
// and the residue map reads the coefficient of b_0; validate_algebra checks
// that the table really presents such a ring.
class ArtinAlgebra {
 public:
  // `structure` holds n*n*n constants indexed (i*n + j)*n + l.
  ArtinAlgebra(PrimeField field, std::vector<std::string> basis_names, std::vector<FieldElem> structure);

  // R = k.
  static ArtinAlgebra field_algebra(PrimeField field);
  // k[x]/(x^length), basis 1, x, x^2, ...
  static ArtinAlgebra truncated_polynomial(PrimeField field, std::size_t length, const std::string& var = "e");
  static ArtinAlgebra dual_numbers(PrimeField field) { return truncated_polynomial(field, 2, "eps"); }
  // k[x_1..x_m]/(x_1..x_m)^2, basis 1, x_1, ..., x_m.
  static ArtinAlgebra square_zero(PrimeField field, const std::vector<std::string>& generators);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return names_.size(); }
  // ℓ(R) as a module over itself equals dim_k R here.
  std::size_t length() const noexcept { return names_.size(); }
  bool is_field() const noexcept { return names_.size() == 1; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  FieldElem structure_constant(std::size_t i, std::size_t j, std::size_t l) const {
    return table_[(i * dim() + j) * dim() + l];
  }
  const std::vector<FieldElem>& structure() const noexcept { return table_; }

  RingElem zero() const { return RingElem{std::vector<FieldElem>(dim())}; }
  RingElem one() const { return basis(0); }
  RingElem basis(std::size_t i) const;
  RingElem from_scalar(FieldElem c) const;
  RingElem from_ints(const std::vector<std::int64_t>& coeffs) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem scale(FieldElem c, const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;

  FieldElem residue(const RingElem& a) const { return a.coeffs.at(0); }
  bool is_zero(const RingElem& a) const;
  bool is_unit(const RingElem& a) const { return residue(a).value != 0; }
  // Geometric series u^{-1} sum_{i<n} (1 - a/u)^i with u = residue(a).
  // Throws Error(NotAUnit) when residue(a) = 0.
  RingElem inverse(const RingElem& a) const;

  // The n x n matrix of x -> a*x on coordinate columns.
  MatrixK multiplication_matrix(const RingElem& a) const;

  std::string format(const RingElem& a) const;

  friend bool operator==(const ArtinAlgebra&, const ArtinAlgebra&) = default;

 private:
  void check_element(const RingElem& a) const;

  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<FieldElem> table_;
};

using AlgebraPtr = std::shared_ptr<const ArtinAlgebra>;

// Diagnostics: NotUnital, NotCommutative, NotAssociative,
// MaxIdealNotNilpotent, MaxIdealNotClosed.
Validation validate_algebra(const ArtinAlgebra& a);

// Echelon (RREF) basis of m^k, spanned by all k-fold products of the m basis.
// Empty once m^k = 0.
std::vector<RingElem> ideal_power_basis(const ArtinAlgebra& a, std::size_t k);

// Smallest p >= 1 with m^p = 0 (1 for R = k).
std::size_t nilpotency_index(const ArtinAlgebra& a);

}  // namespace plift
