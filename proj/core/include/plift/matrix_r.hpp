#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "plift/algebra.hpp"
#include "plift/linalg.hpp"

namespace plift {

// Matrix over a local Artinian algebra R: an R-linear map between free modules
// R^cols -> R^rows. Coefficients are stored flat, (i*cols + j)*n + l.
class MatrixR {
 public:
  MatrixR(AlgebraPtr algebra, std::size_t rows, std::size_t cols);

  static MatrixR identity(AlgebraPtr algebra, std::size_t n);
  // Entry c of `m` becomes c*b_0.
  static MatrixR embed(AlgebraPtr algebra, const MatrixK& m);
  // Inverse of expand() for a k-matrix that commutes with the R action.
  // Only the b_0-columns are read.
  static MatrixR contract(AlgebraPtr algebra, const MatrixK& k_linear, std::size_t rows, std::size_t cols);
  // Entry (i, j) has coordinates coeffs[(i*cols + j)*n .. +n).
  static MatrixR from_coefficients(AlgebraPtr algebra, std::size_t rows, std::size_t cols, std::vector<FieldElem> coeffs);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  RingElem at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const RingElem& value);
  FieldElem coeff(std::size_t i, std::size_t j, std::size_t l) const {
    return coeffs_[(i * cols_ + j) * algebra_->dim() + l];
  }
  const std::vector<FieldElem>& coefficients() const noexcept { return coeffs_; }

  // Entrywise residue: the matrix of k ⊗_R (this map).
  MatrixK residue() const;
  // The (rows*n) x (cols*n) k-matrix of the same map on underlying k-spaces;
  // coordinate (i, l) sits at index i*n + l.
  MatrixK expand() const;

  MatrixR block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t row0, std::size_t col0, const MatrixR& b);

  MatrixR operator*(const MatrixR& rhs) const;
  MatrixR operator+(const MatrixR& rhs) const;
  MatrixR operator-(const MatrixR& rhs) const;
  MatrixR scaled(const RingElem& r) const;
  MatrixR scaled(FieldElem c) const;
  MatrixR transpose() const;

  bool is_zero() const noexcept;

  friend bool operator==(const MatrixR& a, const MatrixR& b);

  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> coeffs_;
};

MatrixR hstack(const MatrixR& a, const MatrixR& b);

// Nakayama: invertible over R iff the residue matrix is invertible over k.
bool is_invertible(const MatrixR& a);
// Lifts the residue inverse and refines it with X <- X(2I - AX),
// ceil(log2 ℓ(R)) + 1 times. Throws Error(NotInvertible) naming the residue rank.
MatrixR inverse(const MatrixR& a);

}  // namespace plift
