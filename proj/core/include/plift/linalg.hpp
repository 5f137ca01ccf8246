#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "plift/field.hpp"

namespace plift {

class PolyK;

// Dense row-major matrix over F_p. Maps act on column vectors from the left,
// so g∘f is the product G * F.
class MatrixK {
 public:
  MatrixK(PrimeField field, std::size_t rows, std::size_t cols);

  static MatrixK identity(PrimeField field, std::size_t n);
  // Rows of integers, reduced mod p.
  static MatrixK from_ints(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static MatrixK from_ints(PrimeField field, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& entries);
  static MatrixK from_columns(PrimeField field, std::size_t rows, const std::vector<VectorK>& columns);
  static MatrixK from_rows(PrimeField field, std::size_t cols, const std::vector<VectorK>& rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  FieldElem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  FieldElem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<FieldElem>& entries() const noexcept { return data_; }

  VectorK column(std::size_t j) const;
  VectorK row(std::size_t i) const;
  MatrixK transpose() const;
  MatrixK block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t row0, std::size_t col0, const MatrixK& b);

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  MatrixK operator*(const MatrixK& rhs) const;
  MatrixK operator+(const MatrixK& rhs) const;
  MatrixK operator-(const MatrixK& rhs) const;
  MatrixK scaled(FieldElem c) const;
  VectorK apply(const VectorK& v) const;

  friend bool operator==(const MatrixK&, const MatrixK&) = default;

  std::string to_string() const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> data_;
};

struct RrefResult {
  MatrixK reduced;
  std::vector<std::size_t> pivots;  // increasing
  std::size_t rank;
};

RrefResult rref(const MatrixK& a);
std::size_t rank(const MatrixK& a);

// Basis of {v : A v = 0}; vector i has a 1 in the i-th free column and 0 in
// every other free column. Ordered by free-column index.
std::vector<VectorK> kernel_basis(const MatrixK& a);

// One particular solution of A x = b with free variables set to 0, or nullopt
// when the system is inconsistent.
std::optional<VectorK> solve(const MatrixK& a, const VectorK& b);

// X with X A = B (row-space solve), nullopt when inconsistent.
std::optional<MatrixK> solve_left(const MatrixK& a, const MatrixK& b);

std::optional<MatrixK> inverse(const MatrixK& a);

// Pivot columns of A, i.e. a basis of its column space taken from A itself.
MatrixK column_basis(const MatrixK& a);

MatrixK hstack(const MatrixK& a, const MatrixK& b);

// Monic polynomial of least degree annihilating the square matrix A, from the
// first linear dependence among I, A, A^2, ...
PolyK minimal_polynomial(const MatrixK& a);

MatrixK evaluate(const PolyK& f, const MatrixK& a);

}  // namespace plift
