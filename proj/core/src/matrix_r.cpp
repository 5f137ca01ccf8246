#include "plift/matrix_r.hpp"

#include <algorithm>
#include <sstream>

namespace plift {

namespace {

void require_compatible(const MatrixR& a, const MatrixR& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !(*a.algebra() == *b.algebra())) {
    throw Error(ErrorKind::ShapeMismatch, std::string(op) + ": operand shapes or algebras differ");
  }
}

}  // namespace

MatrixR::MatrixR(AlgebraPtr algebra, std::size_t rows, std::size_t cols)
    : algebra_(std::move(algebra)), rows_(rows), cols_(cols) {
  if (!algebra_) throw Error(ErrorKind::InvalidArgument, "matrix over a null algebra");
  coeffs_.assign(rows * cols * algebra_->dim(), FieldElem{});
}

MatrixR MatrixR::identity(AlgebraPtr algebra, std::size_t n) {
  MatrixR m(std::move(algebra), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, m.algebra_->one());
  return m;
}

MatrixR MatrixR::embed(AlgebraPtr algebra, const MatrixK& k) {
  if (!(k.field() == algebra->field())) throw Error(ErrorKind::ShapeMismatch, "embedding a matrix over another field");
  MatrixR m(std::move(algebra), k.rows(), k.cols());
  const std::size_t n = m.algebra_->dim();
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) m.coeffs_[(i * m.cols_ + j) * n] = k.at(i, j);
  return m;
}

MatrixR MatrixR::contract(AlgebraPtr algebra, const MatrixK& k_linear, std::size_t rows, std::size_t cols) {
  const std::size_t n = algebra->dim();
  if (k_linear.rows() != rows * n || k_linear.cols() != cols * n) {
    throw Error(ErrorKind::ShapeMismatch, "contract: k-linear matrix has the wrong shape");
  }
  MatrixR m(std::move(algebra), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t l = 0; l < n; ++l) m.coeffs_[(i * cols + j) * n + l] = k_linear.at(i * n + l, j * n);
  return m;
}

MatrixR MatrixR::from_coefficients(AlgebraPtr algebra, std::size_t rows, std::size_t cols,
                                   std::vector<FieldElem> coeffs) {
  MatrixR m(std::move(algebra), rows, cols);
  if (coeffs.size() != m.coeffs_.size()) throw Error(ErrorKind::ShapeMismatch, "coefficient count differs");
  m.coeffs_ = std::move(coeffs);
  return m;
}

RingElem MatrixR::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw Error(ErrorKind::ShapeMismatch, "matrix index out of range");
  const std::size_t n = algebra_->dim();
  const auto first = coeffs_.begin() + static_cast<std::ptrdiff_t>((i * cols_ + j) * n);
  return RingElem{std::vector<FieldElem>(first, first + static_cast<std::ptrdiff_t>(n))};
}

void MatrixR::set(std::size_t i, std::size_t j, const RingElem& value) {
  const std::size_t n = algebra_->dim();
  if (i >= rows_ || j >= cols_ || value.coeffs.size() != n) {
    throw Error(ErrorKind::ShapeMismatch, "matrix index or element size out of range");
  }
  std::copy(value.coeffs.begin(), value.coeffs.end(), coeffs_.begin() + static_cast<std::ptrdiff_t>((i * cols_ + j) * n));
}

MatrixK MatrixR::residue() const {
  const std::size_t n = algebra_->dim();
  MatrixK k(algebra_->field(), rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) k.at(i, j) = coeffs_[(i * cols_ + j) * n];
  return k;
}

MatrixK MatrixR::expand() const {
  const std::size_t n = algebra_->dim();
  MatrixK out(algebra_->field(), rows_ * n, cols_ * n);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const RingElem e = at(i, j);
      if (algebra_->is_zero(e)) continue;
      out.set_block(i * n, j * n, algebra_->multiplication_matrix(e));
    }
  return out;
}

MatrixR MatrixR::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw Error(ErrorKind::ShapeMismatch, "block out of range");
  MatrixR b(algebra_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) b.set(i, j, at(row0 + i, col0 + j));
  return b;
}

void MatrixR::set_block(std::size_t row0, std::size_t col0, const MatrixR& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) throw Error(ErrorKind::ShapeMismatch, "block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) set(row0 + i, col0 + j, b.at(i, j));
}

MatrixR MatrixR::operator*(const MatrixR& rhs) const {
  if (cols_ != rhs.rows_ || !(*algebra_ == *rhs.algebra_)) {
    throw Error(ErrorKind::ShapeMismatch, "R-matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                              " * " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  const ArtinAlgebra& R = *algebra_;
  const std::size_t n = R.dim();
  const std::uint64_t p = R.field().modulus();
  MatrixR out(algebra_, rows_, rhs.cols_);
  std::vector<std::uint64_t> acc(n);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        const FieldElem* a = &coeffs_[(i * cols_ + k) * n];
        const FieldElem* b = &rhs.coeffs_[(k * rhs.cols_ + j) * n];
        for (std::size_t x = 0; x < n; ++x) {
          if (a[x].value == 0) continue;
          for (std::size_t y = 0; y < n; ++y) {
            if (b[y].value == 0) continue;
            const std::uint64_t ab = std::uint64_t{a[x].value} * b[y].value % p;
            for (std::size_t l = 0; l < n; ++l) {
              const auto c = R.structure_constant(x, y, l).value;
              if (c) acc[l] = (acc[l] + ab * c) % p;
            }
          }
        }
      }
      FieldElem* dst = &out.coeffs_[(i * rhs.cols_ + j) * n];
      for (std::size_t l = 0; l < n; ++l) dst[l] = {static_cast<std::uint32_t>(acc[l])};
    }
  return out;
}

MatrixR MatrixR::operator+(const MatrixR& rhs) const {
  require_compatible(*this, rhs, "R-matrix sum");
  MatrixR out(*this);
  const PrimeField& f = algebra_->field();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = f.add(coeffs_[i], rhs.coeffs_[i]);
  return out;
}

MatrixR MatrixR::operator-(const MatrixR& rhs) const {
  require_compatible(*this, rhs, "R-matrix difference");
  MatrixR out(*this);
  const PrimeField& f = algebra_->field();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = f.sub(coeffs_[i], rhs.coeffs_[i]);
  return out;
}

MatrixR MatrixR::scaled(const RingElem& r) const {
  MatrixR out(algebra_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, algebra_->mul(r, at(i, j)));
  return out;
}

MatrixR MatrixR::scaled(FieldElem c) const {
  MatrixR out(*this);
  const PrimeField& f = algebra_->field();
  for (auto& e : out.coeffs_) e = f.mul(e, c);
  return out;
}

MatrixR MatrixR::transpose() const {
  MatrixR out(algebra_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

bool MatrixR::is_zero() const noexcept {
  for (FieldElem c : coeffs_)
    if (c.value != 0) return false;
  return true;
}

bool operator==(const MatrixR& a, const MatrixR& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && *a.algebra_ == *b.algebra_ && a.coeffs_ == b.coeffs_;
}

std::string MatrixR::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << algebra_->format(at(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

MatrixR hstack(const MatrixR& a, const MatrixR& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "hstack: row counts differ");
  MatrixR out(a.algebra(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

bool is_invertible(const MatrixR& a) {
  if (!a.is_square()) return false;
  return rank(a.residue()) == a.rows();
}

MatrixR inverse(const MatrixR& a) {
  if (!a.is_square()) {
    throw Error(ErrorKind::NotInvertible,
                "non-square " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
  }
  const MatrixK res = a.residue();
  const auto res_inv = plift::inverse(res);
  if (!res_inv) {
    throw Error(ErrorKind::NotInvertible, "residue matrix has rank " + std::to_string(rank(res)) + " < " +
                                              std::to_string(a.rows()));
  }
  const std::size_t n = a.rows();
  const MatrixR two = MatrixR::identity(a.algebra(), n).scaled(a.algebra()->field().from_int(2));
  MatrixR x = MatrixR::embed(a.algebra(), *res_inv);
  // I - AX lies in m^(2^k) after k steps and m^ℓ(R) = 0.
  std::size_t steps = 1;
  for (std::size_t reach = 1; reach < a.algebra()->length(); reach *= 2) ++steps;
  for (std::size_t s = 0; s < steps; ++s) x = x * (two - a * x);
  if (!(a * x == MatrixR::identity(a.algebra(), n))) {
    throw Error(ErrorKind::Internal, "Newton refinement did not converge; is the maximal ideal nilpotent?");
  }
  return x;
}

}  // namespace plift
