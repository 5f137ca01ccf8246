#include "plift/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "plift/error.hpp"
#include "plift/poly.hpp"

namespace plift {

namespace {

void require_same_shape(const MatrixK& a, const MatrixK& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.field() == b.field())) {
    throw Error(ErrorKind::ShapeMismatch, std::string(op) + ": operand shapes differ");
  }
}

}  // namespace

MatrixK::MatrixK(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

MatrixK MatrixK::identity(PrimeField field, std::size_t n) {
  MatrixK m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

MatrixK MatrixK::from_ints(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  MatrixK m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (std::int64_t v : row) m.at(i, j++) = field.from_int(v);
    ++i;
  }
  return m;
}

MatrixK MatrixK::from_ints(PrimeField field, std::size_t rows, std::size_t cols,
                           const std::vector<std::int64_t>& entries) {
  if (entries.size() != rows * cols) throw Error(ErrorKind::ShapeMismatch, "entry count differs from rows*cols");
  MatrixK m(field, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = field.from_int(entries[i]);
  return m;
}

MatrixK MatrixK::from_columns(PrimeField field, std::size_t rows, const std::vector<VectorK>& columns) {
  MatrixK m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorKind::ShapeMismatch, "column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

MatrixK MatrixK::from_rows(PrimeField field, std::size_t cols, const std::vector<VectorK>& rows) {
  MatrixK m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::ShapeMismatch, "row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

VectorK MatrixK::column(std::size_t j) const {
  VectorK v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

VectorK MatrixK::row(std::size_t i) const {
  return VectorK(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

MatrixK MatrixK::transpose() const {
  MatrixK t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

MatrixK MatrixK::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw Error(ErrorKind::ShapeMismatch, "block out of range");
  MatrixK b(field_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) b.at(i, j) = at(row0 + i, col0 + j);
  return b;
}

void MatrixK::set_block(std::size_t row0, std::size_t col0, const MatrixK& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) throw Error(ErrorKind::ShapeMismatch, "block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) at(row0 + i, col0 + j) = b.at(i, j);
}

bool MatrixK::is_zero() const noexcept {
  for (FieldElem e : data_)
    if (e.value != 0) return false;
  return true;
}

bool MatrixK::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j).value != (i == j ? 1u : 0u)) return false;
  return true;
}

MatrixK MatrixK::operator*(const MatrixK& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_)) {
    throw Error(ErrorKind::ShapeMismatch, "matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                              " * " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  const std::uint64_t p = field_.modulus();
  MatrixK out(field_, rows_, rhs.cols_);
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = at(i, k).value;
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] = (acc[j] + a * rhs.at(k, j).value) % p;
    }
    for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) = {static_cast<std::uint32_t>(acc[j])};
  }
  return out;
}

MatrixK MatrixK::operator+(const MatrixK& rhs) const {
  require_same_shape(*this, rhs, "matrix sum");
  MatrixK out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

MatrixK MatrixK::operator-(const MatrixK& rhs) const {
  require_same_shape(*this, rhs, "matrix difference");
  MatrixK out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

MatrixK MatrixK::scaled(FieldElem c) const {
  MatrixK out(*this);
  for (auto& e : out.data_) e = field_.mul(e, c);
  return out;
}

VectorK MatrixK::apply(const VectorK& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "vector length differs from column count");
  VectorK out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    FieldElem s{};
    for (std::size_t j = 0; j < cols_; ++j) s = field_.fma(s, at(i, j), v[j]);
    out[i] = s;
  }
  return out;
}

std::string MatrixK::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).value;
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const MatrixK& a) {
  const PrimeField& f = a.field();
  MatrixK m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).value == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    const FieldElem scale = f.inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = f.mul(m.at(row, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const FieldElem factor = m.at(i, col);
      if (factor.value == 0) continue;
      const FieldElem nf = f.neg(factor);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) = f.fma(m.at(i, j), nf, m.at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots), row};
}

std::size_t rank(const MatrixK& a) { return rref(a).rank; }

std::vector<VectorK> kernel_basis(const MatrixK& a) {
  const PrimeField& f = a.field();
  const RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;

  std::vector<VectorK> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorK v(a.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<VectorK> solve(const MatrixK& a, const VectorK& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::ShapeMismatch, "right-hand side length differs from row count");
  MatrixK aug(a.field(), a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) aug.at(i, a.cols()) = b[i];
  const RrefResult r = rref(aug);
  if (r.rank > 0 && r.pivots[r.rank - 1] == a.cols()) return std::nullopt;
  VectorK x(a.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced.at(i, a.cols());
  return x;
}

std::optional<MatrixK> solve_left(const MatrixK& a, const MatrixK& b) {
  // X A = B  <=>  A^T X^T = B^T
  if (a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "solve_left: column counts differ");
  const MatrixK at = a.transpose();
  MatrixK x(a.field(), b.rows(), a.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    auto sol = solve(at, b.row(i));
    if (!sol) return std::nullopt;
    for (std::size_t j = 0; j < a.rows(); ++j) x.at(i, j) = (*sol)[j];
  }
  return x;
}

std::optional<MatrixK> inverse(const MatrixK& a) {
  if (!a.is_square()) return std::nullopt;
  const std::size_t n = a.rows();
  MatrixK aug(a.field(), n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, MatrixK::identity(a.field(), n));
  const RrefResult r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  return r.reduced.block(0, n, n, n);
}

MatrixK column_basis(const MatrixK& a) {
  const RrefResult r = rref(a);
  MatrixK out(a.field(), a.rows(), r.rank);
  for (std::size_t k = 0; k < r.rank; ++k)
    for (std::size_t i = 0; i < a.rows(); ++i) out.at(i, k) = a.at(i, r.pivots[k]);
  return out;
}

MatrixK hstack(const MatrixK& a, const MatrixK& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "hstack: row counts differ");
  MatrixK out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

PolyK minimal_polynomial(const MatrixK& a) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "minimal polynomial of a non-square matrix");
  const PrimeField& f = a.field();
  const std::size_t n = a.rows();
  if (n == 0) return PolyK::constant(f, f.one());

  // Columns are vec(A^0), ..., vec(A^k); the first k with a kernel vector gives
  // the relation, and that vector has a 1 in column k.
  std::vector<VectorK> powers;
  MatrixK current = MatrixK::identity(f, n);
  for (std::size_t k = 0; k <= n; ++k) {
    powers.push_back(current.entries());
    const MatrixK krylov = MatrixK::from_columns(f, n * n, powers);
    const auto kernel = kernel_basis(krylov);
    if (!kernel.empty()) return PolyK(f, kernel.front()).monic();
    current = current * a;
  }
  throw Error(ErrorKind::Internal, "no annihilating polynomial of degree <= n");
}

MatrixK evaluate(const PolyK& p, const MatrixK& a) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "evaluate polynomial at a non-square matrix");
  const PrimeField& f = a.field();
  MatrixK result(f, a.rows(), a.cols());
  const MatrixK id = MatrixK::identity(f, a.rows());
  for (int i = p.degree(); i >= 0; --i) {
    result = result * a + id.scaled(p.coeff(static_cast<std::size_t>(i)));
  }
  return result;
}

}  // namespace plift
