#include "omegalie/linalg.hpp"

#include <sstream>
#include <utility>

namespace omegalie {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("matrix entry count does not match its shape");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, std::span<const Scalar> flat) {
  return {rows, cols, std::vector<Scalar>(flat.begin(), flat.end())};
}

Vector Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Scalar Matrix::trace() const {
  if (!square()) throw NonSquare();
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

Vector apply_rows(const Vector& v, const Matrix& m) {
  if (v.size() != m.rows()) throw DimensionMismatch("vector length does not match matrix rows");
  Vector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

Vector apply_cols(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw DimensionMismatch("vector length does not match matrix columns");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  return a * b - b * a;
}

Matrix power(const Matrix& m, unsigned k) {
  if (!m.square()) throw NonSquare();
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Scalar inv = a(r, c).inv();
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const Matrix& m) {
  return rref(m).rank;
}

std::vector<Vector> nullspace(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> raw;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    raw.push_back(std::move(v));
  }
  return RowSpace::span(cols, raw).basis();
}

Scalar det(const Matrix& m) {
  if (!m.square()) throw NonSquare();
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    const Scalar inv = a(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw NonSquare();
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length does not match matrix rows");
  const std::size_t cols = m.cols();
  Matrix aug(m.rows(), cols + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b[i];
  }
  const RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == cols) return std::nullopt;
  Vector x(cols);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, cols);
  return x;
}

RowSpace RowSpace::span(std::size_t ambient, std::span<const Vector> vectors) {
  Matrix m(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw DimensionMismatch("spanning vector has wrong length");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
  }
  RrefResult r = rref(m);
  RowSpace s(ambient);
  s.reduced_ = Matrix(r.rank, ambient);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < ambient; ++j) s.reduced_(i, j) = r.reduced(i, j);
  s.pivots_ = std::move(r.pivots);
  return s;
}

std::vector<Vector> RowSpace::basis() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(reduced_.row(i));
  return out;
}

std::optional<Vector> RowSpace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match subspace ambient");
  // In reduced echelon form the coefficient of basis row i is the entry of
  // v at that row's pivot; membership is whether those coefficients rebuild v.
  Vector coords(dim());
  Vector rest(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    coords[i] = v[pivots_[i]];
    if (coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!reduced_(i, j).is_zero()) rest[j] -= coords[i] * reduced_(i, j);
  }
  for (const auto& x : rest)
    if (!x.is_zero()) return std::nullopt;
  return coords;
}

bool RowSpace::contains(std::span<const Scalar> v) const {
  return coordinates(v).has_value();
}

bool RowSpace::contains(const RowSpace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambients");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    const Vector r = other.reduced_.row(i);
    if (!contains(std::span<const Scalar>(r))) return false;
  }
  return true;
}

MatrixSubspace MatrixSubspace::span(std::size_t rows, std::size_t cols, std::span<const Matrix> matrices) {
  std::vector<Vector> flats;
  flats.reserve(matrices.size());
  for (const auto& m : matrices) {
    if (m.rows() != rows || m.cols() != cols) throw DimensionMismatch("spanning matrix has wrong shape");
    flats.emplace_back(m.flat().begin(), m.flat().end());
  }
  return from_flat(rows, cols, flats);
}

MatrixSubspace MatrixSubspace::from_flat(std::size_t rows, std::size_t cols, std::span<const Vector> flats) {
  MatrixSubspace s(rows, cols);
  s.space_ = RowSpace::span(rows * cols, flats);
  return s;
}

std::vector<Matrix> MatrixSubspace::basis() const {
  std::vector<Matrix> out;
  for (const auto& v : space_.basis()) out.push_back(Matrix::from_flat(rows_, cols_, v));
  return out;
}

bool MatrixSubspace::contains(const Matrix& m) const {
  return coordinates(m).has_value();
}

std::optional<Vector> MatrixSubspace::coordinates(const Matrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) throw DimensionMismatch("matrix shape does not match subspace");
  return space_.coordinates(m.flat());
}

bool MatrixSubspace::contains(const MatrixSubspace& other) const {
  if (other.rows_ != rows_ || other.cols_ != cols_) throw DimensionMismatch("subspaces of different matrix shapes");
  return space_.contains(other.space_);
}

bool subspace_equal(const MatrixSubspace& a, const MatrixSubspace& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("subspaces of different matrix shapes");
  return a.flat_space() == b.flat_space();
}

}  // namespace omegalie
