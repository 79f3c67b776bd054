#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omegalie/exactnum.hpp"

namespace omegalie {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Elementary matrix with a single 1 at (i, j), indices 0-based.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
  /// Reshapes a flat row-major vector of length rows*cols.
  static Matrix from_flat(std::size_t rows, std::size_t cols, std::span<const Scalar> flat);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Scalar> flat() const { return data_; }
  [[nodiscard]] Vector row(std::size_t r) const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Scalar trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Row vector times matrix: the image of `v` under the map whose row i is
/// the image of basis vector i.
Vector apply_rows(const Vector& v, const Matrix& m);
/// Matrix times column vector.
Vector apply_cols(const Matrix& m, const Vector& v);

/// Matrix commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, unsigned k);

std::string to_string(const Matrix& m);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}. Each free variable in turn is set to 1 (others
/// 0) and the resulting vectors are put in reduced echelon form.
std::vector<Vector> nullspace(const Matrix& m);

/// Throws NonSquare.
Scalar det(const Matrix& m);
/// Nullopt when singular. Throws NonSquare.
std::optional<Matrix> inverse(const Matrix& m);

/// One solution of m x = b (free variables set to 0), or nullopt when the
/// system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Subspace of Q(i)^N stored by its reduced echelon basis, so two spans are
/// equal iff their stored bases are identical.
class RowSpace {
 public:
  explicit RowSpace(std::size_t ambient) : ambient_(ambient), reduced_(0, ambient) {}
  static RowSpace span(std::size_t ambient, std::span<const Vector> vectors);

  [[nodiscard]] std::size_t ambient() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return pivots_.size(); }
  [[nodiscard]] std::vector<Vector> basis() const;
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

  [[nodiscard]] bool contains(std::span<const Scalar> v) const;
  /// Coordinates in the stored basis, or nullopt when v is outside the span.
  [[nodiscard]] std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  [[nodiscard]] bool contains(const RowSpace& other) const;

  friend bool operator==(const RowSpace& a, const RowSpace& b) {
    return a.ambient_ == b.ambient_ && a.reduced_ == b.reduced_;
  }

 private:
  std::size_t ambient_;
  Matrix reduced_;
  std::vector<std::size_t> pivots_;
};

/// Span of rows x cols matrices, compared through their flattenings.
class MatrixSubspace {
 public:
  MatrixSubspace(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), space_(rows * cols) {}
  static MatrixSubspace span(std::size_t rows, std::size_t cols, std::span<const Matrix> matrices);
  static MatrixSubspace from_flat(std::size_t rows, std::size_t cols, std::span<const Vector> flats);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::size_t dim() const { return space_.dim(); }
  [[nodiscard]] std::vector<Matrix> basis() const;
  [[nodiscard]] const RowSpace& flat_space() const { return space_; }

  [[nodiscard]] bool contains(const Matrix& m) const;
  [[nodiscard]] std::optional<Vector> coordinates(const Matrix& m) const;
  /// Throws DimensionMismatch for different matrix shapes.
  [[nodiscard]] bool contains(const MatrixSubspace& other) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  RowSpace space_;
};

/// Throws DimensionMismatch for different matrix shapes.
bool subspace_equal(const MatrixSubspace& a, const MatrixSubspace& b);

}  // namespace omegalie
