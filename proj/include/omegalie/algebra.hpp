#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "omegalie/linalg.hpp"

namespace omegalie {

/// Positive verdict shared by every check that returns a variant.
struct Ok {};

template <class V>
bool is_ok(const V& v) {
  return std::holds_alternative<Ok>(v);
}

/// Finite-dimensional ω-Lie algebra given by structure constants
/// [x_i, x_j] = sum_k c(i,j,k) x_k and a bilinear form ω(x_i, x_j) = omega(i,j).
///
/// Construction rejects non-skew input; the ω-Jacobi identity is not
/// enforced here (see check_omega_jacobi).
class OmegaAlgebra {
 public:
  /// `constants` is flat with index (i*n + j)*n + k. Throws ValidationError.
  OmegaAlgebra(std::vector<std::string> basis, std::vector<Scalar> constants, Matrix omega);

  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<std::string>& basis() const { return basis_; }
  [[nodiscard]] const std::string& name(std::size_t i) const { return basis_.at(i); }
  [[nodiscard]] std::optional<std::size_t> index_of(const std::string& name) const;

  [[nodiscard]] const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim() + j) * dim() + k];
  }
  [[nodiscard]] const std::vector<Scalar>& constants() const { return c_; }
  [[nodiscard]] const Matrix& omega() const { return omega_; }

  /// Coordinates of [x_i, x_j].
  [[nodiscard]] Vector bracket_basis(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::string> basis_;
  std::vector<Scalar> c_;
  Matrix omega_;
};

/// Incremental construction by basis names. Setting [a,b] also sets [b,a],
/// so the result is skew by construction.
class AlgebraBuilder {
 public:
  explicit AlgebraBuilder(std::vector<std::string> basis);

  AlgebraBuilder& bracket(const std::string& a, const std::string& b,
                          const std::vector<std::pair<std::string, Scalar>>& value);
  AlgebraBuilder& omega(const std::string& a, const std::string& b, const Scalar& value);
  [[nodiscard]] OmegaAlgebra build() const;

 private:
  std::size_t index(const std::string& name) const;

  std::vector<std::string> basis_;
  std::vector<Scalar> c_;
  Matrix omega_;
};

Vector basis_vector(std::size_t n, std::size_t i);

/// Throws DimensionMismatch.
Vector bracket(const OmegaAlgebra& g, const Vector& u, const Vector& v);
/// Throws DimensionMismatch.
Scalar omega_eval(const OmegaAlgebra& g, const Vector& u, const Vector& v);

struct JacobiViolation {
  std::size_t i, j, k;
  Vector residual;
};
using JacobiResult = std::variant<Ok, JacobiViolation>;

/// Checks [[x,y],z] + [[y,z],x] + [[z,x],y] = ω(x,y)z + ω(y,z)x + ω(z,x)y on
/// basis triples i<j<k; both sides are alternating, so that suffices.
JacobiResult check_omega_jacobi(const OmegaAlgebra& g);

std::size_t omega_rank(const OmegaAlgebra& g);
bool is_trivial(const OmegaAlgebra& g);

/// Matrix of ad_{x_i} acting on column coordinate vectors:
/// entry (k, j) is c(i, j, k).
Matrix ad_matrix(const OmegaAlgebra& g, std::size_t i);

/// Renders a linear combination of names, e.g. `y - 2z`, `(1+1i)x`, or `0`.
std::string format_combination(const std::vector<std::string>& names, const Vector& v);
std::string format_vector(const OmegaAlgebra& g, const Vector& v);

}  // namespace omegalie
