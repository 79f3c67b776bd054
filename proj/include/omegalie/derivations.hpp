#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "omegalie/algebra.hpp"

namespace omegalie {

/// Subspace of gl_n closed under the derivation (or ω-derivation) rules of
/// a fixed algebra. Row i of a basis matrix is the image of x_i.
struct DerivationSpace {
  std::size_t algebra_dim = 0;
  MatrixSubspace space;

  [[nodiscard]] std::size_t dim() const { return space.dim(); }
  [[nodiscard]] std::vector<Matrix> basis() const { return space.basis(); }
};

DerivationSpace derivation_algebra(const OmegaAlgebra& g);
/// Derivations d that also satisfy ω(dx, y) + ω(x, dy) = 0.
DerivationSpace omega_derivation_algebra(const OmegaAlgebra& g);

struct DerivationViolation {
  std::size_t i, j;
  Vector residual;  // d[x_i,x_j] - [d x_i, x_j] - [x_i, d x_j]
};

/// Direct substitution on basis pairs, independent of the solver.
std::variant<Ok, DerivationViolation> check_derivation(const OmegaAlgebra& g, const Matrix& d);
bool is_derivation(const OmegaAlgebra& g, const Matrix& d);

/// ω(d x_i, x_j) + ω(x_i, d x_j).
Scalar omega_derivation_residual(const OmegaAlgebra& g, const Matrix& d, std::size_t i, std::size_t j);

struct OmegaDerivationViolation {
  std::size_t i, j;
  Scalar residual;
};
/// First basis pair i<j whose ω residual is nonzero.
std::optional<OmegaDerivationViolation> first_omega_violation(const OmegaAlgebra& g, const Matrix& d);

struct CounterexamplePair {
  std::size_t a, b;  // indices into the canonical basis
  Matrix commutator;
};
std::variant<Ok, CounterexamplePair> commutator_closure_check(const MatrixSubspace& s);
inline std::variant<Ok, CounterexamplePair> commutator_closure_check(const DerivationSpace& s) {
  return commutator_closure_check(s.space);
}

enum class LieTag { G1Power, G2, Sl2, Unknown };

struct LieStructureReport {
  std::size_t dim = 0;
  bool is_abelian = false;
  bool is_solvable = false;
  bool is_nilpotent = false;
  Scalar killing_det;
  LieTag tag = LieTag::Unknown;
  std::vector<std::size_t> derived_series;  // dimensions, starting with dim
  std::vector<std::size_t> lower_central_series;
};

/// Throws NotClosed when the space is not a Lie subalgebra of gl_n.
LieStructureReport lie_structure(const MatrixSubspace& s);
inline LieStructureReport lie_structure(const DerivationSpace& s) { return lie_structure(s.space); }

/// `g1`, `g1^k`, `g2`, `sl2` or `unknown`.
std::string tag_name(const LieStructureReport& r);

}  // namespace omegalie
