#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "omegalie/algebra.hpp"

namespace omegalie {

/// Action matrices ρ(x_i) of an m-dimensional module, acting on column vectors.
struct ModuleAction {
  std::size_t dim = 0;
  std::vector<Matrix> actions;
};

struct ModuleViolation {
  std::size_t i, j;
  Matrix residual;  // ρ([x_i,x_j]) - [ρ(x_i), ρ(x_j)] - ω(x_i,x_j) I
};

/// Throws DimensionMismatch when the action count or matrix shapes are wrong.
std::variant<Ok, ModuleViolation> check_module(const OmegaAlgebra& g, const ModuleAction& m);

struct MultiplicativityCertificate {
  bool verdict = false;
  std::optional<Vector> tau;  // coordinates τ(x_i); free coordinates are 0
  /// First basis pair (in i<j order) whose equation makes the system
  /// inconsistent.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  /// An earlier pair that is already inconsistent with the witness on its
  /// own, when one exists.
  std::optional<std::pair<std::size_t, std::size_t>> conflicts_with;
};

/// Solves τ([x_i,x_j]) = ω(x_i,x_j) over all pairs i<j.
MultiplicativityCertificate multiplicativity(const OmegaAlgebra& g);

/// The 1-dimensional module ρ(x_i) = (τ(x_i)).
ModuleAction one_dim_module(const Vector& tau);

/// Ω-Lie algebra on g ⊕ V with V basis v1..vm. Throws ModuleInvalid.
OmegaAlgebra semidirect_product(const OmegaAlgebra& g, const ModuleAction& m);

/// Adjoint action ρ(x_i) = ad_{x_i}.
ModuleAction adjoint_module(const OmegaAlgebra& g);
bool adjoint_self_module_check(const OmegaAlgebra& g);

struct LadderRow {
  std::size_t n;          // chain length; the module has dimension n + 1
  Scalar eta1_top;        // 1 - (n-2)α/2, from y annihilating the top of the chain
  Scalar eta1_forced;     // 1 + α, from [x,y] = y acting on z·v1
  Scalar relation_residual;  // α + (n-2)α/2 = nα/2; zero iff both hold
  bool admissible;
};

struct LadderAnalysis {
  Scalar alpha;
  std::vector<LadderRow> rows;
  std::vector<std::size_t> admissible;
};

/// Chain lengths n in 0..max_dim-1 compatible with both η₁ constraints for
/// C_α. Throws InvalidAlpha for α in {0, -1}.
LadderAnalysis c_alpha_ladder(const Scalar& alpha, std::size_t max_dim);

/// The (n+1)-dimensional C_α action on the chain w_j = z^j·v1:
/// x w_j = (η₁ + jα) w_j, z w_j = w_{j+1}, y w_j = j(η₁ - 1 + (j-3)α/2) w_{j-1}.
ModuleAction ladder_module(const Scalar& alpha, std::size_t n, const Scalar& eta1);

/// Dimension of the associative span of words in I and the action matrices.
std::size_t word_span_dim(const ModuleAction& m);

/// Burnside test: true iff the words span all m x m matrices. Over Q(i) a
/// false verdict means reducible over Q(i). Throws ModuleInvalid.
bool burnside_irreducible(const OmegaAlgebra& g, const ModuleAction& m);

/// Direct sum of two modules of the same algebra.
ModuleAction direct_sum(const ModuleAction& a, const ModuleAction& b);

}  // namespace omegalie
