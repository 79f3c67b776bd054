#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "omegalie/algebra.hpp"

namespace omegalie {

struct NotInvertible {};
struct HomViolation {
  std::size_t i, j;
  Vector residual;  // σ[x_i,x_j] - [σx_i, σx_j]
};
struct OmegaViolation {
  std::size_t i, j;
  Scalar image;     // ω(σx_i, σx_j)
  Scalar original;  // ω(x_i, x_j)
};

using AutVerdict = std::variant<Ok, NotInvertible, HomViolation>;
using OmegaAutVerdict = std::variant<Ok, NotInvertible, HomViolation, OmegaViolation>;

/// Row i of `s` is σ(x_i). Throws DimensionMismatch for a nonconforming matrix.
AutVerdict is_automorphism(const OmegaAlgebra& g, const Matrix& s);
OmegaAutVerdict is_omega_automorphism(const OmegaAlgebra& g, const Matrix& s);

struct GroupCounterexample {
  std::size_t a, b;  // indices of σ and τ in the member list
  Matrix product;    // σ^{-1} τ
  OmegaAutVerdict verdict;
};

/// Checks σ^{-1}τ for every ordered pair of members. Throws MemberInvalid if
/// a member is not an ω-automorphism.
std::variant<Ok, GroupCounterexample> group_closure_sample(const OmegaAlgebra& g, const std::vector<Matrix>& members);

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

struct ExpResult {
  enum class Mode { ExactNilpotent, Numeric };
  Mode mode;
  std::optional<Matrix> exact;  // exact mode
  ComplexMatrix numeric;        // numeric mode
  unsigned truncation_order = 0;
  double error_bound = 0.0;
};

bool is_nilpotent(const Matrix& d);

/// Finite sum of d^k / k!. Throws NonSquare or NotNilpotent.
ExpResult exp_exact_nilpotent(const Matrix& d);

/// Terms through d^order / order!, with a remainder bound
/// |d|^(order+1) / (order+1)! * e^|d| in the Frobenius norm, which dominates
/// the operator norm. Throws InvalidParameter for order 0, NonSquare.
ExpResult exp_numeric(const Matrix& d, unsigned order);

/// Exact logarithm of a unipotent matrix as the finite series in s - I.
/// Nullopt when s is not unipotent.
std::optional<Matrix> unipotent_log(const Matrix& s);

/// True when every element of the span is nilpotent, certified by all
/// products of dim-many basis elements vanishing. False means not certified.
bool certify_nilpotent_span(const MatrixSubspace& s);

struct InImage {
  Matrix derivation;
};
struct NotInImageWitness {
  std::string reason;
  std::optional<std::size_t> flag_index;  // position on the invariant flag
  std::optional<Scalar> eigenvalue;
};
struct Inconclusive {
  std::string reason;
};
using ExpImageResult = std::variant<InImage, NotInImageWitness, Inconclusive>;

/// Decides σ ∈ exp(Der(g)) where exact certificates exist. Throws
/// TargetInvalid when σ is not an automorphism.
ExpImageResult exp_image_experiment(const OmegaAlgebra& g, const Matrix& target);

}  // namespace omegalie
