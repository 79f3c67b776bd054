#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "omegalie/catalog.hpp"

namespace omegalie {

using Params = std::vector<Scalar>;

/// A parametric matrix family as tabulated for one catalog key.
struct ParametricMatrix {
  std::vector<std::string> params;
  std::function<Matrix(const Params&)> eval;
};

/// Derivation row for one key, transcribed as printed.
struct TabulatedDerivations {
  ParametricMatrix family;
  std::size_t dim;            // stated or implied dimension
  bool omega_equal;           // claimed Der_ω = Der
  std::optional<std::string> tag;  // identification tag, 3-dim rows only
};

TabulatedDerivations tabulated_derivations(const CatalogKey& key);

/// Instances at unit parameters (one parameter 1, the rest 0).
std::vector<Matrix> unit_instances(const ParametricMatrix& f);
MatrixSubspace unit_span(const ParametricMatrix& f, std::size_t n);

/// Automorphism row for one key, transcribed as printed.
struct TabulatedAutomorphisms {
  ParametricMatrix family;
  std::string condition;  // side conditions in plain text
  std::function<bool(const Params&)> admissible;
  std::optional<bool> omega_equal;  // claimed Aut_ω = Aut, 3-dim rows only
  std::optional<bool> unipotent;    // claimed unipotency column, 3-dim rows only
  std::optional<std::string> group_properties;
};

TabulatedAutomorphisms tabulated_automorphisms(const CatalogKey& key);

/// Parameter points satisfying the row's side conditions: three rational
/// points and one Gaussian point. Open conditions take parameters in order
/// from fixed generic tuples; equality constraints (a^2 = 1, ab - cd = 1,
/// the a' quadratic) are solved exactly, restricted to perfect-square
/// discriminant points for the G and H rows.
std::vector<Params> automorphism_samples(const CatalogKey& key);

/// Matrix used for the exp(Der) obstruction on B: rows (1,0,0; 0,-1,0; 0,a,-1).
Matrix b_obstruction_target(const Scalar& a);

}  // namespace omegalie
