#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omegalie/algebra.hpp"

namespace omegalie {

enum class Family {
  L1, L2, A, B, C,
  L1_1, L1_2, L1_3, L1_4, L1_5, L1_6, L1_7, L1_8,
  L2_1, L2_2, L2_3, L2_4,
  Bt, E1, F1, G1, H1, At, Ct,
};

struct FamilyInfo {
  Family family;
  std::string cli_name;  // e.g. "L1_6", "Ct"
  std::string display;   // e.g. "L_{1,6}", "C~_α"
  std::size_t dim;
  bool has_alpha;
  std::vector<Scalar> excluded;  // α values rejected by build
  std::vector<Scalar> special;   // α values with their own table rows
};

/// All families in catalog order: the five 3-dimensional ones, then the
/// 4-dimensional ones.
const std::vector<FamilyInfo>& list_catalog();
const FamilyInfo& family_info(Family f);
std::optional<Family> family_from_name(std::string_view cli_name);

struct CatalogKey {
  Family family;
  std::optional<Scalar> alpha;

  friend bool operator==(const CatalogKey&, const CatalogKey&) = default;
};

/// Parses `NAME` or `NAME:ALPHA`. Throws ParseError for an unknown name or
/// malformed α, InvalidParameter when α is missing, superfluous or excluded.
CatalogKey parse_key(std::string_view text);
/// Inverse of parse_key, e.g. `A:2/3`, `L1_6`.
std::string to_string(const CatalogKey& key);
/// Table-style label, e.g. `C_α (α=2)` or `C_1`.
std::string display_name(const CatalogKey& key);

/// Throws InvalidParameter on a missing, superfluous or excluded α.
void check_key(const CatalogKey& key);

/// Throws InvalidParameter on a missing, superfluous or excluded α.
OmegaAlgebra build(const CatalogKey& key);

/// Relations exactly as tabulated, for the two families whose tabulated
/// relations fail the ω-Jacobi identity (L1_1 and Bt); nullopt otherwise.
std::optional<OmegaAlgebra> build_as_tabulated(const CatalogKey& key);

/// Default α samples used across the report and the regression suite.
std::vector<Scalar> default_alpha_samples();

/// Every valid key obtained by pairing each family with the given α samples
/// (plus the family's special values), in catalog order and then ascending
/// α by (re, im). Families without α appear once.
std::vector<CatalogKey> sample_keys(const std::vector<Scalar>& alphas);

}  // namespace omegalie
