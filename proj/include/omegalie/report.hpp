#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "omegalie/catalog.hpp"

namespace omegalie {

struct ReportRow {
  CatalogKey key;
  std::size_t der_dim = 0;
  std::size_t der_omega_dim = 0;
  bool der_omega_equal = false;
  std::size_t table_dim = 0;
  bool table_span_equal = false;
  bool table_omega_equal = false;
  std::string tag;
  std::string table_tag;  // empty when the table has none
  bool multiplicative = false;
  std::string tau;        // e.g. `y*`; empty when not multiplicative
  std::vector<std::string> notes;
};

ReportRow derivation_row(const CatalogKey& key);

struct AutRow {
  CatalogKey key;
  std::string point;    // e.g. `a=2, b=3`
  std::string verdict;  // `ok`, `not invertible`, `hom violation at (y,z)`
  bool automorphism = false;
  bool omega_preserved = false;
  std::string table_omega_equal;  // `true`, `false` or empty
};

std::vector<AutRow> automorphism_rows(const CatalogKey& key);

struct ReportConfig {
  std::vector<Scalar> alphas;
  bool json = false;
};

/// Parses a comma-separated α list such as `2,-2,1/2,3+1i`.
std::vector<Scalar> parse_alpha_list(std::string_view text);

/// α samples from OMEGA_LIE_ALPHA_SAMPLES, or the defaults when unset.
std::vector<Scalar> alpha_samples_from_env();

/// Deterministic document: catalog order, then ascending α by (re, im).
std::string emit_report(const ReportConfig& config);

}  // namespace omegalie
