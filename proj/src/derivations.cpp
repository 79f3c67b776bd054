#include "omegalie/derivations.hpp"

namespace omegalie {
namespace {

// Rows of the linear system in the n^2 unknowns D(p,q), flattened row-major.
std::vector<Vector> derivation_rows(const OmegaAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t t = 0; t < n; ++t) {
        Vector r(n * n);
        for (std::size_t k = 0; k < n; ++k) r[k * n + t] += g.c(i, j, k);
        for (std::size_t p = 0; p < n; ++p) {
          r[i * n + p] -= g.c(p, j, t);
          r[j * n + p] -= g.c(i, p, t);
        }
        rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

std::vector<Vector> omega_rows(const OmegaAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector r(n * n);
      for (std::size_t p = 0; p < n; ++p) {
        r[i * n + p] += g.omega()(p, j);
        r[j * n + p] += g.omega()(i, p);
      }
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

DerivationSpace solve_system(const OmegaAlgebra& g, const std::vector<Vector>& rows) {
  const std::size_t n = g.dim();
  Matrix sys(rows.size(), n * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) sys(r, c) = rows[r][c];
  return {n, MatrixSubspace::from_flat(n, n, nullspace(sys))};
}

MatrixSubspace span_of(std::size_t n, const std::vector<Matrix>& ms) {
  return MatrixSubspace::span(n, n, ms);
}

std::vector<Matrix> commutators(const std::vector<Matrix>& left, const std::vector<Matrix>& right) {
  std::vector<Matrix> out;
  for (const auto& a : left)
    for (const auto& b : right) out.push_back(commutator(a, b));
  return out;
}

}  // namespace

DerivationSpace derivation_algebra(const OmegaAlgebra& g) {
  return solve_system(g, derivation_rows(g));
}

DerivationSpace omega_derivation_algebra(const OmegaAlgebra& g) {
  auto rows = derivation_rows(g);
  auto extra = omega_rows(g);
  rows.insert(rows.end(), extra.begin(), extra.end());
  return solve_system(g, rows);
}

std::variant<Ok, DerivationViolation> check_derivation(const OmegaAlgebra& g, const Matrix& d) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionMismatch("derivation matrix does not match algebra dimension");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector x = basis_vector(n, i);
      const Vector y = basis_vector(n, j);
      Vector r = apply_rows(g.bracket_basis(i, j), d);
      const Vector a = bracket(g, apply_rows(x, d), y);
      const Vector b = bracket(g, x, apply_rows(y, d));
      bool zero = true;
      for (std::size_t t = 0; t < n; ++t) {
        r[t] -= a[t] + b[t];
        zero = zero && r[t].is_zero();
      }
      if (!zero) return DerivationViolation{i, j, r};
    }
  }
  return Ok{};
}

bool is_derivation(const OmegaAlgebra& g, const Matrix& d) {
  return is_ok(check_derivation(g, d));
}

Scalar omega_derivation_residual(const OmegaAlgebra& g, const Matrix& d, std::size_t i, std::size_t j) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionMismatch("derivation matrix does not match algebra dimension");
  const Vector x = basis_vector(n, i);
  const Vector y = basis_vector(n, j);
  return omega_eval(g, apply_rows(x, d), y) + omega_eval(g, x, apply_rows(y, d));
}

std::optional<OmegaDerivationViolation> first_omega_violation(const OmegaAlgebra& g, const Matrix& d) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Scalar r = omega_derivation_residual(g, d, i, j);
      if (!r.is_zero()) return OmegaDerivationViolation{i, j, r};
    }
  }
  return std::nullopt;
}

std::variant<Ok, CounterexamplePair> commutator_closure_check(const MatrixSubspace& s) {
  const auto basis = s.basis();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      Matrix c = commutator(basis[a], basis[b]);
      if (!s.contains(c)) return CounterexamplePair{a, b, std::move(c)};
    }
  }
  return Ok{};
}

LieStructureReport lie_structure(const MatrixSubspace& s) {
  if (!is_ok(commutator_closure_check(s))) throw NotClosed("subspace is not closed under the commutator");
  const std::size_t n = s.rows();
  const auto basis = s.basis();
  LieStructureReport r;
  r.dim = basis.size();

  r.is_abelian = true;
  for (const auto& c : commutators(basis, basis)) r.is_abelian = r.is_abelian && c.is_zero();

  // Each series is nonincreasing, so it either hits 0 or stalls within dim steps.
  MatrixSubspace derived = s;
  r.derived_series.push_back(derived.dim());
  while (derived.dim() > 0) {
    MatrixSubspace next = span_of(n, commutators(derived.basis(), derived.basis()));
    if (next.dim() == derived.dim()) break;
    derived = std::move(next);
    r.derived_series.push_back(derived.dim());
  }
  r.is_solvable = derived.dim() == 0;

  MatrixSubspace lower = s;
  r.lower_central_series.push_back(lower.dim());
  while (lower.dim() > 0) {
    MatrixSubspace next = span_of(n, commutators(lower.basis(), basis));
    if (next.dim() == lower.dim()) break;
    lower = std::move(next);
    r.lower_central_series.push_back(lower.dim());
  }
  r.is_nilpotent = lower.dim() == 0;

  // Abstract structure constants from the commutators of the canonical basis.
  const std::size_t d = r.dim;
  std::vector<Matrix> ad(d, Matrix(d, d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const auto coords = s.coordinates(commutator(basis[a], basis[b]));
      for (std::size_t k = 0; k < d; ++k) ad[a](k, b) = (*coords)[k];
    }
  }
  Matrix killing(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) killing(a, b) = (ad[a] * ad[b]).trace();
  r.killing_det = det(killing);

  if (r.is_abelian && d > 0) {
    r.tag = LieTag::G1Power;
  } else if (d == 2) {
    r.tag = LieTag::G2;
  } else if (d == 3 && !r.killing_det.is_zero()) {
    r.tag = LieTag::Sl2;
  }
  return r;
}

std::string tag_name(const LieStructureReport& r) {
  switch (r.tag) {
    case LieTag::G1Power:
      return r.dim == 1 ? "g1" : "g1^" + std::to_string(r.dim);
    case LieTag::G2:
      return "g2";
    case LieTag::Sl2:
      return "sl2";
    case LieTag::Unknown:
      break;
  }
  return "unknown";
}

}  // namespace omegalie
