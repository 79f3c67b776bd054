#include "omegalie/representations.hpp"

namespace omegalie {
namespace {

Matrix pair_rows(const OmegaAlgebra& g, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Matrix m(pairs.size(), g.dim());
  for (std::size_t r = 0; r < pairs.size(); ++r)
    for (std::size_t k = 0; k < g.dim(); ++k) m(r, k) = g.c(pairs[r].first, pairs[r].second, k);
  return m;
}

Vector pair_rhs(const OmegaAlgebra& g, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Vector b(pairs.size());
  for (std::size_t r = 0; r < pairs.size(); ++r) b[r] = g.omega()(pairs[r].first, pairs[r].second);
  return b;
}

bool consistent(const OmegaAlgebra& g, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  return solve(pair_rows(g, pairs), pair_rhs(g, pairs)).has_value();
}

}  // namespace

std::variant<Ok, ModuleViolation> check_module(const OmegaAlgebra& g, const ModuleAction& m) {
  const std::size_t n = g.dim();
  if (m.actions.size() != n) throw DimensionMismatch("module needs one action matrix per basis element");
  for (const auto& a : m.actions) {
    if (a.rows() != m.dim || a.cols() != m.dim) throw DimensionMismatch("action matrix does not match module dimension");
  }
  const Matrix id = Matrix::identity(m.dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix r(m.dim, m.dim);
      for (std::size_t k = 0; k < n; ++k)
        if (!g.c(i, j, k).is_zero()) r += m.actions[k] * g.c(i, j, k);
      r -= commutator(m.actions[i], m.actions[j]);
      r -= id * g.omega()(i, j);
      if (!r.is_zero()) return ModuleViolation{i, j, std::move(r)};
    }
  }
  return Ok{};
}

MultiplicativityCertificate multiplicativity(const OmegaAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  MultiplicativityCertificate cert;
  if (auto tau = solve(pair_rows(g, pairs), pair_rhs(g, pairs))) {
    cert.verdict = true;
    cert.tau = std::move(*tau);
    return cert;
  }
  std::vector<std::pair<std::size_t, std::size_t>> prefix;
  for (const auto& p : pairs) {
    prefix.push_back(p);
    if (consistent(g, prefix)) continue;
    cert.witness = p;
    for (std::size_t q = 0; q + 1 < prefix.size(); ++q) {
      if (!consistent(g, {prefix[q], p})) {
        cert.conflicts_with = prefix[q];
        break;
      }
    }
    break;
  }
  return cert;
}

ModuleAction one_dim_module(const Vector& tau) {
  ModuleAction m{1, {}};
  for (const auto& t : tau) m.actions.push_back(Matrix{{t}});
  return m;
}

OmegaAlgebra semidirect_product(const OmegaAlgebra& g, const ModuleAction& m) {
  if (!is_ok(check_module(g, m))) throw ModuleInvalid("action does not satisfy the module identity");
  const std::size_t n = g.dim();
  const std::size_t total = n + m.dim;
  std::vector<std::string> basis = g.basis();
  for (std::size_t a = 0; a < m.dim; ++a) basis.push_back("v" + std::to_string(a + 1));
  std::vector<Scalar> c(total * total * total);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return c[(i * total + j) * total + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) at(i, j, k) = g.c(i, j, k);
  // [x_i, v_a] = ρ(x_i) v_a, the a-th column of the action matrix.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < m.dim; ++a) {
      for (std::size_t b = 0; b < m.dim; ++b) {
        at(i, n + a, n + b) = m.actions[i](b, a);
        at(n + a, i, n + b) = -m.actions[i](b, a);
      }
    }
  }
  Matrix omega(total, total);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) omega(i, j) = g.omega()(i, j);
  return {std::move(basis), std::move(c), std::move(omega)};
}

ModuleAction adjoint_module(const OmegaAlgebra& g) {
  ModuleAction m{g.dim(), {}};
  for (std::size_t i = 0; i < g.dim(); ++i) m.actions.push_back(ad_matrix(g, i));
  return m;
}

bool adjoint_self_module_check(const OmegaAlgebra& g) {
  return is_ok(check_module(g, adjoint_module(g)));
}

LadderAnalysis c_alpha_ladder(const Scalar& alpha, std::size_t max_dim) {
  if (alpha.is_zero() || alpha == Scalar(-1)) throw InvalidAlpha("alpha must avoid 0 and -1");
  LadderAnalysis out{alpha, {}, {}};
  for (std::size_t n = 0; n < max_dim; ++n) {
    const Scalar nn(static_cast<long>(n));
    LadderRow row{n, Scalar(1) - (nn - Scalar(2)) * alpha / Scalar(2), Scalar(1) + alpha, {}, false};
    row.relation_residual = alpha + (nn - Scalar(2)) * alpha / Scalar(2);
    row.admissible = (row.eta1_top - row.eta1_forced).is_zero() && row.relation_residual.is_zero();
    if (row.admissible) out.admissible.push_back(n);
    out.rows.push_back(std::move(row));
  }
  return out;
}

ModuleAction ladder_module(const Scalar& alpha, std::size_t n, const Scalar& eta1) {
  const std::size_t d = n + 1;
  Matrix x(d, d), y(d, d), z(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Scalar jj(static_cast<long>(j));
    x(j, j) = eta1 + jj * alpha;
    if (j + 1 < d) z(j + 1, j) = 1;
    if (j > 0) y(j - 1, j) = jj * (eta1 - Scalar(1) + (jj - Scalar(3)) * alpha / Scalar(2));
  }
  return {d, {x, y, z}};
}

std::size_t word_span_dim(const ModuleAction& m) {
  const std::size_t d = m.dim;
  std::vector<Matrix> words{Matrix::identity(d)};
  MatrixSubspace span = MatrixSubspace::span(d, d, words);
  // Words of length <= L span a nondecreasing chain of subspaces that
  // stabilizes once one step adds nothing; d^2 steps always suffice.
  for (std::size_t len = 0; len < d * d && span.dim() < d * d; ++len) {
    std::vector<Matrix> next = span.basis();
    const std::size_t before = span.dim();
    for (const auto& w : span.basis())
      for (const auto& a : m.actions) next.push_back(w * a);
    span = MatrixSubspace::span(d, d, next);
    if (span.dim() == before) break;
  }
  return span.dim();
}

bool burnside_irreducible(const OmegaAlgebra& g, const ModuleAction& m) {
  if (!is_ok(check_module(g, m))) throw ModuleInvalid("action does not satisfy the module identity");
  return word_span_dim(m) == m.dim * m.dim;
}

ModuleAction direct_sum(const ModuleAction& a, const ModuleAction& b) {
  if (a.actions.size() != b.actions.size()) throw DimensionMismatch("modules of different algebras");
  const std::size_t d = a.dim + b.dim;
  ModuleAction s{d, {}};
  for (std::size_t i = 0; i < a.actions.size(); ++i) {
    Matrix m(d, d);
    for (std::size_t r = 0; r < a.dim; ++r)
      for (std::size_t c = 0; c < a.dim; ++c) m(r, c) = a.actions[i](r, c);
    for (std::size_t r = 0; r < b.dim; ++r)
      for (std::size_t c = 0; c < b.dim; ++c) m(a.dim + r, a.dim + c) = b.actions[i](r, c);
    s.actions.push_back(std::move(m));
  }
  return s;
}

}  // namespace omegalie
