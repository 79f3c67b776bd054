#include "omegalie/automorphisms.hpp"

#include <cmath>

#include "omegalie/derivations.hpp"

namespace omegalie {
namespace {

void check_shape(const OmegaAlgebra& g, const Matrix& s) {
  if (s.rows() != g.dim() || s.cols() != g.dim()) {
    throw DimensionMismatch("candidate matrix does not match algebra dimension");
  }
}

ComplexMatrix to_complex(const Matrix& m) {
  ComplexMatrix c(m.rows(), std::vector<std::complex<double>>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c[i][j] = m(i, j).to_complex();
  return c;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  ComplexMatrix p(n, std::vector<std::complex<double>>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t j = 0; j < m; ++j) p[i][j] += a[i][t] * b[t][j];
  return p;
}

double frobenius(const Matrix& m) {
  double s = 0.0;
  for (const auto& x : m.flat()) s += std::norm(x.to_complex());
  return std::sqrt(s);
}

// Triangular matrices leave the coordinate flag invariant; their diagonal
// entries are the eigenvalues on it.
std::optional<std::size_t> first_nonunit_diagonal(const Matrix& s) {
  bool lower = true;
  bool upper = true;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (s(i, j).is_zero()) continue;
      if (j > i) lower = false;
      if (j < i) upper = false;
    }
  }
  if (!lower && !upper) return std::nullopt;
  for (std::size_t i = 0; i < s.rows(); ++i)
    if (!s(i, i).is_one()) return i;
  return std::nullopt;
}

}  // namespace

AutVerdict is_automorphism(const OmegaAlgebra& g, const Matrix& s) {
  check_shape(g, s);
  if (det(s).is_zero()) return NotInvertible{};
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector r = apply_rows(g.bracket_basis(i, j), s);
      const Vector rhs = bracket(g, s.row(i), s.row(j));
      bool zero = true;
      for (std::size_t t = 0; t < n; ++t) {
        r[t] -= rhs[t];
        zero = zero && r[t].is_zero();
      }
      if (!zero) return HomViolation{i, j, r};
    }
  }
  return Ok{};
}

OmegaAutVerdict is_omega_automorphism(const OmegaAlgebra& g, const Matrix& s) {
  AutVerdict v = is_automorphism(g, s);
  if (std::holds_alternative<NotInvertible>(v)) return NotInvertible{};
  if (auto* h = std::get_if<HomViolation>(&v)) return *h;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar image = omega_eval(g, s.row(i), s.row(j));
      if (!(image == g.omega()(i, j))) return OmegaViolation{i, j, image, g.omega()(i, j)};
    }
  }
  return Ok{};
}

std::variant<Ok, GroupCounterexample> group_closure_sample(const OmegaAlgebra& g, const std::vector<Matrix>& members) {
  std::vector<Matrix> inverses;
  for (std::size_t a = 0; a < members.size(); ++a) {
    if (!is_ok(is_omega_automorphism(g, members[a]))) {
      throw MemberInvalid("member " + std::to_string(a) + " is not an omega-automorphism");
    }
    inverses.push_back(*inverse(members[a]));
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < members.size(); ++b) {
      // Row convention: the map x -> σ^{-1}(τ(x)) has matrix τ · σ^{-1}.
      Matrix product = members[b] * inverses[a];
      OmegaAutVerdict v = is_omega_automorphism(g, product);
      if (!is_ok(v)) return GroupCounterexample{a, b, std::move(product), std::move(v)};
    }
  }
  return Ok{};
}

bool is_nilpotent(const Matrix& d) {
  if (!d.square()) throw NonSquare();
  return power(d, static_cast<unsigned>(d.rows())).is_zero();
}

ExpResult exp_exact_nilpotent(const Matrix& d) {
  if (!is_nilpotent(d)) throw NotNilpotent();
  const std::size_t n = d.rows();
  Matrix sum = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    term = term * d * Scalar(Rational(1, static_cast<long>(k)));
    sum += term;
  }
  ExpResult r{ExpResult::Mode::ExactNilpotent, sum, {}, 0, 0.0};
  return r;
}

ExpResult exp_numeric(const Matrix& d, unsigned order) {
  if (order == 0) throw InvalidParameter("truncation order must be at least 1");
  if (!d.square()) throw NonSquare();
  const std::size_t n = d.rows();
  const ComplexMatrix dc = to_complex(d);
  ComplexMatrix sum(n, std::vector<std::complex<double>>(n));
  ComplexMatrix term(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i) sum[i][i] = term[i][i] = 1.0;
  for (unsigned k = 1; k <= order; ++k) {
    term = multiply(term, dc);
    for (auto& row : term)
      for (auto& x : row) x /= static_cast<double>(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum[i][j] += term[i][j];
  }
  const double norm = frobenius(d);
  double bound = 0.0;
  if (norm > 0.0) {
    bound = std::exp(static_cast<double>(order + 1) * std::log(norm) - std::lgamma(order + 2.0) + norm);
  }
  ExpResult r{ExpResult::Mode::Numeric, std::nullopt, std::move(sum), order, bound};
  return r;
}

std::optional<Matrix> unipotent_log(const Matrix& s) {
  if (!s.square()) throw NonSquare();
  const std::size_t n = s.rows();
  const Matrix nil = s - Matrix::identity(n);
  if (!is_nilpotent(nil)) return std::nullopt;
  Matrix sum(n, n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    term = term * nil;
    const long sign = k % 2 == 1 ? 1 : -1;
    sum += term * Scalar(Rational(sign, static_cast<long>(k)));
  }
  return sum;
}

bool certify_nilpotent_span(const MatrixSubspace& s) {
  const auto basis = s.basis();
  const std::size_t n = s.rows();
  MatrixSubspace products = s;
  for (std::size_t len = 1; len < n && products.dim() > 0; ++len) {
    std::vector<Matrix> next;
    for (const auto& p : products.basis())
      for (const auto& b : basis) next.push_back(p * b);
    products = MatrixSubspace::span(n, n, next);
  }
  return products.dim() == 0;
}

ExpImageResult exp_image_experiment(const OmegaAlgebra& g, const Matrix& target) {
  if (target.rows() != g.dim() || target.cols() != g.dim()) throw TargetInvalid("target does not match algebra dimension");
  if (!is_ok(is_automorphism(g, target))) throw TargetInvalid("target is not an automorphism");
  const DerivationSpace der = derivation_algebra(g);
  const bool nilpotent_family = certify_nilpotent_span(der.space);

  if (auto log = unipotent_log(target)) {
    if (der.space.contains(*log)) return InImage{*log};
    if (nilpotent_family) {
      // exp is injective from nilpotent to unipotent matrices with inverse log.
      return NotInImageWitness{"log of the unipotent target is not a derivation", std::nullopt, std::nullopt};
    }
    return Inconclusive{"unipotent target whose nilpotent logarithm is not a derivation"};
  }
  if (nilpotent_family) {
    NotInImageWitness w{"every exp(d) is unipotent but the target is not", std::nullopt, std::nullopt};
    if (auto idx = first_nonunit_diagonal(target)) {
      w.flag_index = *idx;
      w.eigenvalue = target(*idx, *idx);
      w.reason = "eigenvalue " + to_string(*w.eigenvalue) + " != 1 on the invariant coordinate flag";
    }
    return w;
  }
  return Inconclusive{"non-unipotent target and a derivation algebra that is not nilpotent"};
}

}  // namespace omegalie
