#include "omegalie/algebra.hpp"

#include <sstream>

namespace omegalie {

OmegaAlgebra::OmegaAlgebra(std::vector<std::string> basis, std::vector<Scalar> constants, Matrix omega)
    : basis_(std::move(basis)), c_(std::move(constants)), omega_(std::move(omega)) {
  const std::size_t n = basis_.size();
  if (c_.size() != n * n * n) throw ValidationError("structure constant count must be dim^3");
  if (omega_.rows() != n || omega_.cols() != n) throw ValidationError("omega must be a dim x dim matrix");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j)
      if (basis_[i] == basis_[j]) throw ValidationError("duplicate basis name '" + basis_[i] + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!(c(i, j, k) == -c(j, i, k))) {
          throw ValidationError("bracket is not skew at [" + basis_[i] + "," + basis_[j] + "]");
        }
      }
      if (!(omega_(i, j) == -omega_(j, i))) {
        throw ValidationError("omega is not skew at (" + basis_[i] + "," + basis_[j] + ")");
      }
    }
  }
}

std::optional<std::size_t> OmegaAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == name) return i;
  return std::nullopt;
}

Vector OmegaAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = c(i, j, k);
  return v;
}

AlgebraBuilder::AlgebraBuilder(std::vector<std::string> basis)
    : basis_(std::move(basis)),
      c_(basis_.size() * basis_.size() * basis_.size()),
      omega_(basis_.size(), basis_.size()) {}

std::size_t AlgebraBuilder::index(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == name) return i;
  throw ValidationError("unknown basis element '" + name + "'");
}

AlgebraBuilder& AlgebraBuilder::bracket(const std::string& a, const std::string& b,
                                        const std::vector<std::pair<std::string, Scalar>>& value) {
  const std::size_t n = basis_.size();
  const std::size_t i = index(a);
  const std::size_t j = index(b);
  if (i == j) throw ValidationError("bracket of '" + a + "' with itself must vanish");
  for (std::size_t k = 0; k < n; ++k) {
    c_[(i * n + j) * n + k] = 0;
    c_[(j * n + i) * n + k] = 0;
  }
  for (const auto& [name, coeff] : value) {
    const std::size_t k = index(name);
    c_[(i * n + j) * n + k] += coeff;
    c_[(j * n + i) * n + k] -= coeff;
  }
  return *this;
}

AlgebraBuilder& AlgebraBuilder::omega(const std::string& a, const std::string& b, const Scalar& value) {
  const std::size_t i = index(a);
  const std::size_t j = index(b);
  if (i == j) throw ValidationError("omega of '" + a + "' with itself must vanish");
  omega_(i, j) = value;
  omega_(j, i) = -value;
  return *this;
}

OmegaAlgebra AlgebraBuilder::build() const {
  return {basis_, c_, omega_};
}

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

Vector bracket(const OmegaAlgebra& g, const Vector& u, const Vector& v) {
  const std::size_t n = g.dim();
  if (u.size() != n || v.size() != n) throw DimensionMismatch("bracket operands do not match algebra dimension");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || v[j].is_zero()) continue;
      const Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!g.c(i, j, k).is_zero()) out[k] += uv * g.c(i, j, k);
    }
  }
  return out;
}

Scalar omega_eval(const OmegaAlgebra& g, const Vector& u, const Vector& v) {
  const std::size_t n = g.dim();
  if (u.size() != n || v.size() != n) throw DimensionMismatch("omega operands do not match algebra dimension");
  Scalar s;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!v[j].is_zero() && !g.omega()(i, j).is_zero()) s += u[i] * v[j] * g.omega()(i, j);
  }
  return s;
}

JacobiResult check_omega_jacobi(const OmegaAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector x = basis_vector(n, i);
        const Vector y = basis_vector(n, j);
        const Vector z = basis_vector(n, k);
        Vector r = bracket(g, g.bracket_basis(i, j), z);
        const Vector r2 = bracket(g, g.bracket_basis(j, k), x);
        const Vector r3 = bracket(g, g.bracket_basis(k, i), y);
        for (std::size_t t = 0; t < n; ++t) r[t] += r2[t] + r3[t];
        r[k] -= g.omega()(i, j);
        r[i] -= g.omega()(j, k);
        r[j] -= g.omega()(k, i);
        for (const auto& s : r) {
          if (!s.is_zero()) return JacobiViolation{i, j, k, r};
        }
      }
    }
  }
  return Ok{};
}

std::size_t omega_rank(const OmegaAlgebra& g) {
  return rank(g.omega());
}

bool is_trivial(const OmegaAlgebra& g) {
  return g.omega().is_zero();
}

Matrix ad_matrix(const OmegaAlgebra& g, std::size_t i) {
  const std::size_t n = g.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = g.c(i, j, k);
  return m;
}

std::string format_combination(const std::vector<std::string>& names, const Vector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const Scalar& a = v[k];
    std::string coeff;
    bool negative = false;
    if (a.is_real()) {
      negative = sgn(a.re()) < 0;
      const Scalar abs = negative ? -a : a;
      if (!abs.is_one()) coeff = to_string(abs);
    } else {
      coeff = "(" + to_string(a) + ")";
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    os << coeff << names.at(k);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::string format_vector(const OmegaAlgebra& g, const Vector& v) {
  return format_combination(g.basis(), v);
}

}  // namespace omegalie
