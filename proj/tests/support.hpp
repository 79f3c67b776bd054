#pragma once

#include <random>

#include "omegalie/algebra.hpp"
#include "omegalie/catalog.hpp"

namespace support {

using namespace omegalie;

inline Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return Scalar(num(rng), den(rng));
}

inline Scalar random_scalar(std::mt19937_64& rng) {
  return Scalar(random_rational(rng).re(), std::bernoulli_distribution(0.5)(rng) ? random_rational(rng).re() : 0);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, double density = 1.0) {
  Matrix m(r, c);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng)) m(i, j) = random_scalar(rng);
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, 0.6);
    if (!det(m).is_zero()) return m;
  }
}

/// The same algebra in the basis x'_i = sum_j p(i,j) x_j.
inline OmegaAlgebra transport(const OmegaAlgebra& g, const Matrix& p) {
  const std::size_t n = g.dim();
  const Matrix pinv = *inverse(p);
  std::vector<Scalar> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector b = apply_rows(bracket(g, p.row(i), p.row(j)), pinv);
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = b[k];
    }
  Matrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w(i, j) = omega_eval(g, p.row(i), p.row(j));
  return OmegaAlgebra(g.basis(), c, w);
}

inline OmegaAlgebra abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i + 1));
  return AlgebraBuilder(names).build();
}

inline OmegaAlgebra sl2() {
  return AlgebraBuilder({"h", "e", "f"})
      .bracket("h", "e", {{"e", 2}})
      .bracket("h", "f", {{"f", -2}})
      .bracket("e", "f", {{"h", 1}})
      .build();
}

inline OmegaAlgebra heisenberg() {
  return AlgebraBuilder({"p", "q", "c"}).bracket("p", "q", {{"c", 1}}).build();
}

/// Lie algebras (ω = 0) in random bases.
inline OmegaAlgebra random_lie(std::mt19937_64& rng) {
  const int pick = std::uniform_int_distribution<int>(0, 2)(rng);
  const OmegaAlgebra base = pick == 0 ? sl2() : pick == 1 ? heisenberg() : abelian(3);
  return transport(base, random_invertible(rng, 3));
}

inline std::vector<CatalogKey> default_keys() { return sample_keys(default_alpha_samples()); }

}  // namespace support
