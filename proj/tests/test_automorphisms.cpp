#include <doctest.h>

#include <cmath>
#include <random>

#include "omegalie/automorphisms.hpp"
#include "omegalie/derivations.hpp"
#include "omegalie/families.hpp"
#include "support.hpp"

using namespace omegalie;

namespace {

OmegaAlgebra alg(Family f, std::optional<Scalar> a = std::nullopt) { return build({f, a}); }

Matrix l1_aut(const Scalar& a, const Scalar& b) { return Matrix{{1, 0, a}, {0, 1, -a}, {0, 0, b}}; }

Matrix aut_of(Family f, std::optional<Scalar> a, const Params& p) { return tabulated_automorphisms({f, a}).family.eval(p); }

Matrix der_of(Family f, std::optional<Scalar> a, const Params& p) { return tabulated_derivations({f, a}).family.eval(p); }

}  // namespace

TEST_CASE("automorphism verdicts on L1") {
  const OmegaAlgebra g = alg(Family::L1);
  CHECK(is_ok(is_automorphism(g, l1_aut(5, 2))));
  CHECK(std::holds_alternative<NotInvertible>(is_automorphism(g, l1_aut(5, 0))));
  CHECK(is_ok(is_omega_automorphism(g, l1_aut(-3, Scalar::parse("2+1i")))));
  const auto v = is_omega_automorphism(g, Matrix::identity(3) * Scalar(2));
  REQUIRE(std::holds_alternative<HomViolation>(v));
  CHECK(std::get<HomViolation>(v).i == 0);
  CHECK(std::get<HomViolation>(v).j == 1);
  CHECK(std::get<HomViolation>(v).residual == Vector{0, -2, 0});
  CHECK_THROWS_AS(is_automorphism(g, Matrix::identity(4)), DimensionMismatch);
  for (const auto& key : support::default_keys()) CHECK(is_ok(is_omega_automorphism(build(key), Matrix::identity(build(key).dim()))));
}

TEST_CASE("ω violations are reported separately") {
  // Rescaling y preserves the bracket but scales ω.
  const OmegaAlgebra g = AlgebraBuilder({"x", "y"}).bracket("x", "y", {{"y", 1}}).omega("x", "y", 1).build();
  const Matrix s{{1, 0}, {0, 3}};
  CHECK(is_ok(is_automorphism(g, s)));
  const auto v = is_omega_automorphism(g, s);
  REQUIRE(std::holds_alternative<OmegaViolation>(v));
  CHECK(std::get<OmegaViolation>(v).image == Scalar(3));
  CHECK(std::get<OmegaViolation>(v).original == Scalar(1));
}

TEST_CASE("A_α automorphisms") {
  for (const Scalar& al : {Scalar(2), Scalar(1, 2), Scalar::parse("3+1i")}) {
    const OmegaAlgebra g = alg(Family::A, al);
    CHECK(is_ok(is_omega_automorphism(g, aut_of(Family::A, al, {3}))));
    CHECK(aut_of(Family::A, al, {1}) * aut_of(Family::A, al, {2}) == aut_of(Family::A, al, {3}));
    CHECK(is_ok(group_closure_sample(g, {aut_of(Family::A, al, {1}), aut_of(Family::A, al, {2})})));
  }
}

TEST_CASE("group closure samples") {
  const OmegaAlgebra g = alg(Family::L1);
  CHECK(is_ok(group_closure_sample(g, {l1_aut(1, 2), l1_aut(0, 3)})));
  CHECK(is_ok(group_closure_sample(g, {Matrix::identity(3)})));
  CHECK_THROWS_AS(group_closure_sample(g, {l1_aut(1, 2), Matrix::identity(3) * Scalar(2)}), MemberInvalid);
}

TEST_CASE("tabulated automorphism rows at sampled points") {
  for (const auto& key : support::default_keys()) {
    INFO(to_string(key));
    const OmegaAlgebra g = build(key);
    const auto row = tabulated_automorphisms(key);
    const auto points = automorphism_samples(key);
    CHECK(points.size() >= 3);
    for (const auto& p : points) {
      CHECK(row.admissible(p));
      const Matrix s = row.family.eval(p);
      const bool expect = !(key.family == Family::Ct && key.alpha == Scalar(1));
      CHECK(is_ok(is_automorphism(g, s)) == expect);
      if (g.dim() == 3) CHECK(is_ok(is_omega_automorphism(g, s)));
    }
  }
}

TEST_CASE("the C~_1 row with the block determinant forced to 1") {
  const OmegaAlgebra g = alg(Family::Ct, Scalar(1));
  const auto row = tabulated_automorphisms({Family::Ct, Scalar(1)});
  for (const auto& p : automorphism_samples({Family::Ct, Scalar(1)})) {
    // (a, c; b, d') with d' = (1 + bc)/a instead of 1/a.
    Matrix s = row.family.eval(p);
    s(2, 2) = (Scalar(1) + p[1] * p[2]) / p[0];
    CHECK(is_ok(is_omega_automorphism(g, s)));
  }
}

TEST_CASE("G and H rows at α = 0 and with exact quadratic roots") {
  for (const Family f : {Family::G1, Family::H1}) {
    for (const Scalar& al : {Scalar(0), Scalar(2), Scalar(-2), Scalar(1, 2)}) {
      const auto pts = automorphism_samples({f, al});
      CHECK(pts.size() >= 3);
      for (const auto& p : pts) CHECK(is_ok(is_automorphism(alg(f, al), aut_of(f, al, p))));
    }
  }
}

TEST_CASE("randomized subgroup closure") {
  std::mt19937_64 rng(424242);
  const auto keys = support::default_keys();
  for (int t = 0; t < 500; ++t) {
    const CatalogKey key = keys[rng() % keys.size()];
    if (key.family == Family::Ct && key.alpha == Scalar(1)) continue;
    const auto pts = automorphism_samples(key);
    const auto row = tabulated_automorphisms(key);
    const Matrix a = row.family.eval(pts[rng() % pts.size()]);
    const Matrix b = row.family.eval(pts[rng() % pts.size()]);
    INFO(to_string(key));
    CHECK(is_ok(group_closure_sample(build(key), {a, b})));
  }
}

TEST_CASE("randomized derivation closure") {
  std::mt19937_64 rng(515151);
  const auto keys = support::default_keys();
  for (int t = 0; t < 500; ++t) {
    const OmegaAlgebra g = build(keys[rng() % keys.size()]);
    const auto basis = omega_derivation_algebra(g).basis();
    Matrix u(g.dim(), g.dim()), v(g.dim(), g.dim());
    for (const auto& m : basis) {
      u += m * support::random_scalar(rng);
      v += m * support::random_scalar(rng);
    }
    const Matrix c = commutator(u, v);
    CHECK(is_derivation(g, c));
    CHECK_FALSE(first_omega_violation(g, c).has_value());
  }
}

TEST_CASE("exact exponentials") {
  CHECK(*exp_exact_nilpotent(Matrix(3, 3)).exact == Matrix::identity(3));
  const Matrix ea = *exp_exact_nilpotent(der_of(Family::A, Scalar(2), {1})).exact;
  CHECK(ea == Matrix{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
  CHECK(ea(2, 0) == Scalar(1));
  const Matrix eb = *exp_exact_nilpotent(der_of(Family::B, std::nullopt, {1})).exact;
  CHECK(eb == Matrix::identity(3) + Matrix::unit(3, 2, 1));
  CHECK_THROWS_AS(exp_exact_nilpotent(Matrix::unit(3, 2, 2)), NotNilpotent);
  CHECK_THROWS_AS(exp_exact_nilpotent(Matrix(2, 3)), NonSquare);
}

TEST_CASE("exp of a nilpotent derivation is an ω-automorphism") {
  for (const auto& key : support::default_keys()) {
    const OmegaAlgebra g = build(key);
    for (const auto& d : derivation_algebra(g).basis()) {
      if (!is_nilpotent(d)) continue;
      INFO(to_string(key));
      CHECK(is_ok(is_omega_automorphism(g, *exp_exact_nilpotent(d).exact)));
    }
  }
}

TEST_CASE("numeric exponentials") {
  const ExpResult z = exp_numeric(Matrix(3, 3), 5);
  CHECK(z.error_bound == 0.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(z.numeric[i][j] == std::complex<double>(i == j ? 1.0 : 0.0));

  const double e = std::exp(1.0);
  const ExpResult r = exp_numeric(Matrix::unit(3, 2, 2), 20);
  CHECK(std::abs(r.numeric[2][2] - e) < 1e-15);
  CHECK(r.error_bound < 1e-15);

  const Matrix d = Matrix::unit(3, 0, 2) - Matrix::unit(3, 1, 2) + Matrix::unit(3, 2, 2);
  const ExpResult l = exp_numeric(d, 30);
  CHECK(std::abs(l.numeric[0][2] - (e - 1)) < 1e-14);
  CHECK(std::abs(l.numeric[1][2] - (1 - e)) < 1e-14);
  CHECK(std::abs(l.numeric[2][2] - e) < 1e-14);
  CHECK(l.error_bound < 1e-14);

  CHECK_THROWS_AS(exp_numeric(d, 0), InvalidParameter);
  // Exact and numeric modes agree on nilpotent input.
  const Matrix n = der_of(Family::A, Scalar(2), {3});
  const Matrix ex = *exp_exact_nilpotent(n).exact;
  const ExpResult nu = exp_numeric(n, 10);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(nu.numeric[i][j] - ex(i, j).to_complex()) < 1e-12);
}

TEST_CASE("exp image experiments") {
  const OmegaAlgebra a2 = alg(Family::A, Scalar(2));
  const auto in = exp_image_experiment(a2, aut_of(Family::A, Scalar(2), {2}));
  REQUIRE(std::holds_alternative<InImage>(in));
  CHECK(std::get<InImage>(in).derivation == der_of(Family::A, Scalar(2), {2}));

  const OmegaAlgebra b = alg(Family::B);
  const auto out = exp_image_experiment(b, b_obstruction_target(3));
  REQUIRE(std::holds_alternative<NotInImageWitness>(out));
  CHECK(std::get<NotInImageWitness>(out).eigenvalue == Scalar(-1));
  CHECK(std::get<NotInImageWitness>(out).flag_index == 1u);

  for (const auto& key : support::default_keys()) {
    const auto id = exp_image_experiment(build(key), Matrix::identity(build(key).dim()));
    REQUIRE(std::holds_alternative<InImage>(id));
    CHECK(std::get<InImage>(id).derivation.is_zero());
  }
  CHECK_THROWS_AS(exp_image_experiment(alg(Family::L1), Matrix::identity(3) * Scalar(2)), TargetInvalid);
  // Der(L1) contains E33, which is not nilpotent, so no certificate exists.
  CHECK(std::holds_alternative<Inconclusive>(exp_image_experiment(alg(Family::L1), l1_aut(5, 2))));
}

TEST_CASE("unipotent logarithm inverts the exponential") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 3;
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) d(i, j) = support::random_scalar(rng);
    CHECK(*unipotent_log(*exp_exact_nilpotent(d).exact) == d);
  }
  CHECK_FALSE(unipotent_log(Matrix::identity(2) * Scalar(2)).has_value());
}
