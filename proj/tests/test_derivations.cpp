#include <doctest.h>

#include <map>
#include <random>

#include "omegalie/derivations.hpp"
#include "omegalie/families.hpp"
#include "support.hpp"

using namespace omegalie;

namespace {

Matrix e3(std::size_t i, std::size_t j) { return Matrix::unit(3, i - 1, j - 1); }
Matrix e4(std::size_t i, std::size_t j) { return Matrix::unit(4, i - 1, j - 1); }

OmegaAlgebra alg(Family f, std::optional<Scalar> a = std::nullopt) { return build({f, a}); }

MatrixSubspace span_of(std::size_t n, const std::vector<Matrix>& ms) { return MatrixSubspace::span(n, n, ms); }

}  // namespace

TEST_CASE("Der(L1)") {
  const DerivationSpace d = derivation_algebra(alg(Family::L1));
  CHECK(d.dim() == 2);
  CHECK(subspace_equal(d.space, span_of(3, {e3(1, 3) - e3(2, 3), e3(3, 3)})));
  CHECK(subspace_equal(omega_derivation_algebra(alg(Family::L1)).space, d.space));
  const auto t = tabulated_derivations({Family::L1, std::nullopt});
  CHECK(subspace_equal(d.space, unit_span(t.family, 3)));
}

TEST_CASE("Der of an abelian Lie algebra is all of gl_3") {
  CHECK(derivation_algebra(support::abelian(3)).dim() == 9);
  CHECK(derivation_algebra(support::sl2()).dim() == 3);
}

TEST_CASE("dimensions of Der across the catalog") {
  const std::map<Family, std::size_t> expected{
      {Family::L1, 2},   {Family::L2, 1},   {Family::A, 1},    {Family::B, 1},    {Family::C, 1},    {Family::L1_1, 6},
      {Family::L1_2, 4}, {Family::L1_3, 2}, {Family::L1_4, 2}, {Family::L1_5, 4}, {Family::L1_6, 3}, {Family::L1_7, 3},
      {Family::L1_8, 2}, {Family::L2_1, 3}, {Family::L2_2, 1}, {Family::L2_3, 2}, {Family::L2_4, 1}, {Family::Bt, 2},
      {Family::E1, 4},   {Family::F1, 2},   {Family::G1, 2},   {Family::H1, 2},   {Family::At, 2},   {Family::Ct, 2}};
  for (const auto& key : support::default_keys()) {
    INFO(to_string(key));
    const DerivationSpace d = derivation_algebra(build(key));
    std::size_t want = expected.at(key.family);
    if (key.family == Family::C && key.alpha == Scalar(1)) want = 3;
    if (key.family == Family::Ct && key.alpha == Scalar(1)) want = 4;
    CHECK(d.dim() == want);
    CHECK(d.dim() == tabulated_derivations(key).dim);
    for (const auto& m : d.basis()) CHECK(is_ok(check_derivation(build(key), m)));
  }
}

TEST_CASE("tabulated spans agree except for four families") {
  for (const auto& key : support::default_keys()) {
    INFO(to_string(key));
    const auto t = tabulated_derivations(key);
    const std::size_t n = build(key).dim();
    const bool equal = subspace_equal(derivation_algebra(build(key)).space, unit_span(t.family, n));
    const bool known_misprint =
        key.family == Family::L1_6 || key.family == Family::L1_8 || key.family == Family::L2_4 || key.family == Family::E1;
    CHECK(equal == !known_misprint);
  }
}

TEST_CASE("corrected tables for the misprinted derivation rows") {
  // L1_6 with the (1,1) entry a instead of -a.
  CHECK(subspace_equal(derivation_algebra(alg(Family::L1_6)).space,
                       span_of(4, {e4(3, 3), e4(1, 3) - e4(2, 3) + e4(4, 3),
                                   e4(1, 1) - Scalar(2) * e4(1, 4) + e4(2, 4) - e4(4, 4)})));
  // L1_8 with the (3,3) entry -a instead of a.
  CHECK(subspace_equal(derivation_algebra(alg(Family::L1_8)).space,
                       span_of(4, {e4(1, 3) - e4(2, 3) + e4(4, 3),
                                   e4(1, 1) - Scalar(2) * e4(1, 4) - Scalar(2) * e4(2, 3) + e4(2, 4) - e4(3, 3) +
                                       Scalar(2) * e4(4, 3) - e4(4, 4)})));
  // L2_4 with the (4,4) entry -4a instead of 4a.
  CHECK(subspace_equal(derivation_algebra(alg(Family::L2_4)).space,
                       span_of(4, {Matrix{{2, 1, 1, 1}, {0, 0, 0, -1}, {0, 0, -2, 1}, {0, 0, 0, -4}}})));
  // E1 with the (2,3) entry -a instead of the constant -α.
  for (const Scalar& al : support::default_alpha_samples()) {
    if (al == Scalar(1)) continue;
    CHECK(subspace_equal(derivation_algebra(alg(Family::E1, al)).space,
                         span_of(4, {e4(1, 3) - e4(2, 3), -(al + Scalar(1)) * e4(1, 4) + e4(2, 4), e4(3, 3), e4(4, 4)})));
  }
}

TEST_CASE("Der_ω equals Der for every sampled algebra") {
  // Applying d to the ω-Jacobi identity leaves δ(x,y)z + δ(y,z)x + δ(z,x)y = 0
  // with δ(x,y) = ω(dx,y) + ω(x,dy); in dimension at least 3 this forces δ = 0.
  for (const auto& key : support::default_keys()) {
    INFO(to_string(key));
    const OmegaAlgebra g = build(key);
    const DerivationSpace d = derivation_algebra(g);
    CHECK(subspace_equal(omega_derivation_algebra(g).space, d.space));
    for (const auto& m : d.basis()) CHECK_FALSE(first_omega_violation(g, m).has_value());
  }
}

TEST_CASE("the printed L1_6 witness") {
  const OmegaAlgebra g = alg(Family::L1_6);
  const auto t = tabulated_derivations({Family::L1_6, std::nullopt});
  CHECK_FALSE(t.omega_equal);
  const Matrix w = t.family.eval({1, 0, 0});
  CHECK(omega_derivation_residual(g, w, 0, 1) == Scalar(-2));
  const auto v = check_derivation(g, w);
  REQUIRE(std::holds_alternative<DerivationViolation>(v));
  CHECK(std::get<DerivationViolation>(v).i == 0);
  CHECK(std::get<DerivationViolation>(v).j == 1);
}

TEST_CASE("Der_ω can be smaller than Der in dimension 2") {
  const OmegaAlgebra g = AlgebraBuilder({"x", "y"}).bracket("x", "y", {{"y", 1}}).omega("x", "y", 1).build();
  CHECK(derivation_algebra(g).dim() == 2);
  CHECK(omega_derivation_algebra(g).dim() == 1);
}

TEST_CASE("commutator closure") {
  CHECK(is_ok(commutator_closure_check(omega_derivation_algebra(alg(Family::L1)))));
  CHECK(is_ok(commutator_closure_check(derivation_algebra(alg(Family::C, Scalar(1))))));
  CHECK(is_ok(commutator_closure_check(span_of(2, {Matrix::unit(2, 0, 1)}))));
  const auto bad = commutator_closure_check(span_of(2, {Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)}));
  REQUIRE(std::holds_alternative<CounterexamplePair>(bad));
  CHECK(std::get<CounterexamplePair>(bad).commutator == Matrix{{1, 0}, {0, -1}});
  CHECK_THROWS_AS(lie_structure(span_of(2, {Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)})), NotClosed);
}

TEST_CASE("structure of derivation algebras") {
  const auto l1 = lie_structure(derivation_algebra(alg(Family::L1)));
  CHECK(l1.dim == 2);
  CHECK(l1.is_solvable);
  CHECK_FALSE(l1.is_nilpotent);
  CHECK(tag_name(l1) == "g2");
  const auto l2 = lie_structure(derivation_algebra(alg(Family::L2)));
  CHECK(l2.is_abelian);
  CHECK(tag_name(l2) == "g1");
  const auto c1 = lie_structure(derivation_algebra(alg(Family::C, Scalar(1))));
  CHECK(c1.dim == 3);
  CHECK_FALSE(c1.killing_det.is_zero());
  CHECK(tag_name(c1) == "sl2");
  const auto gl2 = lie_structure(derivation_algebra(support::abelian(2)));
  CHECK(gl2.dim == 4);
  CHECK_FALSE(gl2.is_solvable);
}

TEST_CASE("3-dim tags match the table") {
  for (const auto& key : support::default_keys()) {
    const auto t = tabulated_derivations(key);
    if (!t.tag) continue;
    INFO(to_string(key));
    CHECK(tag_name(lie_structure(derivation_algebra(build(key)))) == *t.tag);
  }
}

TEST_CASE("4-dim tags are frozen") {
  const std::map<Family, std::string> frozen{
      {Family::L1_3, "g2"},   {Family::L1_4, "g2"},   {Family::L2_3, "g2"},   {Family::F1, "g2"},
      {Family::L1_8, "g1^2"}, {Family::Bt, "g1^2"},   {Family::G1, "g1^2"},   {Family::H1, "g1^2"},
      {Family::At, "g1^2"},   {Family::L2_2, "g1"},   {Family::L2_4, "g1"},   {Family::L1_1, "unknown"},
      {Family::L1_2, "unknown"}, {Family::L1_5, "unknown"}, {Family::L1_6, "unknown"}, {Family::L1_7, "unknown"},
      {Family::L2_1, "unknown"}, {Family::E1, "unknown"}};
  for (const auto& key : support::default_keys()) {
    const auto it = frozen.find(key.family);
    if (it == frozen.end()) continue;
    INFO(to_string(key));
    CHECK(tag_name(lie_structure(derivation_algebra(build(key)))) == it->second);
  }
}

TEST_CASE("Der is conjugated by a change of basis") {
  std::mt19937_64 rng(1234);
  const auto keys = support::default_keys();
  for (int t = 0; t < 25; ++t) {
    const OmegaAlgebra g = build(keys[rng() % keys.size()]);
    const Matrix p = support::random_invertible(rng, g.dim());
    const OmegaAlgebra h = support::transport(g, p);
    const Matrix pinv = *inverse(p);
    std::vector<Matrix> conj;
    for (const auto& d : derivation_algebra(g).basis()) conj.push_back(p * d * pinv);
    CHECK(subspace_equal(derivation_algebra(h).space, MatrixSubspace::span(g.dim(), g.dim(), conj)));
  }
}
