#include "omegalie/families.hpp"

#include <algorithm>

namespace omegalie {
namespace {

using S = Scalar;

ParametricMatrix pm(std::vector<std::string> params, std::function<Matrix(const Params&)> eval) {
  return {std::move(params), std::move(eval)};
}

bool nz(const S& s) { return !s.is_zero(); }

bool is_special(const CatalogKey& key, long value) {
  return key.alpha && *key.alpha == S(value);
}

// Generic tuples for open side conditions; the last one is non-real.
const std::vector<Params>& generic_tuples() {
  static const std::vector<Params> tuples{
      {S(2), S(3), S(5), S(7), S(11), S(13)},
      {S(-1, 2), S(4), S(-3), S(1, 3), S(2), S(-5)},
      {S(5), S(-7), S(2, 3), S(-1, 4), S(3), S(9)},
      {S(Rational(3), Rational(1)), S(-2), S(1, 2), S(5), S(-1), S(7, 2)},
  };
  return tuples;
}

}  // namespace

TabulatedDerivations tabulated_derivations(const CatalogKey& key) {
  check_key(key);
  const S al = key.alpha.value_or(S{});
  switch (key.family) {
    case Family::L1:
      return {pm({"a", "b"}, [](const Params& p) {
                return Matrix{{0, 0, p[0]}, {0, 0, -p[0]}, {0, 0, p[1]}};
              }),
              2, true, "g2"};
    case Family::L2:
      return {pm({"a"}, [](const Params& p) { return Matrix{{p[0], 0, 0}, {0, 0, 0}, {0, 0, -p[0]}}; }), 1, true, "g1"};
    case Family::A:
      return {pm({"a"}, [](const Params& p) { return Matrix{{0, 0, 0}, {p[0], 0, 0}, {p[0] / 2, p[0], 0}}; }), 1, true,
              "g1"};
    case Family::B:
      return {pm({"a"}, [](const Params& p) { return Matrix{{0, 0, 0}, {0, 0, 0}, {0, p[0], 0}}; }), 1, true, "g1"};
    case Family::C:
      if (is_special(key, 1)) {
        return {pm({"a", "b", "c"}, [](const Params& p) {
                  return Matrix{{0, 0, 0}, {0, p[0], p[2]}, {0, p[1], -p[0]}};
                }),
                3, true, "sl2"};
      }
      return {pm({"a"}, [](const Params& p) { return Matrix{{0, 0, 0}, {0, p[0], 0}, {0, 0, -p[0]}}; }), 1, true, "g1"};
    case Family::L1_1:
      return {pm({"a", "b", "c", "d", "h", "f"}, [](const Params& p) {
                return Matrix{{0, 0, p[0], p[1]}, {0, 0, -p[0], -p[1]}, {0, 0, p[2], p[3]}, {0, 0, p[4], p[5]}};
              }),
              6, true, std::nullopt};
    case Family::L1_2:
      return {pm({"a", "b", "c", "d"}, [](const Params& p) {
                return Matrix{{0, 0, p[0], p[1]}, {0, 0, p[1] - p[0], -p[1]}, {0, 0, p[2], 0}, {0, 0, p[3], p[2]}};
              }),
              4, true, std::nullopt};
    case Family::L1_3:
      return {pm({"a", "b"}, [](const Params& p) {
                return Matrix{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, p[0], 0}, {0, 0, p[1], 0}};
              }),
              2, true, std::nullopt};
    case Family::L1_4:
      return {pm({"a", "b"}, [](const Params& p) {
                return Matrix{{0, 0, p[0], 0}, {0, 0, -p[0], 0}, {0, 0, p[0], 0}, {0, 0, p[1], 0}};
              }),
              2, true, std::nullopt};
    case Family::L1_5:
      return {pm({"a", "b", "c", "d"}, [](const Params& p) {
                return Matrix{{0, 0, p[0], S(-2) * p[3]}, {0, 0, -p[0], p[3]}, {0, 0, p[1], 0}, {0, 0, 0, p[2]}};
              }),
              4, true, std::nullopt};
    case Family::L1_6:
      return {pm({"a", "b", "c"}, [](const Params& p) {
                return Matrix{{-p[0], 0, p[2], S(-2) * p[0]}, {0, 0, -p[2], p[0]}, {0, 0, p[1], 0}, {0, 0, p[2], -p[0]}};
              }),
              3, false, std::nullopt};
    case Family::L1_7:
      return {pm({"a", "b", "c"}, [](const Params& p) {
                return Matrix{{0, 0, p[2], p[1]}, {0, 0, p[1] - p[2], -p[1] / 2}, {0, 0, p[0], 0}, {0, 0, 0, p[0]}};
              }),
              3, true, std::nullopt};
    case Family::L1_8:
      return {pm({"a", "b"}, [](const Params& p) {
                const S a = p[0], b = p[1];
                return Matrix{{a, 0, b, S(-2) * a}, {0, 0, -b - S(2) * a, a}, {0, 0, a, 0}, {0, 0, b + S(2) * a, -a}};
              }),
              2, false, std::nullopt};
    case Family::L2_1:
      return {pm({"a", "b", "c"}, [](const Params& p) {
                return Matrix{{p[0], 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -p[0], p[1]}, {0, 0, 0, p[2]}};
              }),
              3, true, std::nullopt};
    case Family::L2_2:
      return {pm({"a"}, [](const Params& p) {
                return Matrix{{p[0], 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -p[0], 0}, {0, 0, 0, S(-2) * p[0]}};
              }),
              1, true, std::nullopt};
    case Family::L2_3:
      return {pm({"a", "b"}, [](const Params& p) {
                return Matrix{{0, 0, 0, p[0]}, {0, 0, 0, -p[0]}, {0, 0, 0, p[0]}, {0, 0, 0, p[1]}};
              }),
              2, true, std::nullopt};
    case Family::L2_4:
      return {pm({"a"}, [](const Params& p) {
                const S a = p[0];
                return Matrix{{S(2) * a, a, a, a}, {0, 0, 0, -a}, {0, 0, S(-2) * a, a}, {0, 0, 0, S(4) * a}};
              }),
              1, true, std::nullopt};
    case Family::Bt:
      return {pm({"a", "b"}, [](const Params& p) {
                return Matrix{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, p[0], 0, 0}, {0, 0, 0, p[1]}};
              }),
              2, true, std::nullopt};
    case Family::E1:
      // The (y, z) entry is printed as the constant -α, not a parameter.
      return {pm({"a", "b", "c", "d"}, [al](const Params& p) {
                return Matrix{{0, 0, p[0], -(al + S(1)) * p[1]}, {0, 0, -al, p[1]}, {0, 0, p[2], 0}, {0, 0, 0, p[3]}};
              }),
              4, true, std::nullopt};
    case Family::F1:
      return {pm({"a", "b"}, [al](const Params& p) {
                return Matrix{{0, 0, al * p[0], 0}, {0, 0, -al * p[0], 0}, {0, 0, p[1], 0}, {0, 0, p[0], 0}};
              }),
              2, true, std::nullopt};
    case Family::G1:
      return {pm({"a", "b"}, [al](const Params& p) {
                const S a = p[0];
                return Matrix{{-(al * a) / 2, 0, 0, a}, {a, 0, 0, -a / 2}, {0, 0, p[1], 0}, {-al * a, 0, 0, (al * a) / 2}};
              }),
              2, true, std::nullopt};
    case Family::H1:
      return {pm({"a", "b"}, [al](const Params& p) {
                const S a = p[0], b = p[1];
                return Matrix{{-(al * a) / 2, 0, a - b, a},
                              {a, 0, b, -a / 2},
                              {0, 0, (al - S(2)) * a / 2 + b, 0},
                              {-al * a, 0, -al * b, (al * a) / 2}};
              }),
              2, true, std::nullopt};
    case Family::At:
      return {pm({"a", "b"}, [](const Params& p) {
                return Matrix{{0, 0, 0, 0}, {p[0], 0, 0, 0}, {p[0] / 2, p[0], 0, 0}, {0, 0, 0, p[1]}};
              }),
              2, true, std::nullopt};
    case Family::Ct:
      if (is_special(key, 1)) {
        return {pm({"a", "b", "c", "d"}, [](const Params& p) {
                  return Matrix{{0, 0, 0, 0}, {0, p[0], p[2], 0}, {0, p[3], -p[0], 0}, {0, 0, 0, p[1]}};
                }),
                4, true, std::nullopt};
      }
      return {pm({"a", "b"}, [](const Params& p) {
                return Matrix{{0, 0, 0, 0}, {0, p[0], 0, 0}, {0, 0, -p[0], 0}, {0, 0, 0, p[1]}};
              }),
              2, true, std::nullopt};
  }
  throw InvalidParameter("unknown family");
}

std::vector<Matrix> unit_instances(const ParametricMatrix& f) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < f.params.size(); ++i) {
    Params p(f.params.size());
    p[i] = 1;
    out.push_back(f.eval(p));
  }
  return out;
}

MatrixSubspace unit_span(const ParametricMatrix& f, std::size_t n) {
  const auto inst = unit_instances(f);
  return MatrixSubspace::span(n, n, inst);
}

TabulatedAutomorphisms tabulated_automorphisms(const CatalogKey& key) {
  check_key(key);
  const S al = key.alpha.value_or(S{});
  auto always = [](const Params&) { return true; };
  switch (key.family) {
    case Family::L1:
      return {pm({"a", "b"}, [](const Params& p) { return Matrix{{1, 0, p[0]}, {0, 1, -p[0]}, {0, 0, p[1]}}; }),
              "b != 0", [](const Params& p) { return nz(p[1]); }, true, false, "soluble"};
    case Family::L2:
      return {pm({"a"}, [](const Params& p) { return Matrix{{p[0], 0, 0}, {0, 1, 0}, {0, 0, S(1) / p[0]}}; }),
              "a != 0", [](const Params& p) { return nz(p[0]); }, true, false, "abelian"};
    case Family::A:
      return {pm({"a"}, [](const Params& p) {
                const S a = p[0];
                return Matrix{{1, 0, 0}, {a, 1, 0}, {(a * a + a) / 2, a, 1}};
              }),
              "none", always, true, true, "abelian"};
    case Family::B:
      return {pm({"a", "b"}, [](const Params& p) { return Matrix{{1, 0, 0}, {0, p[0], 0}, {0, p[1], p[0]}}; }),
              "a^2 = 1", [](const Params& p) { return (p[0] * p[0]).is_one(); }, true, true, "abelian"};
    case Family::C:
      if (is_special(key, 1)) {
        return {pm({"a", "b", "c", "d"}, [](const Params& p) {
                  return Matrix{{1, 0, 0}, {0, p[0], p[2]}, {0, p[3], p[1]}};
                }),
                "ab - cd = 1", [](const Params& p) { return (p[0] * p[1] - p[2] * p[3]).is_one(); }, true, false,
                "SL2"};
      }
      return {pm({"a"}, [](const Params& p) { return Matrix{{1, 0, 0}, {0, p[0], 0}, {0, 0, S(1) / p[0]}}; }),
              "a != 0", [](const Params& p) { return nz(p[0]); }, true, false, "abelian"};
    case Family::L1_1:
      return {pm({"a", "b", "c", "d", "h", "f"}, [](const Params& p) {
                return Matrix{{1, 0, p[0], p[1]}, {0, 1, -p[0], -p[1]}, {0, 0, p[2], p[3]}, {0, 0, p[4], p[5]}};
              }),
              "dh - cf != 0", [](const Params& p) { return nz(p[3] * p[4] - p[2] * p[5]); }, {}, {}, {}};
    case Family::L1_2:
      return {pm({"a", "b", "c", "d"}, [](const Params& p) {
                return Matrix{{1, 0, p[0], p[1]}, {0, 1, p[1] - p[0], -p[1]}, {0, 0, p[2], 0}, {0, 0, p[3], p[2]}};
              }),
              "c != 0", [](const Params& p) { return nz(p[2]); }, {}, {}, {}};
    case Family::L1_3:
      return {pm({"a", "b"}, [](const Params& p) {
                return Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, p[0], 0}, {0, 0, p[1], 1}};
              }),
              "a != 0", [](const Params& p) { return nz(p[0]); }, {}, {}, {}};
    case Family::L1_4:
      return {pm({"a", "b"}, [](const Params& p) {
                return Matrix{{1, 0, p[0], 0}, {0, 1, -p[0], 0}, {0, 0, p[0] + S(1), 0}, {0, 0, p[1], 1}};
              }),
              "a != -1", [](const Params& p) { return nz(p[0] + S(1)); }, {}, {}, {}};
    case Family::L1_5:
      return {pm({"a", "b", "c", "d"}, [](const Params& p) {
                return Matrix{{1, 0, p[0], S(-2) * p[3]}, {0, 1, -p[0], p[3]}, {0, 0, p[1], 0}, {0, 0, 0, p[2]}};
              }),
              "bc != 0", [](const Params& p) { return nz(p[1] * p[2]); }, {}, {}, {}};
    case Family::L1_6:
      return {pm({"a", "b", "c"}, [](const Params& p) {
                const S a = p[0], b = p[1], ib = S(1) / p[1];
                return Matrix{{b, 0, a, ib - b}, {0, 1, -a, S(1) - ib}, {0, 0, p[2], 0}, {0, 0, a, ib}};
              }),
              "b != 0 != c", [](const Params& p) { return nz(p[1]) && nz(p[2]); }, {}, {}, {}};
    case Family::L1_7:
      return {pm({"a", "b", "c"}, [](const Params& p) {
                const S a = p[0], b = p[1], c = p[2];
                return Matrix{{1, 0, c, S(-2) * b}, {0, 1, S(-2) * b - c, b}, {0, 0, a, 0}, {0, 0, 0, a}};
              }),
              "a != 0", [](const Params& p) { return nz(p[0]); }, {}, {}, {}};
    case Family::L1_8:
      return {pm({"a", "b"}, [](const Params& p) {
                const S a = p[0], b = p[1], ia = S(1) / p[0];
                return Matrix{{ia, 0, a + b - ia, a - ia}, {0, 1, -b, S(1) - a}, {0, 0, a, 0}, {0, 0, b, a}};
              }),
              "a != 0", [](const Params& p) { return nz(p[0]); }, {}, {}, {}};
    case Family::L2_1:
      return {pm({"a", "b", "c"}, [](const Params& p) {
                return Matrix{{p[0], 0, 0, 0}, {0, 1, 0, 0}, {0, 0, S(1) / p[0], p[1]}, {0, 0, 0, p[2]}};
              }),
              "a != 0 != c", [](const Params& p) { return nz(p[0]) && nz(p[2]); }, {}, {}, {}};
    case Family::L2_2:
      return {pm({"a"}, [](const Params& p) {
                const S ia = S(1) / p[0];
                return Matrix{{p[0], 0, 0, 0}, {0, 1, 0, 0}, {0, 0, ia, 0}, {0, 0, 0, ia * ia}};
              }),
              "a != 0", [](const Params& p) { return nz(p[0]); }, {}, {}, {}};
    case Family::L2_3:
      return {pm({"a", "b"}, [](const Params& p) {
                return Matrix{{1, 0, 0, p[0]}, {0, 1, 0, -p[0]}, {0, 0, 1, p[0]}, {0, 0, 0, p[1]}};
              }),
              "b != 0", [](const Params& p) { return nz(p[1]); }, {}, {}, {}};
    case Family::L2_4:
      return {pm({"a"}, [](const Params& p) {
                const S a = p[0], one = 1;
                return Matrix{{a, (a - one) / 2, (a * a - one) / (S(4) * a), (a - one) * (a + one) * (a + one) / (S(8) * a * a)},
                              {0, 1, 0, (one - a * a) / (S(4) * a * a)},
                              {0, 0, one / a, (a - one) / (S(2) * a * a)},
                              {0, 0, 0, one / (a * a)}};
              }),
              "a != 0", [](const Params& p) { return nz(p[0]); }, {}, {}, {}};
    case Family::Bt:
      return {pm({"a", "b", "c"}, [](const Params& p) {
                return Matrix{{1, 0, 0, 0}, {0, p[0], 0, 0}, {0, p[2], p[0], 0}, {0, 0, 0, p[1]}};
              }),
              "a^2 = 1, b != 0", [](const Params& p) { return (p[0] * p[0]).is_one() && nz(p[1]); }, {}, {}, {}};
    case Family::E1:
      return {pm({"a", "b", "c", "d"}, [al](const Params& p) {
                return Matrix{{1, 0, p[0], -(al + S(1)) * p[1]}, {0, 1, -p[0], p[1]}, {0, 0, p[2], 0}, {0, 0, 0, p[3]}};
              }),
              "cd != 0", [](const Params& p) { return nz(p[2] * p[3]); }, {}, {}, {}};
    case Family::F1:
      return {pm({"a", "b"}, [al](const Params& p) {
                return Matrix{{1, 0, p[0], 0}, {0, 1, -p[0], 0}, {0, 0, p[1], 0}, {0, 0, p[0] / al, 1}};
              }),
              "b != 0", [](const Params& p) { return nz(p[1]); }, {}, {}, {}};
    case Family::G1:
      if (is_special(key, 0)) {
        return {pm({"a", "b"}, [](const Params& p) {
                  const S b = p[1];
                  return Matrix{{1, 0, 0, b}, {b, 1, 0, (b * b - b) / 2}, {0, 0, p[0], 0}, {0, 0, 0, 1}};
                }),
                "a != 0", [](const Params& p) { return nz(p[0]); }, {}, {}, {}};
      }
      return {pm({"a", "a'", "b"}, [al](const Params& p) {
                const S a = p[0], ap = p[1];
                return Matrix{{ap - al * a, 0, 0, a}, {a, 1, 0, (S(1) - ap) / al}, {0, 0, p[2], 0}, {-al * a, 0, 0, ap}};
              }),
              "a'^2 - αa a' + αa^2 - 1 = 0, b != 0",
              [al](const Params& p) {
                const S a = p[0], ap = p[1];
                return (ap * ap - al * a * ap + al * a * a - S(1)).is_zero() && nz(p[2]);
              },
              {}, {}, {}};
    case Family::H1:
      if (is_special(key, 0)) {
        return {pm({"a", "b"}, [](const Params& p) {
                  const S a = p[0], b = p[1];
                  return Matrix{{1, 0, S(1) - b, a}, {a, 1, a + b - S(1), (a * a - a) / 2}, {0, 0, b, 0}, {0, 0, 0, 1}};
                }),
                "b != 0", [](const Params& p) { return nz(p[1]); }, {}, {}, {}};
      }
      return {pm({"a", "a'", "b"}, [al](const Params& p) {
                const S a = p[0], ap = p[1], b = p[2];
                return Matrix{{ap - al * a, 0, b, a},
                              {a, 1, a - b, (S(1) - ap) / al},
                              {0, 0, ap - b, 0},
                              {-al * a, 0, al * (b - a), ap}};
              }),
              "a'^2 - αa a' + αa^2 - 1 = 0, a' - b != 0",
              [al](const Params& p) {
                const S a = p[0], ap = p[1];
                return (ap * ap - al * a * ap + al * a * a - S(1)).is_zero() && nz(ap - p[2]);
              },
              {}, {}, {}};
    case Family::At:
      return {pm({"a", "b"}, [](const Params& p) {
                const S a = p[0];
                return Matrix{{1, 0, 0, 0}, {a, 1, 0, 0}, {(a * a + a) / 2, a, 1, 0}, {0, 0, 0, p[1]}};
              }),
              "b != 0", [](const Params& p) { return nz(p[1]); }, {}, {}, {}};
    case Family::Ct:
      if (is_special(key, 1)) {
        return {pm({"a", "b", "c", "d"}, [](const Params& p) {
                  return Matrix{{1, 0, 0, 0}, {0, p[0], p[2], 0}, {0, p[1], S(1) / p[0], 0}, {0, 0, 0, p[3]}};
                }),
                "a != 0 != d, bc != 1",
                [](const Params& p) { return nz(p[0]) && nz(p[3]) && !(p[1] * p[2]).is_one(); }, {}, {}, {}};
      }
      return {pm({"a", "b"}, [](const Params& p) {
                return Matrix{{1, 0, 0, 0}, {0, p[0], 0, 0}, {0, 0, S(1) / p[0], 0}, {0, 0, 0, p[1]}};
              }),
              "a != 0 != b", [](const Params& p) { return nz(p[0]) && nz(p[1]); }, {}, {}, {}};
  }
  throw InvalidParameter("unknown family");
}

std::vector<Params> automorphism_samples(const CatalogKey& key) {
  const TabulatedAutomorphisms t = tabulated_automorphisms(key);
  const std::size_t k = t.family.params.size();
  const S al = key.alpha.value_or(S{});
  const auto& tuples = generic_tuples();
  std::vector<Params> points;
  auto accept = [&](Params p) {
    if (!t.admissible(p)) return;
    if (std::find(points.begin(), points.end(), p) != points.end()) return;
    points.push_back(std::move(p));
  };

  const bool quadratic = (key.family == Family::G1 || key.family == Family::H1) && !al.is_zero();
  if (quadratic) {
    // a' = (αa ± sqrt(α^2 a^2 - 4αa^2 + 4)) / 2 at perfect-square points;
    // a = 0 comes first.
    const std::vector<S> candidates{S(0), S(1), S(2), S(-1), S(1, 2), S(3, 5), S(5, 4), S(4), S(-2), S(3)};
    std::size_t tuple = 0;
    for (const S& a : candidates) {
      const S disc = al * al * a * a - S(4) * al * a * a + S(4);
      const auto root = disc.sqrt_exact();
      if (!root) continue;
      for (const S& r : {*root, -*root}) {
        const S ap = (al * a + r) / 2;
        for (std::size_t attempt = 0; attempt < tuples.size(); ++attempt) {
          Params p{a, ap, tuples[(tuple + attempt) % 3][1]};
          if (t.admissible(p)) {
            accept(std::move(p));
            break;
          }
        }
        ++tuple;
        if (points.size() == 4) return points;
      }
    }
    return points;
  }

  for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
    const Params& tp = tuples[idx];
    Params p(tp.begin(), tp.begin() + static_cast<std::ptrdiff_t>(k));
    if (key.family == Family::B || key.family == Family::Bt) {
      p[0] = idx % 3 == 0 ? S(1) : S(-1);
    } else if (key.family == Family::C && al.is_one()) {
      p[1] = (S(1) + p[2] * p[3]) / p[0];
    }
    accept(std::move(p));
  }
  return points;
}

Matrix b_obstruction_target(const Scalar& a) {
  return Matrix{{1, 0, 0}, {0, -1, 0}, {0, a, -1}};
}

}  // namespace omegalie
