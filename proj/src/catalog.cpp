#include "omegalie/catalog.hpp"

#include <algorithm>

namespace omegalie {
namespace {

using Terms = std::vector<std::pair<std::string, Scalar>>;

const std::vector<std::string> kBasis3{"x", "y", "z"};
const std::vector<std::string> kBasis4{"x", "y", "z", "e"};

FamilyInfo info(Family f, std::string cli, std::string display, std::size_t dim, bool has_alpha,
                std::vector<Scalar> excluded = {}, std::vector<Scalar> special = {}) {
  return {f, std::move(cli), std::move(display), dim, has_alpha, std::move(excluded), std::move(special)};
}

// [x,y]=y, [y,z]=z, ω(x,y)=1 shared by every L_{1,k}, E, F, G, H.
AlgebraBuilder l1_base() {
  AlgebraBuilder b(kBasis4);
  b.bracket("x", "y", {{"y", 1}}).bracket("y", "z", {{"z", 1}}).omega("x", "y", 1);
  return b;
}

// [x,z]=y, [y,z]=z, [e,y]=-e, ω(x,z)=1 shared by every L_{2,k}.
AlgebraBuilder l2_base() {
  AlgebraBuilder b(kBasis4);
  b.bracket("x", "z", {{"y", 1}}).bracket("y", "z", {{"z", 1}}).bracket("e", "y", {{"e", -1}});
  b.omega("x", "z", 1);
  return b;
}

// [x,y]=y, [x,z]=y+z, [y,z]=x, ω(y,z)=2.
AlgebraBuilder b_base(const std::vector<std::string>& basis) {
  AlgebraBuilder b(basis);
  b.bracket("x", "y", {{"y", 1}}).bracket("x", "z", {{"y", 1}, {"z", 1}}).bracket("y", "z", {{"x", 1}});
  b.omega("y", "z", 2);
  return b;
}

AlgebraBuilder a_base(const std::vector<std::string>& basis, const Scalar& al) {
  AlgebraBuilder b(basis);
  b.bracket("x", "y", {{"x", 1}}).bracket("x", "z", {{"x", 1}, {"y", 1}}).bracket("y", "z", {{"z", 1}, {"x", al}});
  b.omega("y", "z", -1);
  return b;
}

AlgebraBuilder c_base(const std::vector<std::string>& basis, const Scalar& al) {
  AlgebraBuilder b(basis);
  b.bracket("x", "y", {{"y", 1}}).bracket("x", "z", {{"z", al}}).bracket("y", "z", {{"x", 1}});
  b.omega("y", "z", Scalar(1) + al);
  return b;
}

bool contains(const std::vector<Scalar>& values, const Scalar& v) {
  return std::find(values.begin(), values.end(), v) != values.end();
}

}  // namespace

const std::vector<FamilyInfo>& list_catalog() {
  static const std::vector<FamilyInfo> catalog{
      info(Family::L1, "L1", "L1", 3, false),
      info(Family::L2, "L2", "L2", 3, false),
      info(Family::A, "A", "A_α", 3, true),
      info(Family::B, "B", "B", 3, false),
      info(Family::C, "C", "C_α", 3, true, {0, -1}, {1}),
      info(Family::L1_1, "L1_1", "L_{1,1}", 4, false),
      info(Family::L1_2, "L1_2", "L_{1,2}", 4, false),
      info(Family::L1_3, "L1_3", "L_{1,3}", 4, false),
      info(Family::L1_4, "L1_4", "L_{1,4}", 4, false),
      info(Family::L1_5, "L1_5", "L_{1,5}", 4, false),
      info(Family::L1_6, "L1_6", "L_{1,6}", 4, false),
      info(Family::L1_7, "L1_7", "L_{1,7}", 4, false),
      info(Family::L1_8, "L1_8", "L_{1,8}", 4, false),
      info(Family::L2_1, "L2_1", "L_{2,1}", 4, false),
      info(Family::L2_2, "L2_2", "L_{2,2}", 4, false),
      info(Family::L2_3, "L2_3", "L_{2,3}", 4, false),
      info(Family::L2_4, "L2_4", "L_{2,4}", 4, false),
      info(Family::Bt, "Bt", "B~", 4, false),
      info(Family::E1, "E1", "E_{1,α}", 4, true, {0, 1}),
      info(Family::F1, "F1", "F_{1,α}", 4, true, {0, 1}),
      info(Family::G1, "G1", "G_{1,α}", 4, true, {}, {0}),
      info(Family::H1, "H1", "H_{1,α}", 4, true, {}, {0}),
      info(Family::At, "At", "A~_α", 4, true),
      info(Family::Ct, "Ct", "C~_α", 4, true, {0, -1}, {1}),
  };
  return catalog;
}

const FamilyInfo& family_info(Family f) {
  for (const auto& fi : list_catalog())
    if (fi.family == f) return fi;
  throw InvalidParameter("unknown family");
}

std::optional<Family> family_from_name(std::string_view cli_name) {
  for (const auto& fi : list_catalog())
    if (fi.cli_name == cli_name) return fi.family;
  return std::nullopt;
}

void check_key(const CatalogKey& key) {
  const FamilyInfo& fi = family_info(key.family);
  if (fi.has_alpha && !key.alpha) throw InvalidParameter(fi.cli_name + " requires a parameter, e.g. " + fi.cli_name + ":2");
  if (!fi.has_alpha && key.alpha) throw InvalidParameter(fi.cli_name + " takes no parameter");
  if (key.alpha && contains(fi.excluded, *key.alpha)) {
    throw InvalidParameter(fi.cli_name + " is undefined at alpha = " + to_string(*key.alpha));
  }
}

CatalogKey parse_key(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const auto fam = family_from_name(name);
  if (!fam) throw ParseError("unknown catalog family '" + std::string(name) + "'");
  CatalogKey key{*fam, std::nullopt};
  if (colon != std::string_view::npos) key.alpha = Scalar::parse(text.substr(colon + 1));
  check_key(key);
  return key;
}

std::string to_string(const CatalogKey& key) {
  std::string s = family_info(key.family).cli_name;
  if (key.alpha) s += ":" + to_string(*key.alpha);
  return s;
}

std::string display_name(const CatalogKey& key) {
  const FamilyInfo& fi = family_info(key.family);
  if (!key.alpha) return fi.display;
  const Scalar& al = *key.alpha;
  if (key.family == Family::C && al.is_one()) return "C_1";
  if (key.family == Family::Ct && al.is_one()) return "C~_1";
  if ((key.family == Family::G1 || key.family == Family::H1) && al.is_zero()) {
    return key.family == Family::G1 ? "G_{1,0}" : "H_{1,0}";
  }
  return fi.display + " (α=" + to_string(al) + ")";
}

OmegaAlgebra build(const CatalogKey& key) {
  check_key(key);
  const Scalar al = key.alpha.value_or(Scalar{});
  switch (key.family) {
    case Family::L1:
      return AlgebraBuilder(kBasis3).bracket("x", "y", {{"y", 1}}).bracket("y", "z", {{"z", 1}}).omega("x", "y", 1).build();
    case Family::L2:
      return AlgebraBuilder(kBasis3).bracket("x", "z", {{"y", 1}}).bracket("y", "z", {{"z", 1}}).omega("x", "z", 1).build();
    case Family::A:
      return a_base(kBasis3, al).build();
    case Family::B:
      return b_base(kBasis3).build();
    case Family::C:
      return c_base(kBasis3, al).build();
    case Family::L1_1:
      return l1_base().bracket("e", "y", {{"e", -1}}).build();
    case Family::L1_2:
      return l1_base().bracket("e", "x", {{"z", 1}}).bracket("e", "y", {{"e", -1}}).build();
    case Family::L1_3:
      return l1_base().bracket("e", "x", {{"y", 1}}).bracket("e", "y", {{"e", -1}}).omega("e", "x", 1).build();
    case Family::L1_4:
      return l1_base()
          .bracket("e", "x", {{"y", 1}, {"z", 1}})
          .bracket("e", "y", {{"e", -1}})
          .omega("e", "x", 1)
          .build();
    case Family::L1_5:
      return l1_base().bracket("e", "x", {{"e", 1}}).bracket("e", "y", {{"e", -1}}).build();
    case Family::L1_6:
      return l1_base()
          .bracket("e", "x", {{"e", 1}, {"y", 1}})
          .bracket("e", "y", {{"e", -1}})
          .omega("e", "x", 1)
          .build();
    case Family::L1_7:
      return l1_base().bracket("e", "x", {{"e", 1}}).bracket("e", "y", {{"z", 1}, {"e", -1}}).build();
    case Family::L1_8:
      return l1_base()
          .bracket("e", "x", {{"e", 1}, {"y", 1}})
          .bracket("e", "y", {{"z", 1}, {"e", -1}})
          .omega("e", "x", 1)
          .build();
    case Family::L2_1:
      return l2_base().build();
    case Family::L2_2:
      return l2_base().bracket("e", "x", {{"z", 1}}).build();
    case Family::L2_3:
      return l2_base().bracket("e", "x", {{"e", 1}}).build();
    case Family::L2_4:
      return l2_base().bracket("e", "x", {{"e", 1}, {"z", 1}}).build();
    case Family::Bt:
      return b_base(kBasis4).bracket("e", "x", {{"e", -2}}).build();
    case Family::E1:
      return l1_base().bracket("e", "y", {{"e", -1}}).bracket("e", "x", {{"e", al}}).build();
    case Family::F1:
      return l1_base()
          .bracket("e", "y", {{"e", -1}})
          .bracket("e", "x", {{"e", al}, {"y", 1}})
          .omega("e", "x", 1)
          .build();
    case Family::G1:
      return l1_base()
          .bracket("e", "y", {{"x", 1}, {"e", -1}})
          .bracket("e", "x", {{"e", 1}, {"y", al}})
          .omega("e", "x", al)
          .build();
    case Family::H1:
      return l1_base()
          .bracket("e", "y", {{"x", 1}, {"z", 1}, {"e", -1}})
          .bracket("e", "x", {{"e", 1}, {"y", al}})
          .omega("e", "x", al)
          .build();
    case Family::At:
      return a_base(kBasis4, al).bracket("e", "z", {{"e", 1}}).build();
    case Family::Ct:
      return c_base(kBasis4, al).bracket("e", "x", {{"e", -(Scalar(1) + al)}}).build();
  }
  throw InvalidParameter("unknown family");
}

std::optional<OmegaAlgebra> build_as_tabulated(const CatalogKey& key) {
  check_key(key);
  if (key.family == Family::L1_1) return l1_base().bracket("e", "y", {{"y", -1}}).build();
  if (key.family == Family::Bt) {
    return b_base(kBasis4).bracket("e", "y", {{"e", -1}}).bracket("e", "x", {{"e", -2}}).build();
  }
  return std::nullopt;
}

std::vector<Scalar> default_alpha_samples() {
  return {Scalar(2), Scalar(-2), Scalar(1, 2), Scalar(Rational(3), Rational(1))};
}

std::vector<CatalogKey> sample_keys(const std::vector<Scalar>& alphas) {
  std::vector<CatalogKey> keys;
  for (const auto& fi : list_catalog()) {
    if (!fi.has_alpha) {
      keys.push_back({fi.family, std::nullopt});
      continue;
    }
    std::vector<Scalar> values;
    for (const auto& a : alphas)
      if (!contains(fi.excluded, a) && !contains(values, a)) values.push_back(a);
    for (const auto& a : fi.special)
      if (!contains(values, a)) values.push_back(a);
    std::sort(values.begin(), values.end(), [](const Scalar& a, const Scalar& b) { return lex_less(a, b); });
    for (const auto& a : values) keys.push_back({fi.family, a});
  }
  return keys;
}

}  // namespace omegalie
