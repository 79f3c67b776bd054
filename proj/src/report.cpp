#include "omegalie/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "omegalie/automorphisms.hpp"
#include "omegalie/derivations.hpp"
#include "omegalie/families.hpp"
#include "omegalie/representations.hpp"

namespace omegalie {
namespace {

using nlohmann::json;

std::string triple_name(const OmegaAlgebra& g, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + g.name(i) + "," + g.name(j) + "," + g.name(k) + ")";
}

std::string pair_name(const OmegaAlgebra& g, std::size_t i, std::size_t j) {
  return "(" + g.name(i) + "," + g.name(j) + ")";
}

std::string format_point(const std::vector<std::string>& names, const Params& p) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) s += ", ";
    s += names[i] + "=" + to_string(p[i]);
  }
  return s.empty() ? "-" : s;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string format_alphas(const std::vector<Scalar>& alphas) {
  std::vector<std::string> parts;
  for (const auto& a : alphas) parts.push_back(to_string(a));
  return join(parts, ", ");
}

struct ExpLine {
  std::string label;
  std::string outcome;
};

std::vector<ExpLine> exponential_lines() {
  std::vector<ExpLine> out;
  const CatalogKey a2{Family::A, Scalar(2)};
  const CatalogKey b{Family::B, std::nullopt};
  const auto da = tabulated_derivations(a2).family.eval({Scalar(1)});
  out.push_back({"exp(d), d in Der(A_α) with a=1 (α=2)", to_string(*exp_exact_nilpotent(da).exact)});
  const auto db = tabulated_derivations(b).family.eval({Scalar(1)});
  out.push_back({"exp(d), d in Der(B) with a=1", to_string(*exp_exact_nilpotent(db).exact)});

  auto describe = [](const ExpImageResult& r, const OmegaAlgebra& g) -> std::string {
    if (auto* in = std::get_if<InImage>(&r)) {
      return "in image, log = " + to_string(in->derivation) + (is_derivation(g, in->derivation) ? "" : " (not a derivation)");
    }
    if (auto* w = std::get_if<NotInImageWitness>(&r)) return "not in image: " + w->reason;
    return "inconclusive: " + std::get<Inconclusive>(r).reason;
  };
  const OmegaAlgebra ga = build(a2);
  const auto ta = tabulated_automorphisms(a2).family.eval({Scalar(2)});
  out.push_back({"exp-image, A_α (α=2) automorphism a=2", describe(exp_image_experiment(ga, ta), ga)});
  const OmegaAlgebra gb = build(b);
  out.push_back({"exp-image, B target (1; -1; 1,-1)", describe(exp_image_experiment(gb, b_obstruction_target(1)), gb)});
  const CatalogKey l1{Family::L1, std::nullopt};
  const OmegaAlgebra gl = build(l1);
  const auto tl = tabulated_automorphisms(l1).family.eval({Scalar(5), Scalar(2)});
  out.push_back({"exp-image, L1 automorphism a=5, b=2", describe(exp_image_experiment(gl, tl), gl)});
  return out;
}

std::vector<Scalar> ladder_alphas(const std::vector<Scalar>& alphas) {
  std::vector<Scalar> out;
  for (const auto& a : alphas) {
    if (a.is_zero() || a == Scalar(-1)) continue;
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](const Scalar& x, const Scalar& y) { return lex_less(x, y); });
  return out;
}

constexpr std::size_t kLadderMaxDim = 16;

std::string admissible_set(const LadderAnalysis& l) {
  std::vector<std::string> parts;
  for (auto n : l.admissible) parts.push_back(std::to_string(n));
  return "{" + join(parts, ", ") + "}";
}

}  // namespace

ReportRow derivation_row(const CatalogKey& key) {
  const OmegaAlgebra g = build(key);
  const DerivationSpace der = derivation_algebra(g);
  const DerivationSpace der_w = omega_derivation_algebra(g);
  const TabulatedDerivations t = tabulated_derivations(key);
  ReportRow r;
  r.key = key;
  r.der_dim = der.dim();
  r.der_omega_dim = der_w.dim();
  r.der_omega_equal = subspace_equal(der.space, der_w.space);
  r.table_dim = t.dim;
  r.table_span_equal = subspace_equal(der.space, unit_span(t.family, g.dim()));
  r.table_omega_equal = t.omega_equal;
  r.tag = tag_name(lie_structure(der));
  r.table_tag = t.tag.value_or("");
  const MultiplicativityCertificate m = multiplicativity(g);
  r.multiplicative = m.verdict;
  if (m.tau) {
    std::vector<std::string> duals;
    for (const auto& b : g.basis()) duals.push_back(b + "*");
    r.tau = format_combination(duals, *m.tau);
  }

  if (auto tabulated = build_as_tabulated(key)) {
    const JacobiResult j = check_omega_jacobi(*tabulated);
    if (const auto* v = std::get_if<JacobiViolation>(&j)) {
      r.notes.push_back("tabulated relations fail ω-Jacobi at " + triple_name(g, v->i, v->j, v->k) +
                        "; catalog uses corrected relations");
    }
  }
  if (r.der_dim != r.table_dim) r.notes.push_back("dimension differs from the tabulated one");
  if (!r.table_span_equal) {
    const auto inst = unit_instances(t.family);
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < inst.size(); ++i)
      if (!is_derivation(g, inst[i])) bad.push_back(t.family.params[i] + "=1");
    if (bad.empty()) {
      r.notes.push_back("tabulated span differs");
    } else {
      r.notes.push_back("tabulated instance(s) " + join(bad, ", ") + " not derivations");
    }
  }
  if (r.der_omega_equal != r.table_omega_equal) r.notes.push_back("Der_ω = Der differs from the tabulated claim");
  if (!r.table_tag.empty() && r.table_tag != r.tag) r.notes.push_back("structure differs from the tabulated tag");
  return r;
}

std::vector<AutRow> automorphism_rows(const CatalogKey& key) {
  const OmegaAlgebra g = build(key);
  const TabulatedAutomorphisms t = tabulated_automorphisms(key);
  std::vector<AutRow> rows;
  for (const auto& p : automorphism_samples(key)) {
    const Matrix s = t.family.eval(p);
    AutRow row{key, format_point(t.family.params, p), "ok", false, false, ""};
    const OmegaAutVerdict v = is_omega_automorphism(g, s);
    if (std::holds_alternative<NotInvertible>(v)) {
      row.verdict = "not invertible";
    } else if (const auto* h = std::get_if<HomViolation>(&v)) {
      row.verdict = "hom violation at " + pair_name(g, h->i, h->j);
    } else {
      row.automorphism = true;
      row.omega_preserved = is_ok(v);
      if (const auto* w = std::get_if<OmegaViolation>(&v)) row.verdict = "ω violation at " + pair_name(g, w->i, w->j);
    }
    if (t.omega_equal) row.table_omega_equal = yes_no(*t.omega_equal);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Scalar> parse_alpha_list(std::string_view text) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(Scalar::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Scalar> alpha_samples_from_env() {
  const char* env = std::getenv("OMEGA_LIE_ALPHA_SAMPLES");
  if (env == nullptr || *env == '\0') return default_alpha_samples();
  return parse_alpha_list(env);
}

std::string emit_report(const ReportConfig& config) {
  const auto keys = sample_keys(config.alphas);
  std::vector<ReportRow> rows;
  std::vector<AutRow> auts;
  for (const auto& k : keys) {
    rows.push_back(derivation_row(k));
    auto a = automorphism_rows(k);
    auts.insert(auts.end(), a.begin(), a.end());
  }
  const auto exps = exponential_lines();
  std::vector<LadderAnalysis> ladders;
  for (const auto& a : ladder_alphas(config.alphas)) ladders.push_back(c_alpha_ladder(a, kLadderMaxDim));

  if (config.json) {
    json doc;
    json alphas = json::array();
    for (const auto& a : config.alphas) alphas.push_back(to_string(a));
    doc["alpha_samples"] = alphas;
    json der = json::array();
    for (const auto& r : rows) {
      der.push_back({{"key", to_string(r.key)},
                     {"algebra", display_name(r.key)},
                     {"der_dim", r.der_dim},
                     {"der_omega_dim", r.der_omega_dim},
                     {"der_omega_equal", r.der_omega_equal},
                     {"table_dim", r.table_dim},
                     {"table_span_equal", r.table_span_equal},
                     {"table_omega_equal", r.table_omega_equal},
                     {"lie_structure", r.tag},
                     {"table_tag", r.table_tag},
                     {"multiplicative", r.multiplicative},
                     {"tau", r.tau},
                     {"notes", r.notes}});
    }
    doc["derivations"] = der;
    json aut = json::array();
    for (const auto& r : auts) {
      aut.push_back({{"key", to_string(r.key)},
                     {"point", r.point},
                     {"verdict", r.verdict},
                     {"automorphism", r.automorphism},
                     {"omega_preserved", r.omega_preserved},
                     {"table_omega_equal", r.table_omega_equal}});
    }
    doc["automorphisms"] = aut;
    json ex = json::array();
    for (const auto& e : exps) ex.push_back({{"check", e.label}, {"result", e.outcome}});
    doc["exponentials"] = ex;
    json lad = json::array();
    for (const auto& l : ladders) {
      lad.push_back({{"alpha", to_string(l.alpha)}, {"max_dim", kLadderMaxDim}, {"admissible", l.admissible},
                     {"eta1", to_string(Scalar(1) + l.alpha)}});
    }
    doc["ladder"] = lad;
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "# ω-Lie algebra regression report\n\n";
  os << "α samples: " << format_alphas(config.alphas) << "\n\n";
  os << "## Derivations\n\n";
  os << "| algebra | key | dim Der | tabulated dim | tabulated span | Der_ω = Der | tabulated Der_ω = Der | structure | "
        "tabulated structure | multiplicative | τ | notes |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << display_name(r.key) << " | " << to_string(r.key) << " | " << r.der_dim << " | " << r.table_dim << " | "
       << (r.table_span_equal ? "equal" : "differs") << " | " << yes_no(r.der_omega_equal) << " | "
       << yes_no(r.table_omega_equal) << " | " << r.tag << " | " << (r.table_tag.empty() ? "-" : r.table_tag) << " | "
       << yes_no(r.multiplicative) << " | " << (r.tau.empty() ? "-" : r.tau) << " | " << join(r.notes, "; ") << " |\n";
  }
  os << "\n## Automorphisms\n\n";
  os << "| algebra | key | point | verdict | ω preserved | tabulated Aut_ω = Aut |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& r : auts) {
    os << "| " << display_name(r.key) << " | " << to_string(r.key) << " | " << r.point << " | " << r.verdict << " | "
       << yes_no(r.omega_preserved) << " | " << (r.table_omega_equal.empty() ? "-" : r.table_omega_equal) << " |\n";
  }
  os << "\n## Exponentials\n\n";
  for (const auto& e : exps) os << "- " << e.label << ": " << e.outcome << "\n";
  os << "\n## C_α ladder (max dim " << kLadderMaxDim << ")\n\n";
  os << "| α | admissible chain lengths | η₁ |\n";
  os << "|---|---|---|\n";
  for (const auto& l : ladders) {
    os << "| " << to_string(l.alpha) << " | " << admissible_set(l) << " | " << to_string(Scalar(1) + l.alpha) << " |\n";
  }
  return os.str();
}

}  // namespace omegalie
