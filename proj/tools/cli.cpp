#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "omegalie/automorphisms.hpp"
#include "omegalie/catalog.hpp"
#include "omegalie/derivations.hpp"
#include "omegalie/io.hpp"
#include "omegalie/report.hpp"
#include "omegalie/representations.hpp"

namespace omegalie::cli {
namespace {

std::string pair_name(const OmegaAlgebra& g, std::size_t i, std::size_t j) {
  return "(" + g.name(i) + "," + g.name(j) + ")";
}

OmegaAlgebra load_algebra(const std::string& source, bool tabulated) {
  if (!tabulated) return resolve_algebra(source);
  const CatalogKey key = parse_key(source);
  if (auto g = build_as_tabulated(key)) return *g;
  return build(key);
}

void print_basis(std::ostream& out, const std::vector<Matrix>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) out << "d" << (i + 1) << " = " << to_string(basis[i]) << "\n";
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

int cmd_validate(const OmegaAlgebra& g, std::ostream& out) {
  out << "dim " << g.dim() << ", ω rank " << omega_rank(g) << ", " << (is_trivial(g) ? "trivial" : "nontrivial") << "\n";
  const JacobiResult r = check_omega_jacobi(g);
  if (is_ok(r)) {
    out << "ω-Jacobi: ok\n";
    return kOk;
  }
  const auto& v = std::get<JacobiViolation>(r);
  out << "ω-Jacobi violated at (" << g.name(v.i) << "," << g.name(v.j) << "," << g.name(v.k)
      << "): residual " << format_vector(g, v.residual) << "\n";
  return kNegative;
}

int cmd_der(const OmegaAlgebra& g, bool omega, std::ostream& out) {
  const DerivationSpace d = omega ? omega_derivation_algebra(g) : derivation_algebra(g);
  out << (omega ? "dim Der_ω = " : "dim Der = ") << d.dim() << "\n";
  print_basis(out, d.basis());
  if (omega) out << "Der_ω = Der: " << (subspace_equal(d.space, derivation_algebra(g).space) ? "true" : "false") << "\n";
  return kOk;
}

int cmd_lie(const OmegaAlgebra& g, std::ostream& out) {
  const DerivationSpace d = derivation_algebra(g);
  const LieStructureReport r = lie_structure(d);
  auto series = [](const std::vector<std::size_t>& s) {
    std::string t;
    for (std::size_t i = 0; i < s.size(); ++i) t += (i ? " > " : "") + std::to_string(s[i]);
    return t;
  };
  out << "dim " << r.dim << "\n"
      << "abelian " << (r.is_abelian ? "true" : "false") << "\n"
      << "solvable " << (r.is_solvable ? "true" : "false") << " (derived series " << series(r.derived_series) << ")\n"
      << "nilpotent " << (r.is_nilpotent ? "true" : "false") << " (lower central series "
      << series(r.lower_central_series) << ")\n"
      << "Killing determinant " << r.killing_det << "\n"
      << "identified as " << tag_name(r) << "\n";
  return kOk;
}

int cmd_aut(const OmegaAlgebra& g, const Matrix& s, bool omega, std::ostream& out) {
  const OmegaAutVerdict v = omega ? is_omega_automorphism(g, s) : std::visit([](auto&& x) -> OmegaAutVerdict { return x; },
                                                                             is_automorphism(g, s));
  if (is_ok(v)) {
    out << (omega ? "ω-automorphism: ok\n" : "automorphism: ok\n");
    return kOk;
  }
  if (std::holds_alternative<NotInvertible>(v)) {
    out << "not invertible (det = 0)\n";
  } else if (const auto* h = std::get_if<HomViolation>(&v)) {
    out << "bracket not preserved on " << pair_name(g, h->i, h->j) << ": residual " << format_vector(g, h->residual) << "\n";
  } else {
    const auto& w = std::get<OmegaViolation>(v);
    out << "ω not preserved on " << pair_name(g, w.i, w.j) << ": " << w.image << " != " << w.original << "\n";
  }
  return kNegative;
}

int cmd_exp(const Matrix& d, bool numeric, unsigned order, std::ostream& out, std::ostream& err) {
  if (!numeric) {
    if (!d.square()) throw NonSquare();
    if (!is_nilpotent(d)) {
      err << "matrix is not nilpotent; use --numeric for a truncated series\n";
      return kNegative;
    }
    out << "exp = " << to_string(*exp_exact_nilpotent(d).exact) << "\n";
    return kOk;
  }
  const ExpResult r = exp_numeric(d, order);
  out << "exp (order " << r.truncation_order << ") =\n";
  for (const auto& row : r.numeric) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << format_complex(row[j]);
    out << "\n";
  }
  std::ostringstream bound;
  bound << std::setprecision(17) << r.error_bound;
  out << "error bound " << bound.str() << "\n";
  return kOk;
}

int cmd_exp_image(const OmegaAlgebra& g, const Matrix& s, std::ostream& out) {
  const ExpImageResult r = exp_image_experiment(g, s);
  if (const auto* in = std::get_if<InImage>(&r)) {
    out << "in exp(Der): target = exp(d), d = " << to_string(in->derivation) << "\n";
    return kOk;
  }
  if (const auto* w = std::get_if<NotInImageWitness>(&r)) {
    out << "NOT in exp(Der): " << w->reason << "\n";
    return kNegative;
  }
  out << "inconclusive: " << std::get<Inconclusive>(r).reason << "\n";
  return kNegative;
}

int cmd_multiplicative(const OmegaAlgebra& g, std::ostream& out) {
  const MultiplicativityCertificate c = multiplicativity(g);
  if (c.verdict) {
    std::vector<std::string> duals;
    for (const auto& b : g.basis()) duals.push_back(b + "*");
    out << "multiplicative: τ = " << format_combination(duals, *c.tau) << "\n";
    return kOk;
  }
  out << "NOT multiplicative";
  if (c.witness) {
    const auto [i, j] = *c.witness;
    out << "; witness pair " << pair_name(g, i, j) << ": τ(" << format_vector(g, g.bracket_basis(i, j))
        << ") = " << g.omega()(i, j);
    if (c.conflicts_with) {
      const auto [p, q] = *c.conflicts_with;
      out << " contradicts pair " << pair_name(g, p, q) << ": τ(" << format_vector(g, g.bracket_basis(p, q))
          << ") = " << g.omega()(p, q);
    }
  }
  out << "\n";
  return kNegative;
}

int cmd_mod_check(const OmegaAlgebra& g, const ModuleAction& m, std::ostream& out) {
  const auto v = check_module(g, m);
  if (const auto* bad = std::get_if<ModuleViolation>(&v)) {
    out << "module identity fails on " << pair_name(g, bad->i, bad->j) << ": residual " << to_string(bad->residual) << "\n";
    return kNegative;
  }
  out << "module: ok\n";
  out << "irreducible over Q(i): " << (burnside_irreducible(g, m) ? "true" : "false") << "\n";
  return kOk;
}

int cmd_semidirect(const OmegaAlgebra& g, const ModuleAction& m, const std::string& out_path, std::ostream& out) {
  const OmegaAlgebra s = semidirect_product(g, m);
  const bool ok = is_ok(check_omega_jacobi(s));
  const std::string doc = algebra_to_json(s).dump(2) + "\n";
  if (out_path.empty()) {
    out << doc;
  } else {
    std::ofstream f(out_path);
    if (!(f << doc)) throw IoError("cannot write '" + out_path + "'");
    out << "semi-direct product of dim " << s.dim() << " written to " << out_path << "\n";
  }
  out << "Ω-Jacobi: " << (ok ? "ok" : "violated") << "\n";
  return ok ? kOk : kNegative;
}

int cmd_ladder(const Scalar& alpha, std::size_t max_dim, std::ostream& out) {
  const LadderAnalysis l = c_alpha_ladder(alpha, max_dim);
  out << "α = " << l.alpha << "\n";
  for (const auto& r : l.rows) {
    out << "n=" << r.n << ": η₁ = " << r.eta1_top << " (chain top), " << r.eta1_forced
        << " (forced); α + (n-2)α/2 = " << r.relation_residual << (r.admissible ? "  admissible" : "") << "\n";
  }
  std::string set;
  for (std::size_t i = 0; i < l.admissible.size(); ++i) set += (i ? ", " : "") + std::to_string(l.admissible[i]);
  out << "admissible chain lengths: {" << set << "}";
  const bool only_zero = l.admissible.size() == 1 && l.admissible[0] == 0;
  if (only_zero) out << "; all irreducibles are 1-dimensional";
  out << "\n";
  return only_zero ? kOk : kNegative;
}

int cmd_catalog_list(std::ostream& out) {
  for (const auto& f : list_catalog()) {
    out << f.cli_name << "  " << f.display << "  dim " << f.dim;
    if (f.has_alpha) {
      out << "  α";
      if (!f.excluded.empty()) {
        out << " not in {";
        for (std::size_t i = 0; i < f.excluded.size(); ++i) out << (i ? ", " : "") << f.excluded[i];
        out << "}";
      }
    }
    out << "\n";
  }
  out << list_catalog().size() << " families\n";
  return kOk;
}

int cmd_catalog_show(const std::string& source, std::ostream& out) {
  const CatalogKey key = parse_key(source);
  const OmegaAlgebra g = build(key);
  out << display_name(key) << "\n";
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Vector b = g.bracket_basis(i, j);
      bool nonzero = false;
      for (const auto& s : b) nonzero = nonzero || !s.is_zero();
      if (nonzero) out << "[" << g.name(i) << "," << g.name(j) << "] = " << format_vector(g, b) << "\n";
    }
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (!g.omega()(i, j).is_zero()) out << "ω(" << g.name(i) << "," << g.name(j) << ") = " << g.omega()(i, j) << "\n";
  if (auto t = build_as_tabulated(key)) {
    out << "note: tabulated relations differ (";
    const auto v = check_omega_jacobi(*t);
    out << (is_ok(v) ? "they satisfy ω-Jacobi" : "they violate ω-Jacobi") << "); shown relations are the corrected ones\n";
  }
  return kOk;
}

int cmd_report(const std::string& samples, const std::string& out_path, bool json, std::ostream& out) {
  ReportConfig cfg;
  cfg.alphas = samples.empty() ? alpha_samples_from_env() : parse_alpha_list(samples);
  cfg.json = json;
  const std::string doc = emit_report(cfg);
  if (out_path.empty()) {
    out << doc;
    return kOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!(f << doc)) throw IoError("cannot write '" + out_path + "'");
  out << "report written to " << out_path << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on finite-dimensional complex ω-Lie algebras", "omegalie"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string alg, file, out_path, alpha_text, samples, show_key;
  bool omega = false, numeric = false, json = false, tabulated = false;
  unsigned order = 20;
  std::size_t max_dim = 8;

  auto alg_arg = [&](CLI::App* sub) {
    sub->add_option("alg", alg, "catalog key (e.g. L1, A:2/3, Ct:1) or algebra JSON file")->required();
    sub->add_flag("--tabulated", tabulated, "use relations exactly as tabulated (L1_1, Bt)");
  };

  auto* validate = app.add_subcommand("validate", "check skew-symmetry and the ω-Jacobi identity");
  alg_arg(validate);
  validate->callback([&] { action = [&] { return cmd_validate(load_algebra(alg, tabulated), out); }; });

  auto* der = app.add_subcommand("der", "derivation algebra Der(g)");
  alg_arg(der);
  der->callback([&] { action = [&] { return cmd_der(load_algebra(alg, tabulated), false, out); }; });

  auto* der_omega = app.add_subcommand("der-omega", "ω-derivation algebra Der_ω(g)");
  alg_arg(der_omega);
  der_omega->callback([&] { action = [&] { return cmd_der(load_algebra(alg, tabulated), true, out); }; });

  auto* lie = app.add_subcommand("lie-analyze", "Lie structure of Der(g)");
  alg_arg(lie);
  lie->callback([&] { action = [&] { return cmd_lie(load_algebra(alg, tabulated), out); }; });

  auto* aut = app.add_subcommand("aut-check", "check an automorphism candidate");
  alg_arg(aut);
  aut->add_option("matrix", file, "matrix JSON file")->required();
  aut->add_flag("--omega", omega, "also require ω to be preserved");
  aut->callback([&] {
    action = [&] { return cmd_aut(load_algebra(alg, tabulated), matrix_from_json(read_json_file(file)), omega, out); };
  });

  auto* exp = app.add_subcommand("exp", "matrix exponential");
  exp->add_option("matrix", file, "matrix JSON file")->required();
  auto* num_flag = exp->add_flag("--numeric", numeric, "truncated floating-point series");
  exp->add_option("--order", order, "truncation order for --numeric")->needs(num_flag)->check(CLI::PositiveNumber);
  exp->callback([&] { action = [&] { return cmd_exp(matrix_from_json(read_json_file(file)), numeric, order, out, err); }; });

  auto* exp_image = app.add_subcommand("exp-image", "decide whether an automorphism lies in exp(Der(g))");
  alg_arg(exp_image);
  exp_image->add_option("matrix", file, "matrix JSON file")->required();
  exp_image->callback([&] {
    action = [&] { return cmd_exp_image(load_algebra(alg, tabulated), matrix_from_json(read_json_file(file)), out); };
  });

  auto* mult = app.add_subcommand("multiplicative", "decide whether ω = τ∘[-,-] for a functional τ");
  alg_arg(mult);
  mult->callback([&] { action = [&] { return cmd_multiplicative(load_algebra(alg, tabulated), out); }; });

  auto* semi = app.add_subcommand("semidirect", "semi-direct product with a module");
  alg_arg(semi);
  semi->add_option("module", file, "module JSON file")->required();
  semi->add_option("--out", out_path, "write the product algebra JSON here");
  semi->callback([&] {
    action = [&] {
      const OmegaAlgebra g = load_algebra(alg, tabulated);
      return cmd_semidirect(g, module_from_json(read_json_file(file), g).action, out_path, out);
    };
  });

  auto* mod = app.add_subcommand("mod-check", "check the module identity and irreducibility");
  alg_arg(mod);
  mod->add_option("module", file, "module JSON file")->required();
  mod->callback([&] {
    action = [&] {
      const OmegaAlgebra g = load_algebra(alg, tabulated);
      return cmd_mod_check(g, module_from_json(read_json_file(file), g).action, out);
    };
  });

  auto* ladder = app.add_subcommand("ladder", "weight-chain analysis of C_α modules");
  ladder->add_option("--alpha", alpha_text, "α, e.g. 2 or 3+1i")->required();
  ladder->add_option("--max-dim", max_dim, "largest module dimension considered")->check(CLI::PositiveNumber);
  ladder->callback([&] { action = [&] { return cmd_ladder(Scalar::parse(alpha_text), max_dim, out); }; });

  auto* catalog = app.add_subcommand("catalog", "list or show builtin algebras");
  auto* cat_list = catalog->add_subcommand("list", "list all families");
  auto* cat_show = catalog->add_subcommand("show", "show the relations of one key");
  cat_show->add_option("key", show_key, "catalog key")->required();
  catalog->callback([&] {
    if (cat_show->parsed()) {
      action = [&] { return cmd_catalog_show(show_key, out); };
    } else {
      action = [&] { return cmd_catalog_list(out); };
    }
  });
  (void)cat_list;

  auto* report = app.add_subcommand("report", "regression report of the tables");
  report->add_option("--alpha-samples", samples, "comma-separated α samples (default from OMEGA_LIE_ALPHA_SAMPLES)");
  report->add_option("--out", out_path, "output file (stdout when omitted)");
  report->add_flag("--json", json, "emit JSON instead of markdown");
  report->callback([&] { action = [&] { return cmd_report(samples, out_path, json, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace omegalie::cli
