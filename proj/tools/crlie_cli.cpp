// Command-line front end: catalog verification, CR reports, the su(p+1,q+1)
// builder, the flat-family checks, the classification harnesses, and the
// embedding samplers. Exit codes: 0 all checks passed, 1 at least one check
// failed, 2 usage or input error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "crlie/catalog.hpp"
#include "crlie/cr.hpp"
#include "crlie/embed.hpp"
#include "crlie/expr.hpp"
#include "crlie/flat.hpp"
#include "crlie/rng.hpp"
#include "crlie/suites.hpp"

using namespace crlie;

namespace {

struct GlobalOpts {
  std::string format = "text";
  std::string out;
  uint64_t seed = 42;
  std::string catalog_dir;
};

int emit(const CheckReport& rep, const GlobalOpts& g) {
  std::string text = (g.format == "json") ? rep.to_json() : rep.to_text();
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(g.out);
    if (!f) throw Error("cannot open output file '" + g.out + "'");
    f << text;
  }
  return rep.exit_code();
}

KForm<GaussRational> form_from_expr(const LieAlgebra& g, const std::string& expr) {
  Vec<GaussRational> coeffs = parse_linear_combination(expr, g.basis_names());
  KForm<GaussRational> phi(g.dim(), 1);
  for (int i = 0; i < g.dim(); ++i) phi.add_term({i}, coeffs[i]);
  return phi;
}

int cmd_verify(const std::string& path, std::vector<std::string> checks, const GlobalOpts& g) {
  CatalogEntry entry = load_catalog(path);
  const LieAlgebra& alg = entry.algebra;
  if (checks.empty()) checks = {"jacobi", "center", "series", "killing", "radical"};
  CheckReport rep;
  rep.suite = "verify " + (alg.name().empty() ? path : alg.name());
  for (const std::string& c : checks) {
    if (c == "jacobi") {
      JacobiReport jr = check_jacobi(alg);
      std::string witness;
      if (!jr.pass) {
        const auto& v = jr.violations.front();
        witness = "violation at (" + alg.basis_names()[v.i] + "," + alg.basis_names()[v.j] + "," +
                  alg.basis_names()[v.k] + ")";
      }
      rep.add("jacobi", jr.pass, witness);
    } else if (c == "center") {
      rep.add("center", true, "dim " + std::to_string(center(alg).dim()));
    } else if (c == "series") {
      rep.add("series", true,
              std::string(is_nilpotent(alg) ? "nilpotent" : is_solvable(alg) ? "solvable"
                                                                             : "not solvable"));
    } else if (c == "killing") {
      Signature s = killing_signature(alg);
      rep.add("killing", true,
              "signature (" + std::to_string(s.pos) + "," + std::to_string(s.neg) + "," +
                  std::to_string(s.zero) + ")");
    } else if (c == "radical") {
      rep.add("radical", true, "dim " + std::to_string(radical(alg).dim()));
    } else {
      throw CLI::ValidationError("--checks", "unknown check '" + c + "'");
    }
  }
  return emit(rep, g);
}

int cmd_cr(const std::string& path, std::vector<std::string> k_exprs, std::string phi_expr,
           const std::vector<std::string>& require, const GlobalOpts& g) {
  CatalogEntry entry = load_catalog(path);
  const LieAlgebra& alg = entry.algebra;
  if (k_exprs.empty() && entry.cr) k_exprs = entry.cr->k;
  if (phi_expr.empty() && entry.cr) phi_expr = entry.cr->phi;
  if (k_exprs.empty()) throw Error("no CR subalgebra given (use --k or a catalog with a cr block)");
  std::vector<Vec<GaussRational>> kvecs;
  for (const auto& e : k_exprs) kvecs.push_back(parse_linear_combination(e, alg.basis_names()));
  Subspace k = Subspace::span(alg.dim(), kvecs);
  int m = (alg.dim() - 1) / 2;

  CheckReport rep;
  rep.suite = "cr " + (alg.name().empty() ? path : alg.name());
  CRStructure cr = k_to_pair(alg, k);
  bool integrable = is_cr_integrable(cr);
  rep.add("integrable", integrable);
  rep.add("regular", true, is_regular(alg, k) ? "yes" : "no");

  KForm<GaussRational> phi =
      phi_expr.empty() ? annihilator_form(alg, cr.D) : form_from_expr(alg, phi_expr);
  LeviReport lev = levi(alg, k, phi);
  std::string matrix = "[";
  for (int r = 0; r < lev.matrix.rows; ++r) {
    matrix += (r ? "; " : "");
    for (int c = 0; c < lev.matrix.cols; ++c)
      matrix += (c ? ", " : "") + lev.matrix(r, c).str();
  }
  matrix += "]";
  rep.add("levi", true,
          "signature (" + std::to_string(lev.signature.pos) + "," +
              std::to_string(lev.signature.neg) + "," + std::to_string(lev.signature.zero) +
              "), matrix " + matrix);
  bool nondeg = is_nondegenerate(lev);
  bool spc = is_strictly_pseudoconvex(lev);
  rep.add("nondegenerate", true, nondeg ? "yes" : "no");
  rep.add("strictly_pseudoconvex", true, spc ? "yes" : "no");

  ReebResult r = reeb(alg, phi, m);
  rep.add("contact", true, r.contact ? "yes" : "no");
  bool normal = false;
  if (r.eta) {
    std::string eta_str;
    for (int i = 0; i < alg.dim(); ++i)
      if (!(*r.eta)[i].is_zero())
        eta_str += (eta_str.empty() ? "" : " + ") + (*r.eta)[i].str() + " " + alg.basis_names()[i];
    rep.add("reeb", true, eta_str);
    normal = is_normal(alg, k, *r.eta);
    rep.add("normal", true, normal ? "yes" : "no");
  } else {
    rep.add("reeb", true, "no solution");
  }

  std::vector<std::string> wanted;
  for (const std::string& item : require) {
    std::string token;
    for (char ch : item) {
      if (ch == ',') {
        if (!token.empty()) wanted.push_back(token);
        token.clear();
      } else {
        token.push_back(ch);
      }
    }
    if (!token.empty()) wanted.push_back(token);
  }
  for (const std::string& want : wanted) {
    bool value = false;
    if (want == "integrable") value = integrable;
    else if (want == "nondegenerate") value = nondeg;
    else if (want == "strictly_pseudoconvex") value = spc;
    else if (want == "contact") value = r.contact;
    else if (want == "normal") value = normal;
    else throw CLI::ValidationError("--require", "unknown property '" + want + "'");
    rep.add("require_" + want, value);
  }
  return emit(rep, g);
}

int cmd_su_build(int p, int q, const std::string& dump, const GlobalOpts& g) {
  SUModel md = build_su(p, q);
  CheckReport rep;
  rep.suite = "su build " + md.algebra.name();
  rep.add("construction", true, "dim " + std::to_string(md.dim()));
  rep.add("jacobi", check_jacobi(md.algebra).pass);
  GradingReport gr = grading(md);
  std::string dims;
  for (int k = 0; k < 5; ++k) dims += (k ? "," : "") + std::to_string(gr.dims[k]);
  rep.add("grading", gr.ok, "[" + dims + "]");
  AdTableReport ad = ad_table_check(md);
  rep.add("ad_tables", ad.ok, ad.failure);
  if (!dump.empty()) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(catalog_to_json(md.algebra));
    auto indices = [&](const Subspace& s) {
      std::vector<int> idx;
      for (int r = 0; r < s.dim(); ++r)
        for (int c = 0; c < md.dim(); ++c)
          if (s.basis()(r, c) == GaussRational(1)) {
            idx.push_back(c);
            break;
          }
      return idx;
    };
    j["parts"] = {{"heis", indices(md.heis)},         {"h0", indices(md.h0)},
                  {"cartan_a", indices(md.cartan_a)}, {"t_part", indices(md.t_part)},
                  {"s_part", indices(md.s_part)},     {"borel", indices(md.borel)}};
    nlohmann::ordered_json grades = nlohmann::ordered_json::array();
    for (int k = 0; k < 5; ++k) grades.push_back(indices(md.grade[k]));
    j["grading"] = std::move(grades);
    std::ofstream f(dump);
    if (!f) throw Error("cannot open '" + dump + "'");
    f << j.dump(2) << "\n";
    rep.add("dump", true, dump);
  }
  return emit(rep, g);
}

int cmd_flat_check(const std::string& kind_name, const std::string& s_text, const GlobalOpts& g) {
  PhiKind kind = phi_kind_from_name(kind_name);
  Rational s = Rational::parse(s_text);
  SUModel model = build_su(1, 0);
  FlatModelCandidate cand = phi_family(kind, s, model);
  FlatReport fr = is_flat_model(cand, model);
  CheckReport rep;
  rep.suite = "flat check " + kind_name + " s=" + s.str();
  std::string witness = verdict_name(fr.verdict);
  if (fr.witness)
    witness += " at basis pair (" + std::to_string(fr.witness->first) + "," +
               std::to_string(fr.witness->second) + ")";
  rep.add_status("verdict", CheckStatus::pass, witness);
  return emit(rep, g);
}

int cmd_flat_locus(const std::string& kind_name, const GlobalOpts& g) {
  PhiKind kind = phi_kind_from_name(kind_name);
  SUModel model = build_su(1, 0);
  FlatLocus locus = flat_locus(kind, model);
  CheckReport rep;
  rep.suite = "flat locus " + kind_name;
  std::string desc;
  if (locus.all_s) {
    desc = "flat for every s > 0";
  } else if (locus.roots.empty()) {
    desc = "never flat";
  } else {
    desc = "flat exactly at s in {";
    for (size_t i = 0; i < locus.roots.size(); ++i)
      desc += (i ? ", " : "") + locus.roots[i].str();
    desc += "}";
  }
  rep.add("locus", true, desc);
  return emit(rep, g);
}

// Parses "K" or "K+Li" / "K-Li" with rational K, L.
GaussRational parse_delta(const std::string& text) {
  size_t ipos = text.find('i');
  if (ipos == std::string::npos) return GaussRational(Rational::parse(text));
  size_t split = std::string::npos;
  for (size_t k = 1; k < ipos; ++k)
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != '/') split = k;
  Rational re(0);
  std::string imtext;
  if (split == std::string::npos) {
    imtext = text.substr(0, ipos);
  } else {
    re = Rational::parse(text.substr(0, split));
    imtext = text.substr(split, ipos - split);
  }
  Rational im(1);
  if (imtext == "-") im = Rational(-1);
  else if (!imtext.empty() && imtext != "+") im = Rational::parse(imtext);
  return {re, im};
}

int cmd_embed_heis(int m, const std::string& eps_text, const std::string& delta_text, int samples,
                   const std::string& csv, const GlobalOpts& g) {
  EmbeddingParams p;
  if (static_cast<int>(eps_text.size()) != m)
    throw Error("--eps must have exactly m characters from {+,-}");
  for (char c : eps_text) {
    if (c != '+' && c != '-') throw Error("--eps characters must be '+' or '-'");
    p.eps.push_back(c == '+' ? 1 : -1);
  }
  p.delta = parse_delta(delta_text);

  Hyperquadric q = calibrate_quadric(p, 20, g.seed);
  Rng rng(g.seed + 1);
  int zero = 0;
  std::ostringstream table;
  table << "t";
  for (int i = 0; i < m; ++i) table << ",x" << i + 1;
  for (int i = 0; i < m; ++i) table << ",y" << i + 1;
  table << ",z";
  for (int i = 0; i <= m; ++i) table << ",w" << i + 1;
  table << ",residual\n";
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> x(m), y(m);
    for (int i = 0; i < m; ++i) {
      x[i] = rng.rational(9, 7);
      y[i] = rng.rational(9, 7);
    }
    Rational z = rng.rational(9, 7);
    auto pt = embed_heisenberg(p, Rational(0), x, y, z);
    Rational res = quadric_residual(q, pt);
    if (res.is_zero()) ++zero;
    table << "0";
    for (int i = 0; i < m; ++i) table << "," << x[i].str();
    for (int i = 0; i < m; ++i) table << "," << y[i].str();
    table << "," << z.str();
    for (const auto& w : pt) table << "," << w.str();
    table << "," << res.str() << "\n";
  }
  if (!csv.empty()) {
    std::ofstream f(csv);
    if (!f) throw Error("cannot open '" + csv + "'");
    f << table.str();
  }
  CheckReport rep;
  rep.suite = "embed heisenberg m=" + std::to_string(m);
  rep.add("convention", true, q.conv == Hyperquadric::Conv::Re ? "Re" : "Im");
  rep.add("residuals_exactly_zero", zero == samples,
          std::to_string(zero) + "/" + std::to_string(samples));
  return emit(rep, g);
}

int cmd_embed_float(bool su2, int samples, const std::string& csv, const GlobalOpts& g) {
  Rng rng(g.seed);
  std::ostringstream table;
  int good = 0, done = 0;
  double worst = 0;
  if (su2) {
    table << "t,re_z1,im_z1,re_z2,im_z2,norm2,defect\n";
    while (done < samples) {
      double a = rng.range(-100, 100) / 101.0, b = rng.range(-100, 100) / 101.0;
      double c = rng.range(-100, 100) / 103.0, dd = rng.range(-100, 100) / 107.0;
      double n = std::sqrt(a * a + b * b + c * c + dd * dd);
      if (n < 1e-6) continue;
      double t = rng.range(-200, 200) / 100.0;
      Su2Image img = embed_su2({1.0, 0.5}, t, {a / n, b / n}, {c / n, dd / n});
      double defect = std::abs(std::log(img.norm2) - 2 * t);
      worst = std::max(worst, defect);
      if (defect < 1e-9) ++good;
      table << t << "," << img.z1.real() << "," << img.z1.imag() << "," << img.z2.real() << ","
            << img.z2.imag() << "," << img.norm2 << "," << defect << "\n";
      ++done;
    }
  } else {
    table << "t,a,b,c,d,im_first,abs_fiber\n";
    while (done < samples) {
      double a = rng.range(-100, 100) / 23.0;
      if (std::abs(a) < 1e-3) continue;
      double b = rng.range(-100, 100) / 31.0;
      double c = rng.range(-100, 100) / 29.0;
      double dd = (1.0 + b * c) / a;
      double t = rng.range(-150, 150) / 100.0;
      Sl2Image img = embed_sl2({1.0, 0.5}, t, a, b, c, dd);
      if (img.half_plane.imag() > 0 && std::abs(img.fiber) > 0) ++good;
      table << t << "," << a << "," << b << "," << c << "," << dd << ","
            << img.half_plane.imag() << "," << std::abs(img.fiber) << "\n";
      ++done;
    }
  }
  if (!csv.empty()) {
    std::ofstream f(csv);
    if (!f) throw Error("cannot open '" + csv + "'");
    f << table.str();
  }
  CheckReport rep;
  rep.suite = su2 ? "embed su2" : "embed sl2";
  rep.add(su2 ? "norm_law_within_1e9" : "image_in_H_times_Cstar", good == samples,
          std::to_string(good) + "/" + std::to_string(samples));
  return emit(rep, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of CR structures on Lie algebras"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for the randomized suites");
  app.add_option("--out", g.out, "write the report to a file");
  app.add_option("--catalog-dir", g.catalog_dir, "directory with the catalog files");

  // verify
  auto* verify = app.add_subcommand("verify", "structural checks on a catalog file")->fallthrough();
  std::string verify_path;
  std::string verify_checks;
  verify->add_option("catalog", verify_path, "catalog JSON file")->required();
  verify->add_option("--checks", verify_checks, "comma list: jacobi,center,series,killing,radical");

  // cr
  auto* cr = app.add_subcommand("cr", "CR structure report on a catalog algebra")->fallthrough();
  std::string cr_path, cr_phi;
  std::vector<std::string> cr_k, cr_require;
  cr->add_option("catalog", cr_path, "catalog JSON file")->required();
  cr->add_option("--k", cr_k, "spanning vector expressions of the CR subalgebra");
  cr->add_option("--phi", cr_phi, "contact form expression (defaults to the catalog's)");
  cr->add_option("--require", cr_require,
                 "properties that must hold: integrable,nondegenerate,strictly_pseudoconvex,"
                 "contact,normal");

  // su build
  auto* su = app.add_subcommand("su", "the su(p+1,q+1) model")->fallthrough();
  auto* su_build = su->add_subcommand("build", "construct and verify the model")->fallthrough();
  int su_p = 1, su_q = 0;
  std::string su_dump;
  su_build->add_option("--p", su_p, "p")->required();
  su_build->add_option("--q", su_q, "q")->required();
  su_build->add_option("--dump-catalog", su_dump, "write the algebra + parts manifest as JSON");

  // flat check / locus
  auto* flat = app.add_subcommand("flat", "the deformation families")->fallthrough();
  auto* flat_check = flat->add_subcommand("check", "flatness verdict at a parameter value")->fallthrough();
  std::string flat_kind = "su2", flat_s = "1";
  flat_check->add_option("--kind", flat_kind, "su2|sl2R|heis3")->required();
  flat_check->add_option("--s", flat_s, "rational parameter (t = s^2)")->required();
  auto* flat_locus_cmd = flat->add_subcommand("locus", "exact flat parameter locus")->fallthrough();
  std::string locus_kind = "su2";
  flat_locus_cmd->add_option("--kind", locus_kind, "su2|sl2R|heis3")->required();

  // classify3 / thm4
  auto* classify3 = app.add_subcommand("classify3", "three-dimensional classification table")->fallthrough();
  auto* thm4 = app.add_subcommand("thm4", "Borel modification constructions")->fallthrough();
  int thm4_m = 2, thm4_p = 1, thm4_q = 1;
  thm4->add_option("--m", thm4_m, "m = p + q (2 or 3)");
  thm4->add_option("--p", thm4_p, "p");
  thm4->add_option("--q", thm4_q, "q");

  // embed
  auto* embed = app.add_subcommand("embed", "hypersurface embeddings")->fallthrough();
  auto* emb_h = embed->add_subcommand("heisenberg", "exact residual sampling")->fallthrough();
  int emb_m = 1, emb_samples = 100;
  std::string emb_eps = "+", emb_delta = "1", emb_csv;
  emb_h->add_option("--m", emb_m, "number of Heisenberg pairs")->required();
  emb_h->add_option("--eps", emb_eps, "signs, e.g. +- for (p,q) = (1,1)")->required();
  emb_h->add_option("--delta", emb_delta, "delta = K or K+Li");
  emb_h->add_option("--samples", emb_samples, "sample count");
  emb_h->add_option("--csv", emb_csv, "write sampled rows as CSV");
  auto* emb_su2 = embed->add_subcommand("su2", "float sampling of the exponential map")->fallthrough();
  int su2_samples = 100;
  std::string su2_csv;
  emb_su2->add_option("--samples", su2_samples, "sample count");
  emb_su2->add_option("--csv", su2_csv, "write sampled rows as CSV");
  auto* emb_sl2 = embed->add_subcommand("sl2", "float sampling into H x C*")->fallthrough();
  int sl2_samples = 100;
  std::string sl2_csv;
  emb_sl2->add_option("--samples", sl2_samples, "sample count");
  emb_sl2->add_option("--csv", sl2_csv, "write sampled rows as CSV");

  // suite
  auto* suite = app.add_subcommand("suite", "named acceptance suites")->fallthrough();
  std::string suite_name = "all";
  suite->add_option("name", suite_name, "all|forms|su|flat|classify3|thm1|thm4|embed")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!g.catalog_dir.empty()) setenv("CRLIE_CATALOGS", g.catalog_dir.c_str(), 1);
    if (verify->parsed()) {
      std::vector<std::string> checks;
      std::string token;
      for (char c : verify_checks) {
        if (c == ',') {
          if (!token.empty()) checks.push_back(token);
          token.clear();
        } else {
          token.push_back(c);
        }
      }
      if (!token.empty()) checks.push_back(token);
      return cmd_verify(verify_path, checks, g);
    }
    if (cr->parsed()) return cmd_cr(cr_path, cr_k, cr_phi, cr_require, g);
    if (su->parsed() && su_build->parsed()) return cmd_su_build(su_p, su_q, su_dump, g);
    if (flat->parsed() && flat_check->parsed()) return cmd_flat_check(flat_kind, flat_s, g);
    if (flat->parsed() && flat_locus_cmd->parsed()) return cmd_flat_locus(locus_kind, g);
    if (classify3->parsed()) {
      return emit(classify3_harness(build_su(1, 0)), g);
    }
    if (thm4->parsed()) {
      if (thm4_p + thm4_q != thm4_m) throw Error("thm4: need p + q = m");
      return emit(thm4_harness(build_su(thm4_p, thm4_q), g.seed), g);
    }
    if (embed->parsed() && emb_h->parsed())
      return cmd_embed_heis(emb_m, emb_eps, emb_delta, emb_samples, emb_csv, g);
    if (embed->parsed() && emb_su2->parsed()) return cmd_embed_float(true, su2_samples, su2_csv, g);
    if (embed->parsed() && emb_sl2->parsed()) return cmd_embed_float(false, sl2_samples, sl2_csv, g);
    if (suite->parsed()) {
      SuiteOptions opts;
      opts.seed = g.seed;
      opts.catalog_dir = g.catalog_dir;
      return emit(run_suite(suite_name, opts), g);
    }
    std::cerr << "no subcommand executed\n";
    return 2;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
