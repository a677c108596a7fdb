#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "nzalex_cli/cli.hpp"

namespace nzalex::cli {

namespace {

Json report(const std::string& command, const std::string& digest) {
  return Json{{"command", command}, {"input_digest", digest}, {"outputs", Json::object()}, {"warnings", Json::array()}};
}

void emit(std::ostream& out, Json& rep, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) rep["warnings"].push_back(w);
  out << rep.dump(2) << '\n';
}

void print_warnings(std::ostream& out, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) out << "warning: " << w << '\n';
}

std::string member_name(const EdgeMember& m) { return "tet " + std::to_string(m.tet) + " " + edge_name(m.edge()); }

Json alpha_json(const Context& ctx, const AlphaMap& alpha) {
  Json j = Json::object();
  for (std::size_t g = 0; g < ctx.dual.generators.size(); ++g) {
    const int id = static_cast<int>(g);
    j[generator_name(id)] = ctx.survives(id) ? Json(alpha(id)) : Json("tree");
  }
  return j;
}

std::string alpha_text(const Context& ctx, const AlphaMap& alpha) {
  std::ostringstream s;
  for (std::size_t g = 0; g < ctx.dual.generators.size(); ++g) {
    const int id = static_cast<int>(g);
    if (g) s << ", ";
    s << generator_name(id) << '=';
    if (ctx.survives(id)) {
      s << alpha(id);
    } else {
      s << "tree";
    }
  }
  return s.str();
}

std::string ints_text(const std::vector<std::int64_t>& v) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
  s << ']';
  return s.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Json generators_json(const Context& ctx) {
  Json gens = Json::array();
  for (std::size_t g = 0; g < ctx.dual.generators.size(); ++g) {
    const DualGenerator& e = ctx.dual.generators[g];
    gens.push_back(Json{{"name", generator_name(static_cast<int>(g))},
                        {"source", {e.source_tet, e.source_face}},
                        {"target", {e.target_tet, e.target_face}},
                        {"eliminated", bool(ctx.dual.in_tree[g])}});
  }
  return gens;
}

}  // namespace

int cmd_info(const CommonOptions& opts, std::ostream& out) {
  const std::string text = read_file(opts.file);
  const Triangulation tri = parse_triangulation(text);
  const auto edges = edge_classes(tri);
  const bool ordered = is_ordered(tri);
  const bool orderable = ordered || ordering_relabeling(tri).has_value();
  if (opts.json) {
    Json rep = report("info", fnv1a_hex(text));
    auto& o = rep["outputs"];
    o["tets"] = tri.size();
    o["ordered"] = ordered;
    o["orderable"] = orderable;
    Json signs = Json::array();
    for (int j = 0; j < tri.size(); ++j) signs.push_back(tri.orientation(j));
    o["orientation"] = signs;
    Json cls = Json::array();
    for (const auto& e : edges) {
      Json members = Json::array();
      for (const auto& m : e.members) members.push_back(Json{{"tet", m.tet}, {"edge", edge_name(m.edge())}});
      cls.push_back(Json{{"name", "e" + std::to_string(e.index + 1)}, {"valence", e.valence()}, {"members", members}});
    }
    o["edge_classes"] = cls;
    Json valences = Json::array();
    for (const auto& e : edges) valences.push_back(e.valence());
    o["valences"] = valences;
    emit(out, rep, {});
    return kOk;
  }
  out << "tetrahedra: " << tri.size() << '\n';
  out << "ordered: " << yes_no(ordered) << '\n';
  out << "orderable: " << yes_no(orderable) << '\n';
  out << "edge classes: " << edges.size() << '\n';
  for (const auto& e : edges) {
    out << "  e" << e.index + 1 << " (valence " << e.valence() << "):";
    for (const auto& m : e.members) out << ' ' << member_name(m) << ';';
    out << '\n';
  }
  return kOk;
}

int cmd_order(const CommonOptions& opts, std::ostream& out) {
  const std::string text = read_file(opts.file);
  const Triangulation tri = parse_triangulation(text);
  const auto relabel = ordering_relabeling(tri);
  if (!relabel) throw Error(ErrorKind::NotOrderable, "no vertex ordering is compatible with every gluing");
  const Triangulation ordered = tri.relabeled(*relabel);
  if (opts.json) {
    Json rep = report("order", fnv1a_hex(text));
    Json perms = Json::array();
    for (const auto& p : *relabel) perms.push_back(p.str());
    rep["outputs"]["relabeling"] = perms;
    rep["outputs"]["already_ordered"] = is_ordered(tri);
    rep["outputs"]["triangulation"] = Json::parse(to_json_text(ordered));
    emit(out, rep, {});
    return kOk;
  }
  out << to_text(ordered);
  return kOk;
}

int cmd_curves(const CommonOptions& opts, ShapeKind kind, std::ostream& out) {
  const Loaded in = load(opts);
  const AlphaMap alpha = resolve_alpha(in, opts);
  CurveSystem curves = smoothing_curves(in.ctx.tri, in.ctx.dual, kind);
  assign_alpha(curves, alpha);
  if (opts.json) {
    Json rep = report("curves", in.digest);
    rep["outputs"]["alpha"] = alpha_json(in.ctx, alpha);
    rep["outputs"]["curves"] = to_json(curves);
    emit(out, rep, in.warnings);
    return kOk;
  }
  print_warnings(out, in.warnings);
  out << "alpha: " << alpha_text(in.ctx, alpha) << '\n';
  out << to_string(kind) << "-curves: " << curves.components.size() << '\n';
  for (std::size_t i = 0; i < curves.components.size(); ++i)
    out << "  " << i + 1 << ": " << to_string(curves.components[i].word, generator_name)
        << "   alpha = " << curves.components[i].alpha << '\n';
  return kOk;
}

int cmd_nz(const CommonOptions& opts, const std::string& spec, std::ostream& out) {
  const Loaded in = load(opts);
  const TwistedMatrices tm = twisted_matrices(in.ctx);
  if (spec == "raw") {
    if (opts.json) {
      Json rep = report("nz", in.digest);
      auto& o = rep["outputs"];
      o["spec"] = "raw";
      o["generators"] = generators_json(in.ctx);
      o["G"] = to_json(tm.g);
      o["Gp"] = to_json(tm.gp);
      o["Gpp"] = to_json(tm.gpp);
      o["A"] = to_json(tm.a);
      o["B"] = to_json(tm.b);
      emit(out, rep, in.warnings);
      return kOk;
    }
    print_warnings(out, in.warnings);
    out << "tree:";
    for (int g : in.ctx.dual.tree) out << ' ' << generator_name(g);
    out << " (eliminated)\n";
    const std::pair<const char*, const GroupRingMatrix*> mats[] = {
        {"G", &tm.g}, {"G'", &tm.gp}, {"G''", &tm.gpp}, {"A", &tm.a}, {"B", &tm.b}};
    for (const auto& [name, m] : mats) {
      out << name << ":\n";
      for (std::size_t i = 0; i < m->rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m->cols(); ++j) out << (j ? " | " : " ") << to_string((*m)(i, j), generator_name);
        out << " ]\n";
      }
    }
    return kOk;
  }
  const AlphaMap alpha = resolve_alpha(in, opts);
  const ZMatrix a = specialize(tm.a, alpha);
  const ZMatrix b = specialize(tm.b, alpha);
  if (opts.json) {
    Json rep = report("nz", in.digest);
    auto& o = rep["outputs"];
    o["spec"] = "alpha";
    o["alpha"] = alpha_json(in.ctx, alpha);
    o["A_alpha"] = to_json(a);
    o["B_alpha"] = to_json(b);
    o["det_A_alpha"] = to_json(det(a));
    o["det_B_alpha"] = to_json(det(b));
    emit(out, rep, in.warnings);
    return kOk;
  }
  print_warnings(out, in.warnings);
  out << "alpha: " << alpha_text(in.ctx, alpha) << '\n';
  const std::pair<const char*, const ZMatrix*> mats[] = {{"A_alpha(t)", &a}, {"B_alpha(t)", &b}};
  for (const auto& [name, m] : mats) {
    out << name << ":\n";
    for (std::size_t i = 0; i < m->rows(); ++i) {
      out << "  [";
      for (std::size_t j = 0; j < m->cols(); ++j) out << (j ? " | " : " ") << to_string((*m)(i, j));
      out << " ]\n";
    }
  }
  out << "det A_alpha(t) = " << to_string(det(a)) << '\n';
  out << "det B_alpha(t) = " << to_string(det(b)) << '\n';
  return kOk;
}

int cmd_alexander(const CommonOptions& opts, bool check_unit, std::ostream& out) {
  const Loaded in = load(opts);
  const AlphaMap alpha = resolve_alpha(in, opts);
  const AlexanderResult r = alexander_polynomial(in.ctx, alpha);
  const TwistedMatrices tm = twisted_matrices(in.ctx);
  const SymplecticReport sym = check_symplectic(tm, alpha);
  const Mod2Report m2 = mod2_report(in.ctx, alpha);
  const FoxBoundaryReport fox = fox_boundary_crosscheck(in.ctx, alpha);
  std::optional<ZPoly> oracle;
  if (!r.degenerate) oracle = presentation_alexander(in.ctx.presentation, alpha);

  std::vector<std::pair<std::string, bool>> checks{
      {"symplectic", sym.holds()},
      {"fox_boundary", fox.holds && fox.alternate_pairs_hold && fox.cyclic_block_matches},
      {"z_alpha_constant", r.alpha_abs_constant},
  };
  if (!r.degenerate) {
    checks.emplace_back("palindromic", r.palindromic);
    checks.emplace_back("factorization_shape", r.shape_holds);
    checks.emplace_back("mod2", m2.holds());
    checks.emplace_back("presentation_oracle", oracle && *oracle == *r.alexander);
    if (check_unit) {
      const mpz_class at_one = r.alexander->evaluate(mpz_class(1));
      checks.emplace_back("unit_at_1", abs(at_one) == 1);
    }
  }
  bool all = true;
  for (const auto& [name, ok] : checks) all = all && ok;

  if (opts.json) {
    Json rep = report("alexander", in.digest);
    auto& o = rep["outputs"];
    o["alpha"] = alpha_json(in.ctx, alpha);
    o["det_B"] = to_json(r.det_b);
    o["det_B_normalized"] = to_json(normalize(r.det_b));
    o["det_B_text"] = to_string(normalize(r.det_b));
    o["degenerate"] = r.degenerate;
    o["z_alphas"] = r.z_alphas;
    o["z_product"] = to_json(r.z_product);
    if (r.alexander) {
      o["alexander"] = to_json(*r.alexander);
      o["alexander_text"] = to_string(*r.alexander);
    } else {
      o["alexander"] = nullptr;
    }
    o["n"] = r.n;
    o["m"] = r.m;
    o["det_A"] = to_json(normalize(m2.det_a));
    o["det_A_minus_B"] = to_json(normalize(m2.det_a_minus_b));
    o["zp_alphas"] = m2.zp_alphas;
    o["zpp_alphas"] = m2.zpp_alphas;
    o["mod2"] = Json{{"det_A", to_json(mod2(normalize(m2.det_a)))},
                     {"det_A_minus_B", to_json(mod2(normalize(m2.det_a_minus_b)))},
                     {"det_A_holds", m2.a_holds},
                     {"det_A_minus_B_holds", m2.a_minus_b_holds}};
    o["fox_boundary"] = Json{{"side", fox.side},
                             {"holds", fox.holds},
                             {"alternate_pairs_hold", fox.alternate_pairs_hold},
                             {"cyclic_block_det", to_json(normalize(fox.cyclic_block_det))},
                             {"cyclic_block_matches", fox.cyclic_block_matches}};
    Json cj = Json::object();
    for (const auto& [name, ok] : checks) cj[name] = ok;
    o["checks"] = cj;
    emit(out, rep, in.warnings);
    return all ? kOk : kCheckFailure;
  }
  print_warnings(out, in.warnings);
  out << "alpha: " << alpha_text(in.ctx, alpha) << '\n';
  out << "det B_alpha(t) = " << to_string(r.det_b) << '\n';
  out << "  normalized   = " << to_string(normalize(r.det_b)) << '\n';
  out << "Z-curve alphas: " << ints_text(r.z_alphas) << '\n';
  if (r.degenerate) {
    out << "det B_alpha vanishes: some Z-curve has alpha = 0\n";
  } else {
    out << "Alexander polynomial: " << to_string(*r.alexander) << '\n';
  }
  out << "det A_alpha(t) = " << to_string(normalize(m2.det_a)) << '\n';
  for (const auto& [name, ok] : checks) out << "check " << name << ": " << (ok ? "ok" : "FAILED") << '\n';
  return all ? kOk : kCheckFailure;
}

int cmd_twisted(const CommonOptions& opts, const TwistedOptions& topts, std::ostream& out) {
  const Loaded in = load(opts);
  const AlphaMap alpha = resolve_alpha(in, opts);
  Representation rho;
  std::string source;
  if (topts.rep_file) {
    rho = load_representation(read_file(*topts.rep_file), in.ctx);
    source = "file";
  } else if (topts.builtin) {
    rho = fig8_geometric_rep(in.ctx);
    source = *topts.builtin;
  } else {
    rho = trivial_representation(in.ctx, topts.trivial_dim);
    source = "trivial";
  }
  const RepresentationDefects defects = measure(in.ctx, rho);
  const TwistedResult r = twisted_alexander(in.ctx, alpha, rho);

  std::optional<bool> matches_untwisted;
  if (source == "trivial") {
    // Trivial n-dimensional lift: det B and the divisor are the n-th powers of the untwisted ones.
    const AlexanderResult base = alexander_polynomial(in.ctx, alpha);
    CPoly det_pow(1.0), z_pow(1.0);
    for (int k = 0; k < rho.dim; ++k) {
      det_pow *= to_complex(base.det_b);
      z_pow *= to_complex(base.z_product);
    }
    matches_untwisted = associated_ratio(r.det_b, r.divisor, det_pow, z_pow, 1e-6);
  }
  const bool ok = !matches_untwisted || *matches_untwisted;

  if (opts.json) {
    Json rep = report("twisted", in.digest);
    auto& o = rep["outputs"];
    o["representation"] = Json{{"source", source},
                               {"dim", rho.dim},
                               {"max_det_error", defects.max_det_error},
                               {"max_relator_error", defects.max_relator_error}};
    o["alpha"] = alpha_json(in.ctx, alpha);
    o["det_B"] = to_json(r.det_b);
    o["det_B_normalized"] = to_json(normalize(r.det_b));
    o["z_alphas"] = r.z_alphas;
    Json factors = Json::array();
    for (const auto& f : r.z_factors) factors.push_back(to_json(f));
    o["z_factors"] = factors;
    o["divisor"] = to_json(r.divisor);
    o["degenerate"] = r.degenerate;
    o["divisible"] = r.divisible;
    o["twisted_alexander"] = r.twisted_alexander ? to_json(*r.twisted_alexander) : Json(nullptr);
    if (matches_untwisted) o["matches_untwisted"] = *matches_untwisted;
    emit(out, rep, in.warnings);
    return ok ? kOk : kCheckFailure;
  }
  print_warnings(out, in.warnings);
  out << "representation: " << source << " (dim " << rho.dim << ", relator defect " << std::scientific
      << std::setprecision(2) << defects.max_relator_error << std::defaultfloat << ")\n";
  out << "det B = " << to_string(cleaned(r.det_b, 1e-9)) << '\n';
  out << "  normalized = " << to_string(cleaned(normalize(r.det_b), 1e-9)) << '\n';
  out << "Z-curve alphas: " << ints_text(r.z_alphas) << '\n';
  out << "divisor = " << to_string(cleaned(r.divisor, 1e-9)) << '\n';
  if (r.degenerate) {
    out << "det B vanishes\n";
  } else if (r.twisted_alexander) {
    out << "twisted Alexander polynomial: " << to_string(*r.twisted_alexander) << '\n';
  } else {
    out << "det B is not divisible by the divisor; the invariant is the ratio det B / divisor\n";
  }
  if (matches_untwisted) out << "check matches_untwisted: " << (*matches_untwisted ? "ok" : "FAILED") << '\n';
  return ok ? kOk : kCheckFailure;
}

int cmd_l2(const CommonOptions& opts, const L2Options& lopts, std::ostream& out) {
  const Loaded in = load(opts);
  const AlphaMap alpha = resolve_alpha(in, opts);
  std::vector<FiniteQuotient> quotients;
  for (int m : lopts.cyclic) quotients.push_back(cyclic_quotient(alpha, in.ctx.presentation, m));
  for (const auto& file : lopts.quotient_files)
    quotients.push_back(load_quotient(read_file(file), in.ctx.presentation, file));
  const TorsionProfile p = detb_profile(in.ctx, alpha, lopts.t_grid, quotients);
  std::vector<std::string> warnings = in.warnings;
  warnings.insert(warnings.end(), p.warnings.begin(), p.warnings.end());

  if (opts.json) {
    Json rep = report("l2", in.digest);
    auto& o = rep["outputs"];
    o["alpha"] = alpha_json(in.ctx, alpha);
    o["t_grid"] = p.t_grid;
    o["z_alphas"] = p.z_alphas;
    o["n_abs"] = p.n_abs;
    o["exponent_candidates"] = p.exponent_candidates;
    o["z_factor_log"] = p.z_factor_log;
    Json entries = Json::array();
    for (const auto& e : p.entries) {
      Json je{{"t", e.t}, {"quotient", e.quotient}, {"degree", e.degree}, {"singular", e.estimate.singular}};
      je["estimate"] = e.estimate.value ? Json(*e.estimate.value) : Json(nullptr);
      je["regularized"] = e.estimate.regularized;
      je["kernel_dim"] = e.estimate.kernel_dim;
      entries.push_back(je);
    }
    o["entries"] = entries;
    o["note"] = "estimates under finite quotients; abelian quotients approximate Mahler measures of the abelianized determinant";
    emit(out, rep, warnings);
    return kOk;
  }
  print_warnings(out, warnings);
  out << "alpha: " << alpha_text(in.ctx, alpha) << '\n';
  out << "Z-curve alphas: " << ints_text(p.z_alphas) << "  (exponent candidates " << ints_text(p.exponent_candidates)
      << ")\n";
  out << "estimates of log det(alpha_t(B)) under finite quotients:\n";
  out << std::fixed << std::setprecision(6);
  for (const auto& e : p.entries) {
    out << "  t=" << e.t << "  " << e.quotient << "  ";
    if (e.estimate.singular) {
      out << "singular (kernel " << e.estimate.kernel_dim << "), regularized " << e.estimate.regularized << '\n';
    } else {
      out << *e.estimate.value << '\n';
    }
  }
  out << std::defaultfloat;
  return kOk;
}

}  // namespace nzalex::cli
