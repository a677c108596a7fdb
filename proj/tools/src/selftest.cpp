#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "nzalex_cli/cli.hpp"

namespace nzalex::cli {

namespace {

ZPoly t_minus_1() { return zpoly(0, {-1, 1}); }

Context fixture(const SelftestOptions& opts, const std::string& name) {
  return Context::build(parse_triangulation(read_file(opts.fixtures + "/" + name)));
}

// Mahler measure of an integer polynomial from its roots.
double log_mahler(const ZPoly& p) {
  const ZPoly q = normalize(p);
  const auto& c = q.coeffs();
  const int d = static_cast<int>(c.size()) - 1;
  double m = std::log(std::abs(c.back().get_d()));
  if (d <= 0) return m;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[static_cast<std::size_t>(i)].get_d() / c.back().get_d();
  const Eigen::VectorXcd roots = Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(companion).eigenvalues();
  for (Eigen::Index i = 0; i < roots.size(); ++i) m += std::log(std::max(1.0, std::abs(roots(i))));
  return m;
}

CriterionResult criterion1(const SelftestOptions& opts) {
  CriterionResult r{1, "fig8 det B and Alexander polynomial", false, ""};
  const Context ctx = fixture(opts, "fig8.tri");
  const AlexanderResult a = alexander_polynomial(ctx, compute_alpha(ctx, 1));
  const ZPoly want_det = t_minus_1() * zpoly(0, {1, -3, 1});
  r.pass = normalize(a.det_b) == want_det && a.alexander && *a.alexander == zpoly(0, {1, -3, 1});
  r.detail = "det B = " + to_string(normalize(a.det_b)) + ", Delta = " + (a.alexander ? to_string(*a.alexander) : "-");
  return r;
}

CriterionResult criterion2(const SelftestOptions& opts) {
  CriterionResult r{2, "fig8 Z, Z', Z'' curve data", false, ""};
  const Context ctx = fixture(opts, "fig8.tri");
  const AlphaMap alpha = compute_alpha(ctx, 1);
  auto z = curve_alphas(ctx, alpha, ShapeKind::Z);
  const auto zp = curve_alphas(ctx, alpha, ShapeKind::Zp);
  const auto zpp = curve_alphas(ctx, alpha, ShapeKind::Zpp);
  std::sort(z.begin(), z.end());
  r.pass = z == std::vector<std::int64_t>{-1, 1} && zp == std::vector<std::int64_t>{0} &&
           zpp == std::vector<std::int64_t>{0};
  r.detail = "Z components " + std::to_string(z.size()) + ", Z' " + std::to_string(zp.size()) + ", Z'' " +
             std::to_string(zpp.size());
  return r;
}

CriterionResult criterion3(const SelftestOptions& opts) {
  CriterionResult r{3, "fig8 mod-2 determinants vanish", false, ""};
  const Context ctx = fixture(opts, "fig8.tri");
  const Mod2Report m = mod2_report(ctx, compute_alpha(ctx, 1));
  r.pass = mod2(m.det_a).is_zero() && mod2(m.det_a_minus_b).is_zero() && m.holds();
  r.detail = "det A = " + to_string(m.det_a) + ", det(A-B) = " + to_string(m.det_a_minus_b);
  return r;
}

CriterionResult criterion4(const SelftestOptions& opts) {
  CriterionResult r{4, "8_2 determinants", false, ""};
  const Context ctx = fixture(opts, "k8_2.tri");
  const AlphaMap alpha = compute_alpha(ctx);
  const AlexanderResult a = alexander_polynomial(ctx, alpha);
  const Mod2Report m = mod2_report(ctx, alpha);
  const ZPoly delta = zpoly(0, {1, -3, 3, -3, 3, -3, 1});
  const ZPoly det_a = t_minus_1() * zpoly(0, {1, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 1});
  // The printed mod-2 product has degree 12; it agrees with det A / (t-1).
  const ZPoly mod2_product = t_minus_1() * t_minus_1() * zpoly(0, {1, 1, 1, 1, 1}) * delta;
  const auto reduced = exact_divide(m.det_a, t_minus_1());
  r.pass = associated(a.det_b, t_minus_1() * delta) && a.alexander && *a.alexander == delta &&
           associated(m.det_a, det_a) && reduced && f2_associated(*reduced, mod2_product) && m.holds();
  r.detail = "det B = " + to_string(normalize(a.det_b)) + ", det A = " + to_string(normalize(m.det_a));
  return r;
}

CriterionResult criterion5(const SelftestOptions& opts) {
  CriterionResult r{5, "fig8 twisted Alexander polynomial", false, ""};
  const Context ctx = fixture(opts, "fig8.tri");
  const TwistedResult tw = twisted_alexander(ctx, compute_alpha(ctx, 1), fig8_geometric_rep(ctx));
  const CPoly want_det = to_complex(t_minus_1() * t_minus_1() * t_minus_1() * t_minus_1() * zpoly(0, {1, -4, 1}));
  const CPoly want = to_complex(zpoly(0, {1, -4, 1}));
  auto close = [](const CPoly& a, const CPoly& b) {
    if (a.coeffs().size() != b.coeffs().size()) return false;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
      if (std::abs(a.coeffs()[i] - b.coeffs()[i]) > 1e-6) return false;
    return true;
  };
  r.pass = close(normalize(cleaned(tw.det_b, 1e-9)), want_det) && tw.twisted_alexander &&
           close(*tw.twisted_alexander, want);
  r.detail = tw.twisted_alexander ? to_string(*tw.twisted_alexander) : "not divisible";
  return r;
}

FreeWord random_word(std::mt19937_64& rng, int gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, gens - 1), sign(0, 1);
  std::vector<Letter> letters;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) letters.push_back(Letter{gen(rng), sign(rng) ? 1 : -1});
  return FreeWord(letters);
}

ZPoly random_poly(std::mt19937_64& rng, int width, int range) {
  std::uniform_int_distribution<int> lo(-2, 2), c(-range, range), w(0, width);
  std::vector<mpz_class> coeffs;
  const int n = w(rng) + 1;
  for (int i = 0; i < n; ++i) coeffs.emplace_back(c(rng));
  return ZPoly(lo(rng), std::move(coeffs));
}

ZMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, 2, 3);
  return m;
}

CriterionResult criterion6(const SelftestOptions& opts) {
  CriterionResult r{6, "property suites", true, ""};
  std::mt19937_64 rng(20240611);
  std::ostringstream detail;
  auto record = [&](const std::string& name, bool ok) {
    r.pass = r.pass && ok;
    if (!ok) detail << name << " failed; ";
  };
  bool fox = true;
  for (int i = 0; i < 200 && fox; ++i) {
    const FreeWord w = random_word(rng, 4, 40);
    GroupRingElem lhs;
    for (int g = 0; g < 4; ++g)
      lhs += fox_derivative(w, g) * (GroupRingElem::word(FreeWord::letter(g)) - GroupRingElem::scalar(1));
    fox = lhs == GroupRingElem::word(w) - GroupRingElem::scalar(1);
  }
  record("Fox identity", fox);
  bool mult = true;
  for (int i = 0; i < 200 && mult; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    const ZMatrix a = random_matrix(rng, n);
    const ZMatrix b = random_matrix(rng, n);
    mult = det(a * b) == det(a) * det(b);
  }
  record("det multiplicativity", mult);
  bool divide = true;
  for (int i = 0; i < 200 && divide; ++i) {
    const ZPoly p = random_poly(rng, 6, 9);
    ZPoly q = random_poly(rng, 4, 9);
    if (q.is_zero()) q = ZPoly(1);
    const auto back = exact_divide(p * q, q);
    divide = back && *back == p;
  }
  record("exact_divide round trip", divide);
  for (const char* name : {"fig8.tri", "k8_2.tri"}) {
    const Context ctx = fixture(opts, name);
    const AlphaMap alpha = compute_alpha(ctx);
    const AlexanderResult a = alexander_polynomial(ctx, alpha);
    const TwistedMatrices tm = twisted_matrices(ctx);
    const GluingMatrices cl = classical_gluing_matrices(ctx.tri);
    auto to_mpz = [](const Matrix<std::int64_t>& m) { return m.map([](std::int64_t x) { return mpz_class(static_cast<long>(x)); }); };
    record(std::string(name) + " palindromic", a.palindromic);
    record(std::string(name) + " augmentation",
           augment(tm.g) == to_mpz(cl.g) && augment(tm.gp) == to_mpz(cl.gp) && augment(tm.gpp) == to_mpz(cl.gpp));
    record(std::string(name) + " symplectic", check_symplectic(tm, alpha).holds());
    const FoxBoundaryReport f = fox_boundary_crosscheck(ctx, alpha);
    record(std::string(name) + " boundary identity", f.holds && f.alternate_pairs_hold && f.cyclic_block_matches);
  }
  r.detail = r.pass ? "all suites pass" : detail.str();
  return r;
}

CriterionResult criterion7(const SelftestOptions& opts) {
  CriterionResult r{7, "presentation Fox-matrix oracle", true, ""};
  for (const char* name : {"fig8.tri", "k8_2.tri"}) {
    const Context ctx = fixture(opts, name);
    const AlphaMap alpha = compute_alpha(ctx);
    const AlexanderResult a = alexander_polynomial(ctx, alpha);
    const ZPoly oracle = presentation_alexander(ctx.presentation, alpha);
    const bool ok = a.alexander && *a.alexander == oracle;
    r.pass = r.pass && ok;
    r.detail += std::string(name) + ": " + to_string(oracle) + (ok ? "" : " (mismatch)") + "; ";
  }
  return r;
}

CriterionResult criterion8(const SelftestOptions& opts) {
  CriterionResult r{8, "L2 estimator properties", true, ""};
  std::ostringstream detail;
  detail << std::setprecision(4);
  Presentation free_one{{0}, {}};
  AlphaMap unit(std::map<int, std::int64_t>{{0, 1}});
  if (!opts.quick) {
    const FiniteQuotient q = cyclic_quotient(unit, free_one, 4096);
    for (double t : {0.5, 2.0}) {
      RealGroupRingMatrix m(1, 1);
      m(0, 0) = RealGroupRingElem::scalar(1.0) - RealGroupRingElem::word(FreeWord::letter(0, -1), 1.0 / t);
      const FkEstimate e = fk_estimate(m, q);
      const double target = std::log(std::max(1.0, 1.0 / t));
      const bool ok = e.value && std::abs(*e.value - target) < 0.05;
      r.pass = r.pass && ok;
      detail << "rank-1 t=" << t << ": " << (e.value ? *e.value : NAN) << "; ";
    }
  }
  // Finite-level multiplicativity and block additivity on the fig8 group.
  const Context ctx = fixture(opts, "fig8.tri");
  const AlphaMap alpha = compute_alpha(ctx, 1);
  const FiniteQuotient q = cyclic_quotient(alpha, ctx.presentation, 12);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  auto random_elem = [&] {
    RealGroupRingElem x = RealGroupRingElem::scalar(3.0);
    for (int k = 0; k < 3; ++k) {
      FreeWord w;
      for (int s = 0; s < 3; ++s)
        w *= FreeWord::letter(ctx.presentation.generators[rng() % ctx.presentation.generators.size()], rng() % 2 ? 1 : -1);
      x.add_term(w, coef(rng));
    }
    return x;
  };
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    RealGroupRingMatrix x(2, 2), y(2, 2), z(2, 2), block(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        x(i, j) = random_elem();
        y(i, j) = random_elem();
        z(i, j) = random_elem();
      }
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        block(i, j) = x(i, j);
        block(i, j + 2) = z(i, j);
        block(i + 2, j + 2) = y(i, j);
      }
    const auto ex = fk_estimate(x, q), ey = fk_estimate(y, q), exy = fk_estimate(x * y, q), eb = fk_estimate(block, q);
    if (!ex.value || !ey.value || !exy.value || !eb.value) continue;
    worst = std::max({worst, std::abs(*exy.value - *ex.value - *ey.value), std::abs(*eb.value - *ex.value - *ey.value)});
  }
  const bool exact = worst < 1e-9;
  r.pass = r.pass && exact;
  detail << "multiplicativity/additivity defect " << worst << "; ";
  if (!opts.quick) {
    const double target = log_mahler(t_minus_1() * zpoly(0, {1, -3, 1}));
    const TorsionProfile p = detb_profile(ctx, alpha, {1.0}, {cyclic_quotient(alpha, ctx.presentation, 1024)});
    const double got = p.entries.front().estimate.regularized;
    const bool ok = std::abs(got - target) < 0.05;
    r.pass = r.pass && ok;
    detail << "fig8 t=1 degree 1024: " << got << " vs " << target;
  }
  r.detail = detail.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_selftest(const SelftestOptions& opts) {
  const std::vector<std::function<CriterionResult(const SelftestOptions&)>> checks{
      criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8};
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    try {
      out.push_back(checks[i](opts));
    } catch (const std::exception& e) {
      out.push_back(CriterionResult{static_cast<int>(i + 1), "criterion " + std::to_string(i + 1), false, e.what()});
    }
  }
  return out;
}

int cmd_selftest(const SelftestOptions& opts, std::ostream& out) {
  const auto results = run_selftest(opts);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (opts.json) {
    Json rep{{"command", "selftest"}, {"outputs", Json::object()}, {"warnings", Json::array()}};
    Json items = Json::array();
    for (const auto& r : results)
      items.push_back(Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    rep["outputs"]["criteria"] = items;
    rep["outputs"]["all_pass"] = all;
    out << rep.dump(2) << '\n';
  } else {
    for (const auto& r : results)
      out << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << " -- " << r.detail << '\n';
  }
  return all ? kOk : kCheckFailure;
}

}  // namespace nzalex::cli
