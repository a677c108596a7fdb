#include "nzalex/nz_invariants.hpp"

#include <cstdlib>

#include "nzalex/error.hpp"

namespace nzalex {

TwistedMatrices twisted_matrices(const Context& ctx) {
  const auto n = static_cast<std::size_t>(ctx.size());
  TwistedMatrices tm{GroupRingMatrix(n, n), GroupRingMatrix(n, n), GroupRingMatrix(n, n), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    const FreeWord& big = ctx.words[i].R;
    for (std::size_t j = 0; j < n; ++j) {
      const int tet = static_cast<int>(j);
      tm.g(i, j) = ctx.project(fox_derivative(big, shape_letter_id(tet, ShapeKind::Z)));
      tm.gp(i, j) = ctx.project(fox_derivative(big, shape_letter_id(tet, ShapeKind::Zp)));
      tm.gpp(i, j) = ctx.project(fox_derivative(big, shape_letter_id(tet, ShapeKind::Zpp)));
    }
  }
  tm.a = tm.g - tm.gp;
  tm.b = tm.gpp - tm.gp;
  return tm;
}

namespace {
ZMatrix reflected(const ZMatrix& m) {
  return m.map([](const ZPoly& p) { return p.reflected(); });
}
}  // namespace

SymplecticReport check_symplectic(const Matrix<mpz_class>& a, const Matrix<mpz_class>& b, const ZMatrix& a_alpha,
                                  const ZMatrix& b_alpha) {
  SymplecticReport r;
  r.classical_symmetric = a * b.transpose() == b * a.transpose();
  r.specialized_identity =
      a_alpha * reflected(b_alpha).transpose() == b_alpha * reflected(a_alpha).transpose();
  return r;
}

SymplecticReport check_symplectic(const TwistedMatrices& tm, const AlphaMap& alpha) {
  return check_symplectic(augment(tm.a), augment(tm.b), specialize(tm.a, alpha), specialize(tm.b, alpha));
}

std::vector<std::int64_t> curve_alphas(const Context& ctx, const AlphaMap& alpha, ShapeKind kind) {
  CurveSystem curves = smoothing_curves(ctx.tri, ctx.dual, kind);
  assign_alpha(curves, alpha);
  std::vector<std::int64_t> out;
  for (const auto& c : curves.components) out.push_back(c.alpha);
  return out;
}

AlexanderResult alexander_polynomial(const Context& ctx, const AlphaMap& alpha) {
  const TwistedMatrices tm = twisted_matrices(ctx);
  AlexanderResult r;
  r.det_b = det(specialize(tm.b, alpha));
  r.z_alphas = curve_alphas(ctx, alpha, ShapeKind::Z);
  r.m = r.z_alphas.size();
  r.n = r.z_alphas.empty() ? 0 : std::llabs(r.z_alphas.front());
  r.alpha_abs_constant = true;
  for (auto a : r.z_alphas) r.alpha_abs_constant = r.alpha_abs_constant && std::llabs(a) == r.n;
  r.z_product = cyclotomic_product(r.z_alphas);
  if (r.det_b.is_zero()) {
    r.degenerate = true;
    return r;
  }
  if (r.z_product.is_zero())
    throw Error(ErrorKind::InternalDivisionFailure,
                "det B is nonzero but some Z-curve has alpha = 0; det B = " + to_string(r.det_b));
  const ZPoly numerator = r.det_b * zpoly(0, {-1, 1});
  auto q = exact_divide(numerator, r.z_product);
  if (!q)
    throw Error(ErrorKind::InternalDivisionFailure, "det B (t-1) = " + to_string(numerator) +
                                                        " is not divisible by " + to_string(r.z_product));
  r.alexander = normalize(*q);
  r.palindromic = is_palindromic(r.det_b);
  ZPoly power(1);
  for (std::size_t k = 0; k < r.m; ++k) power *= ZPoly::t_power(static_cast<int>(r.n)) - ZPoly(1);
  r.shape_holds = r.alpha_abs_constant && associated(numerator, *r.alexander * power);
  return r;
}

Mod2Report mod2_report(const ZMatrix& a_alpha, const ZMatrix& b_alpha, const ZPoly& alexander,
                       const std::vector<std::int64_t>& zp_alphas, const std::vector<std::int64_t>& zpp_alphas) {
  Mod2Report r;
  r.applicable = !alexander.is_zero();
  r.det_a = det(a_alpha);
  r.det_a_minus_b = det(a_alpha - b_alpha);
  r.zp_alphas = zp_alphas;
  r.zpp_alphas = zpp_alphas;
  if (!r.applicable) return r;
  const ZPoly t_minus_1 = zpoly(0, {-1, 1});
  auto expected = [&](const std::vector<std::int64_t>& alphas) {
    const ZPoly full = alexander * cyclotomic_product(alphas);
    auto q = exact_divide(full, t_minus_1);
    return q ? *q : full;
  };
  r.expected_a = expected(zpp_alphas);
  r.expected_a_minus_b = expected(zp_alphas);
  // Compare after clearing the (t-1) denominator, which is valid in the domain F_2[t^{+-1}].
  r.a_holds = f2_associated(r.det_a * t_minus_1, alexander * cyclotomic_product(zpp_alphas));
  r.a_minus_b_holds = f2_associated(r.det_a_minus_b * t_minus_1, alexander * cyclotomic_product(zp_alphas));
  return r;
}

Mod2Report mod2_report(const Context& ctx, const AlphaMap& alpha) {
  const TwistedMatrices tm = twisted_matrices(ctx);
  const AlexanderResult alex = alexander_polynomial(ctx, alpha);
  return mod2_report(specialize(tm.a, alpha), specialize(tm.b, alpha), alex.alexander.value_or(ZPoly{}),
                     curve_alphas(ctx, alpha, ShapeKind::Zp), curve_alphas(ctx, alpha, ShapeKind::Zpp));
}

std::optional<std::vector<ZPoly>> diagonal_factor(const ZMatrix& product, const ZMatrix& target, bool right) {
  if (product.rows() != target.rows() || product.cols() != target.cols()) return std::nullopt;
  const std::size_t lines = right ? target.cols() : target.rows();
  const std::size_t len = right ? target.rows() : target.cols();
  auto at = [&](const ZMatrix& m, std::size_t line, std::size_t k) -> const ZPoly& {
    return right ? m(k, line) : m(line, k);
  };
  std::vector<ZPoly> d;
  for (std::size_t line = 0; line < lines; ++line) {
    ZPoly factor(1);
    for (std::size_t k = 0; k < len; ++k) {
      if (at(target, line, k).is_zero()) continue;
      auto q = exact_divide(at(product, line, k), at(target, line, k));
      if (!q || q->coeffs().size() != 1 || abs(q->leading()) != 1) return std::nullopt;
      factor = *q;
      break;
    }
    for (std::size_t k = 0; k < len; ++k)
      if (at(product, line, k) != at(target, line, k) * factor) return std::nullopt;
    d.push_back(factor);
  }
  return d;
}

namespace {

// Row vector alpha(v_f) in Z[t^{+-1}]^{2N} for face f of tet j.
std::vector<ZPoly> face_vector(const Context& ctx, const AlphaMap& alpha, int tet, int face) {
  std::vector<ZPoly> v(ctx.dual.generators.size());
  const int g = ctx.dual.face_generator[tet][face];
  v[static_cast<std::size_t>(g)] =
      ctx.dual.inward(tet, face) ? ZPoly::t_power(static_cast<int>(alpha(g))) : ZPoly(-1);
  return v;
}

bool fox_identity(const ZMatrix& d2, const ZMatrix& d1b, const ZMatrix& b_alpha) {
  const ZMatrix product = d2.transpose() * d1b.transpose();
  return diagonal_factor(product, b_alpha, true).has_value() || diagonal_factor(product, b_alpha, false).has_value();
}

}  // namespace

FoxBoundaryReport fox_boundary_crosscheck(const Context& ctx, const AlphaMap& alpha) {
  const auto n = static_cast<std::size_t>(ctx.size());
  const std::size_t gens = ctx.dual.generators.size();
  FoxBoundaryReport r;
  r.boundary2 = ZMatrix(gens, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < gens; ++g)
      r.boundary2(g, i) = specialize(ctx.project(fox_derivative(ctx.words[i].r, static_cast<int>(g))), alpha);

  const auto pairs = z_adjacent_pairs(ctx.tri, ctx.dual);
  r.boundary1 = ZMatrix(n, gens);
  r.boundary1_b = ZMatrix(n, gens);
  ZMatrix alternate(n, gens);
  for (std::size_t j = 0; j < n; ++j) {
    const int tet = static_cast<int>(j);
    for (int k = 0; k < 2; ++k) {
      const ZAdjacentPair& pair = pairs[j][static_cast<std::size_t>(k)];
      for (int face : {pair.inward_face, pair.outward_face}) {
        const auto v = face_vector(ctx, alpha, tet, face);
        for (std::size_t g = 0; g < gens; ++g) {
          r.boundary1(j, g) += v[g];
          if (k == 0) r.boundary1_b(j, g) += v[g];
          if (k == 1) alternate(j, g) += v[g];
        }
      }
    }
  }
  const ZMatrix b_alpha = specialize(twisted_matrices(ctx).b, alpha);
  r.product = r.boundary2.transpose() * r.boundary1_b.transpose();
  if (auto d = diagonal_factor(r.product, b_alpha, true)) {
    r.side = "right";
    r.diagonal = *d;
  } else if (auto e = diagonal_factor(r.product, b_alpha, false)) {
    r.side = "left";
    r.diagonal = *e;
  } else {
    r.side = "none";
  }
  r.holds = r.side != "none";
  r.alternate_pairs_hold = fox_identity(r.boundary2, alternate, b_alpha);

  ZMatrix stacked(2 * n, gens);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t g = 0; g < gens; ++g) {
      stacked(j, g) = r.boundary1_b(j, g);
      stacked(n + j, g) = r.boundary1(j, g) - r.boundary1_b(j, g);
    }
  r.cyclic_block_det = det(stacked);
  r.z_product = cyclotomic_product(curve_alphas(ctx, alpha, ShapeKind::Z));
  r.cyclic_block_matches = associated(r.cyclic_block_det, r.z_product);
  return r;
}

ZPoly presentation_alexander(const Presentation& presentation, const AlphaMap& alpha) {
  const auto& gens = presentation.generators;
  std::size_t drop = gens.size();
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (alpha(gens[j]) != 0) {
      drop = j;
      break;
    }
  if (drop == gens.size()) throw Error(ErrorKind::InvalidAlpha, "alpha vanishes on every generator");
  std::vector<int> kept;
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (j != drop) kept.push_back(gens[j]);
  if (kept.size() != presentation.relators.size())
    throw Error(ErrorKind::NotSquare, "presentation does not have deficiency one");
  const ZPoly minor = det(specialize(fox_jacobian(presentation.relators, kept), alpha));
  const ZPoly denominator = ZPoly::t_power(static_cast<int>(alpha(gens[drop]))) - ZPoly(1);
  auto q = exact_divide(minor * zpoly(0, {-1, 1}), denominator);
  if (!q) throw Error(ErrorKind::InternalDivisionFailure, "Fox minor is not divisible by t^a - 1");
  return normalize(*q);
}

}  // namespace nzalex
