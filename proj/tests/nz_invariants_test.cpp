#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"

namespace nzalex {
namespace {

using namespace nzalex::testing;

struct Fixture {
  Context ctx;
  AlphaMap alpha;
};

Fixture fig8() {
  Context ctx = fixture_ctx("fig8.tri");
  AlphaMap a = compute_alpha(ctx, kFig8Meridian);
  return {std::move(ctx), std::move(a)};
}

Fixture k8_2() {
  Context ctx = fixture_ctx("k8_2.tri");
  AlphaMap a = compute_alpha(ctx);
  return {std::move(ctx), std::move(a)};
}

ZPoly t1() { return zpoly(0, {-1, 1}); }

Matrix<mpz_class> to_mpz(const Matrix<std::int64_t>& m) {
  return m.map([](std::int64_t x) { return mpz_class(static_cast<long>(x)); });
}

TEST(Alpha, Fig8Values) {
  const auto [ctx, a] = fig8();
  for (const auto& r : ctx.presentation.relators) EXPECT_TRUE(a.kills(r));
  EXPECT_EQ(a(kFig8Meridian), 1);
  EXPECT_THROW(checked_alpha(ctx, {{0, 1}}), Error);
}

TEST(Twisted, AugmentationMatchesClassical) {
  for (const Fixture& f : {fig8(), k8_2()}) {
    const TwistedMatrices tm = twisted_matrices(f.ctx);
    const GluingMatrices cl = classical_gluing_matrices(f.ctx.tri);
    EXPECT_EQ(augment(tm.g), to_mpz(cl.g));
    EXPECT_EQ(augment(tm.gp), to_mpz(cl.gp));
    EXPECT_EQ(augment(tm.gpp), to_mpz(cl.gpp));
    EXPECT_EQ(augment(tm.a), to_mpz(cl.a));
    EXPECT_EQ(augment(tm.b), to_mpz(cl.b));
  }
}

TEST(Twisted, Fig8SpecializedBMatchesPublishedUpToLeftUnits) {
  const auto [ctx, a] = fig8();
  const ZMatrix ours = specialize(twisted_matrices(ctx).b, a);
  const ZMatrix published{{zpoly(1, {-1}), zpoly(-1, {1, -2})}, {zpoly(0, {-1, 2}), zpoly(1, {1})}};
  const auto d = diagonal_factor(ours, published, false);
  ASSERT_TRUE(d.has_value());
  for (const ZPoly& x : *d) EXPECT_EQ(x.width(), 0);
  for (const ZPoly& x : *d) EXPECT_EQ(abs(x.leading()), 1);
}

TEST(Symplectic, HoldsOnFixtures) {
  for (const Fixture& f : {fig8(), k8_2()}) EXPECT_TRUE(check_symplectic(twisted_matrices(f.ctx), f.alpha).holds());
}

TEST(Symplectic, CorruptedMatrixFails) {
  const auto [ctx, a] = fig8();
  const TwistedMatrices tm = twisted_matrices(ctx);
  ZMatrix aa = specialize(tm.a, a);
  const ZMatrix bb = specialize(tm.b, a);
  aa(0, 1) += ZPoly(1);
  auto ca = augment(tm.a);
  ca(0, 1) += 1;
  const SymplecticReport r = check_symplectic(ca, augment(tm.b), aa, bb);
  EXPECT_FALSE(r.holds());
}

TEST(Alexander, Fig8) {
  const auto [ctx, a] = fig8();
  const AlexanderResult r = alexander_polynomial(ctx, a);
  EXPECT_EQ(normalize(r.det_b), from_coeffs(convolve({-1, 1}, {1, -3, 1})));
  ASSERT_TRUE(r.alexander.has_value());
  EXPECT_EQ(*r.alexander, zpoly(0, {1, -3, 1}));
  auto z = r.z_alphas;
  std::sort(z.begin(), z.end());
  EXPECT_EQ(z, (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(r.alexander->evaluate(mpz_class(1)), -1);
  EXPECT_TRUE(r.palindromic);
  EXPECT_TRUE(r.alpha_abs_constant);
  EXPECT_TRUE(r.shape_holds);
  EXPECT_EQ(r.n, 1);
  EXPECT_EQ(r.m, 2u);
}

TEST(Alexander, K8_2) {
  const auto [ctx, a] = k8_2();
  const AlexanderResult r = alexander_polynomial(ctx, a);
  const std::vector<long> delta{1, -3, 3, -3, 3, -3, 1};
  EXPECT_EQ(normalize(r.det_b), from_coeffs(convolve({-1, 1}, delta)));
  ASSERT_TRUE(r.alexander.has_value());
  EXPECT_EQ(*r.alexander, from_coeffs(delta));
  EXPECT_TRUE(r.palindromic && r.alpha_abs_constant && r.shape_holds);
  const Mod2Report m = mod2_report(ctx, a);
  EXPECT_EQ(normalize(m.det_a), from_coeffs(convolve({-1, 1}, {1, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 1})));
  EXPECT_TRUE(m.holds());
}

TEST(Alexander, DetBDivisibleAndConsistentWithPresentation) {
  for (const Fixture& f : {fig8(), k8_2()}) {
    const AlexanderResult r = alexander_polynomial(f.ctx, f.alpha);
    ASSERT_FALSE(r.degenerate);
    EXPECT_TRUE(exact_divide(r.det_b * t1(), r.z_product).has_value());
    EXPECT_EQ(presentation_alexander(f.ctx.presentation, f.alpha), *r.alexander);
    // Independent rational-point evaluation of the presentation.
    std::vector<mpq_class> ours, oracle;
    for (const mpq_class& t : sample_points()) {
      ours.push_back(eval_q(*r.alexander, t));
      oracle.push_back(wada_at(f.ctx.presentation, f.alpha, t));
    }
    EXPECT_TRUE(unit_multiple_at(ours, oracle, sample_points()));
  }
}

TEST(Mod2, Fig8Vanishes) {
  const auto [ctx, a] = fig8();
  const Mod2Report m = mod2_report(ctx, a);
  EXPECT_TRUE(mod2(m.det_a).is_zero());
  EXPECT_TRUE(mod2(m.det_a_minus_b).is_zero());
  EXPECT_EQ(m.zp_alphas, std::vector<std::int64_t>{0});
  EXPECT_EQ(m.zpp_alphas, std::vector<std::int64_t>{0});
  EXPECT_TRUE(m.holds());
}

TEST(Mod2, CorruptedMatrixFails) {
  const auto [ctx, a] = k8_2();
  const TwistedMatrices tm = twisted_matrices(ctx);
  ZMatrix aa = specialize(tm.a, a);
  const ZMatrix bb = specialize(tm.b, a);
  aa(0, 0) += ZPoly(1);
  const AlexanderResult r = alexander_polynomial(ctx, a);
  const Mod2Report m = mod2_report(aa, bb, *r.alexander, curve_alphas(ctx, a, ShapeKind::Zp),
                                   curve_alphas(ctx, a, ShapeKind::Zpp));
  EXPECT_FALSE(m.holds());
}

TEST(FoxBoundary, IdentityHoldsOnFixtures) {
  for (const Fixture& f : {fig8(), k8_2()}) {
    const FoxBoundaryReport r = fox_boundary_crosscheck(f.ctx, f.alpha);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.alternate_pairs_hold);
    EXPECT_TRUE(r.cyclic_block_matches);
    EXPECT_EQ(r.boundary2.rows(), 2 * static_cast<std::size_t>(f.ctx.size()));
    for (const ZPoly& d : r.diagonal) EXPECT_EQ(d.width(), 0);
  }
}

TEST(FoxBoundary, Fig8CyclicBlock) {
  const auto [ctx, a] = fig8();
  const FoxBoundaryReport r = fox_boundary_crosscheck(ctx, a);
  EXPECT_EQ(normalize(r.cyclic_block_det), zpoly(0, {1, -2, 1}));
}

TEST(FoxBoundary, RejectsWrongTarget) {
  const ZMatrix p{{zpoly(0, {1}), ZPoly{}}, {ZPoly{}, zpoly(0, {1})}};
  const ZMatrix q{{zpoly(0, {1, 1}), ZPoly{}}, {ZPoly{}, zpoly(0, {1})}};
  EXPECT_FALSE(diagonal_factor(p, q, true).has_value());
}

TEST(Curves, ZAlphaAbsoluteValuesAgree) {
  for (const Fixture& f : {fig8(), k8_2()}) {
    const auto z = curve_alphas(f.ctx, f.alpha, ShapeKind::Z);
    ASSERT_FALSE(z.empty());
    for (auto x : z) EXPECT_EQ(std::abs(x), std::abs(z.front()));
  }
}

}  // namespace
}  // namespace nzalex
