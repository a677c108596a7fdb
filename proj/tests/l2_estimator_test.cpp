#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"

namespace nzalex {
namespace {

using namespace nzalex::testing;

RealGroupRingElem scalar(double c) { return RealGroupRingElem::scalar(c); }
RealGroupRingElem word(const FreeWord& w, double c = 1.0) { return RealGroupRingElem::word(w, c); }

struct Fig8Data {
  Context ctx = fixture_ctx("fig8.tri");
  AlphaMap alpha = compute_alpha(ctx, kFig8Meridian);
};

RealGroupRingMatrix random_matrix(std::mt19937_64& rng, const Presentation& pres, std::size_t n) {
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  RealGroupRingMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RealGroupRingElem x = scalar(i == j ? 3.0 : 0.0);
      for (int k = 0; k < 3; ++k) {
        FreeWord w;
        for (int s = 0; s < 3; ++s)
          w *= FreeWord::letter(pres.generators[rng() % pres.generators.size()], rng() % 2 ? 1 : -1);
        x.add_term(w, c(rng));
      }
      m(i, j) = x;
    }
  return m;
}

TEST(Quotient, CyclicFig8) {
  const Fig8Data s;
  const FiniteQuotient q = cyclic_quotient(s.alpha, s.ctx.presentation, 5);
  EXPECT_EQ(q.apply(FreeWord::letter(kFig8Meridian)), (std::vector<int>{1, 2, 3, 4, 0}));
  for (int g : s.ctx.presentation.generators)
    if (s.alpha(g) == 0) {
      EXPECT_EQ(q.apply(FreeWord::letter(g)), (std::vector<int>{0, 1, 2, 3, 4}));
    }
  for (const auto& r : s.ctx.presentation.relators) EXPECT_EQ(q.apply(r), (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(Quotient, RejectsNonHomomorphism) {
  const Fig8Data s;
  std::map<int, std::vector<int>> perms;
  perms[kFig8Meridian] = {1, 2, 0};
  EXPECT_THROW(make_quotient("bad", 3, perms, s.ctx.presentation), Error);
}

TEST(Quotient, CompositionOrder) {
  FiniteQuotient q{"s3", 3, {{0, {1, 0, 2}}, {1, {0, 2, 1}}}};
  const auto uv = q.apply(FreeWord::letter(0) * FreeWord::letter(1));
  const auto u = q.apply(FreeWord::letter(0)), v = q.apply(FreeWord::letter(1));
  for (int x = 0; x < 3; ++x) EXPECT_EQ(uv[static_cast<std::size_t>(x)], u[static_cast<std::size_t>(v[static_cast<std::size_t>(x)])]);
}

TEST(FkEstimate, IdentityAndZero) {
  const Fig8Data s;
  const FiniteQuotient q = cyclic_quotient(s.alpha, s.ctx.presentation, 16);
  RealGroupRingMatrix id(2, 2), zero(2, 2);
  id(0, 0) = scalar(1);
  id(1, 1) = scalar(1);
  const FkEstimate e = fk_estimate(id, q);
  ASSERT_TRUE(e.value.has_value());
  EXPECT_NEAR(*e.value, 0.0, 1e-14);
  EXPECT_TRUE(fk_estimate(zero, q).singular);
}

TEST(FkEstimate, RankOneMatchesFiniteJensen) {
  const Presentation free_one{{0}, {}};
  const AlphaMap unit(std::map<int, std::int64_t>{{0, 1}});
  for (int m : {8, 64, 257}) {
    const FiniteQuotient q = cyclic_quotient(unit, free_one, m);
    for (double t : {0.5, 2.0, 3.0}) {
      RealGroupRingMatrix x(1, 1);
      x(0, 0) = scalar(1.0) - word(FreeWord::letter(0, -1), 1.0 / t);
      const FkEstimate e = fk_estimate(x, q);
      ASSERT_TRUE(e.value.has_value());
      // prod_j (1 - s w^j) = 1 - s^m over the m-th roots of unity w.
      const double exact = std::log(std::abs(1.0 - std::pow(1.0 / t, m))) / m;
      EXPECT_NEAR(*e.value, exact, 1e-10) << "m=" << m << " t=" << t;
    }
  }
}

TEST(FkEstimate, DiagonalGroupUnitsDoNotChangeValue) {
  const Fig8Data s;
  const FiniteQuotient q = cyclic_quotient(s.alpha, s.ctx.presentation, 9);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const RealGroupRingMatrix x = random_matrix(rng, s.ctx.presentation, 2);
    RealGroupRingMatrix d(2, 2), e(2, 2);
    d(0, 0) = word(FreeWord::letter(kFig8Meridian), -1.0);
    d(1, 1) = word(FreeWord::letter(kFig8Meridian, -1) * FreeWord::letter(2));
    e(0, 0) = word(FreeWord::letter(3));
    e(1, 1) = scalar(-1.0);
    const auto base = fk_estimate(x, q), moved = fk_estimate(d * x * e, q);
    ASSERT_TRUE(base.value && moved.value);
    EXPECT_NEAR(*base.value, *moved.value, 1e-9);
  }
}

TEST(FkEstimate, MultiplicativeAndBlockAdditive) {
  const Fig8Data s;
  const FiniteQuotient q = cyclic_quotient(s.alpha, s.ctx.presentation, 12);
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const RealGroupRingMatrix x = random_matrix(rng, s.ctx.presentation, 2);
    const RealGroupRingMatrix y = random_matrix(rng, s.ctx.presentation, 2);
    const RealGroupRingMatrix z = random_matrix(rng, s.ctx.presentation, 2);
    RealGroupRingMatrix block(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        block(i, j) = x(i, j);
        block(i, j + 2) = z(i, j);
        block(i + 2, j + 2) = y(i, j);
      }
    const auto ex = fk_estimate(x, q), ey = fk_estimate(y, q);
    const auto exy = fk_estimate(x * y, q), eb = fk_estimate(block, q);
    ASSERT_TRUE(ex.value && ey.value && exy.value && eb.value);
    EXPECT_NEAR(*exy.value, *ex.value + *ey.value, 1e-9);
    EXPECT_NEAR(*eb.value, *ex.value + *ey.value, 1e-9);
  }
}

// Mahler measure of p(t z) over |z| = 1 by Jensen's formula from the roots of p.
double jensen(const ZPoly& p, double t) {
  const auto& c = p.coeffs();
  const int d = static_cast<int>(c.size()) - 1;
  double m = std::log(std::abs(c.back().get_d())) + (p.lo() + d) * std::log(t);
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[static_cast<std::size_t>(i)].get_d() / c.back().get_d();
  const Eigen::VectorXcd roots = Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(comp).eigenvalues();
  for (Eigen::Index i = 0; i < roots.size(); ++i) m += std::log(std::max(1.0, std::abs(roots(i)) / t));
  return m;
}

TEST(Profile, Fig8AbelianQuotientsApproachJensen) {
  const Fig8Data s;
  const ZPoly d = alexander_polynomial(s.ctx, s.alpha).det_b;
  const TorsionProfile p = detb_profile(s.ctx, s.alpha, {0.5, 2.0}, {cyclic_quotient(s.alpha, s.ctx.presentation, 256)});
  ASSERT_EQ(p.entries.size(), 2u);
  for (const auto& e : p.entries) {
    ASSERT_TRUE(e.estimate.value.has_value());
    EXPECT_NEAR(*e.estimate.value, jensen(d, e.t), 0.05) << "t=" << e.t;
  }
  EXPECT_EQ(p.n_abs, 1);
}

TEST(Profile, Fig8SingularAtOne) {
  const Fig8Data s;
  const TorsionProfile p = detb_profile(s.ctx, s.alpha, {1.0}, {cyclic_quotient(s.alpha, s.ctx.presentation, 64)});
  EXPECT_TRUE(p.entries.front().estimate.singular);
  EXPECT_EQ(p.entries.front().estimate.kernel_dim, 1);
}

}  // namespace
}  // namespace nzalex
