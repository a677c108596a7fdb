#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace nzalex {
namespace {

using testing::convolve;
using testing::from_coeffs;

ZPoly fig8_b_det() {
  // B_alpha(t) = [[-t, t^-1 - 2], [2t - 1, t]]
  const ZMatrix b{{zpoly(1, {-1}), zpoly(-1, {1, -2})}, {zpoly(0, {-1, 2}), zpoly(1, {1})}};
  return det(b);
}

TEST(LaurentPoly, ArithmeticAndTrim) {
  const ZPoly p = zpoly(-1, {0, 1, 0});
  EXPECT_EQ(p, ZPoly::t_power(0));
  EXPECT_EQ(p.lo(), 0);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(zpoly(0, {1, 1}) * zpoly(0, {1, -1}), zpoly(0, {1, 0, -1}));
  EXPECT_EQ(zpoly(-2, {1, 2}).reflected(), zpoly(1, {2, 1}));
  EXPECT_EQ(zpoly(-1, {-1, 3, -1}).evaluate(mpz_class(1)), mpz_class(1));
}

TEST(LaurentPoly, NormalizeExamples) {
  EXPECT_EQ(normalize(zpoly(-1, {-1, 3, -1})), zpoly(0, {1, -3, 1}));
  EXPECT_TRUE(normalize(ZPoly{}).is_zero());
  const ZPoly a = zpoly(0, {-1, 1}) * zpoly(0, {1, -3, 1});
  const ZPoly b = zpoly(-2, {1}) * zpoly(0, {1, -1}) * zpoly(0, {1, -3, 1});
  EXPECT_EQ(normalize(a), normalize(b));
  EXPECT_EQ(normalize(a), from_coeffs(convolve({-1, 1}, {1, -3, 1})));
}

TEST(LaurentPoly, ExactDivideExamples) {
  const ZPoly delta = zpoly(0, {1, -3, 1});
  const ZPoly t1 = zpoly(0, {-1, 1});
  EXPECT_EQ(exact_divide(t1 * delta, t1), delta);
  EXPECT_FALSE(exact_divide(delta, t1).has_value());
  EXPECT_EQ(exact_divide(delta, ZPoly(1)), delta);
  EXPECT_THROW(exact_divide(delta, ZPoly{}), Error);
}

TEST(LaurentPoly, PalindromeAndModTwo) {
  EXPECT_TRUE(is_palindromic(zpoly(0, {1, -3, 1})));
  EXPECT_FALSE(is_palindromic(zpoly(0, {-2, 1})));
  EXPECT_TRUE(is_palindromic(ZPoly{}));
  EXPECT_TRUE(mod2(zpoly(0, {2, -2})).is_zero());
  EXPECT_EQ(mod2(zpoly(0, {1, -3, 1})), zpoly(0, {1, 1, 1}));
  EXPECT_TRUE(mod2(ZPoly{}).is_zero());
  EXPECT_TRUE(f2_associated(zpoly(3, {1, 1}), zpoly(-1, {1, -1})));
}

TEST(LaurentDet, Fig8MatrixMatchesExpansion) {
  EXPECT_EQ(normalize(fig8_b_det()), from_coeffs(convolve({-1, 1}, {1, -3, 1})));
}

TEST(LaurentDet, NonSquareThrows) {
  EXPECT_THROW(det(ZMatrix(2, 3)), Error);
}

TEST(LaurentDet, ComplexInterpolationAgreesWithExact) {
  const ZMatrix b{{zpoly(1, {-1}), zpoly(-1, {1, -2})}, {zpoly(0, {-1, 2}), zpoly(1, {1})}};
  const CPoly d = det(b.map([](const ZPoly& p) { return to_complex(p); }));
  const auto rounded = round_to_integer(d, 1e-9);
  ASSERT_TRUE(rounded.has_value());
  EXPECT_EQ(*rounded, det(b));
}

TEST(LaurentDet, MultiplicativeOnRandomMatrices) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3), lo(-2, 2);
  auto random_poly = [&] { return zpoly(lo(rng), {coef(rng), coef(rng), coef(rng)}); };
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    ZMatrix a(n, n), b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = random_poly();
        b(i, j) = random_poly();
      }
    ASSERT_EQ(det(a * b), det(a) * det(b)) << "trial " << trial;
  }
}

TEST(LaurentDet, PointEvaluationMatchesExpansion) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    ZMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = zpoly(-1, {coef(rng), coef(rng), coef(rng)});
    const std::complex<double> t(0.7, 0.4);
    const CMatrix c = m.map([](const ZPoly& p) { return to_complex(p); });
    const std::complex<double> direct = det_at(c, t);
    const std::complex<double> expanded = to_complex(det(m)).evaluate(t);
    EXPECT_NEAR(std::abs(direct - expanded), 0.0, 1e-8 * (1 + std::abs(direct)));
  }
}

TEST(LaurentPoly, ExactDivideRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-9, 9), lo(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const ZPoly p = zpoly(lo(rng), {coef(rng), coef(rng), coef(rng), coef(rng)});
    ZPoly q = zpoly(lo(rng), {coef(rng), coef(rng), coef(rng)});
    if (q.is_zero()) q = ZPoly(1);
    const auto back = exact_divide(p * q, q);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, p);
  }
}

TEST(LaurentPoly, CyclotomicProduct) {
  EXPECT_EQ(normalize(cyclotomic_product({-1, 1})), zpoly(0, {1, -2, 1}));
  EXPECT_TRUE(cyclotomic_product({0, 2}).is_zero());
  EXPECT_EQ(cyclotomic_product({}), ZPoly(1));
}

}  // namespace
}  // namespace nzalex
