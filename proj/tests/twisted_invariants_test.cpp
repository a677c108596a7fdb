#include <gtest/gtest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "test_support.hpp"

namespace nzalex {
namespace {

using namespace nzalex::testing;

ErrorKind error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

bool close(const CPoly& a, const CPoly& b, double tol) {
  if (a.coeffs().size() != b.coeffs().size() || a.lo() != b.lo()) return false;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (std::abs(a.coeffs()[i] - b.coeffs()[i]) > tol) return false;
  return true;
}

TEST(Representation, Fig8GeometricIsValid) {
  const Context ctx = fixture_ctx("fig8.tri");
  const Representation rho = fig8_geometric_rep(ctx);
  const RepresentationDefects d = measure(ctx, rho);
  EXPECT_LT(d.max_det_error, 1e-9);
  EXPECT_LT(d.max_relator_error, 1e-9);
  EXPECT_NEAR(std::abs(rho(FreeWord::letter(kFig8Meridian)).trace() - 2.0), 0.0, 1e-12);
  const std::complex<double> n = fig8_shape_root();
  const std::complex<double> q = 1.0 - 3.0 * n + 5.0 * n * n - 3.0 * n * n * n + n * n * n * n;
  EXPECT_LT(std::abs(q), 1e-12);
  EXPECT_GT(n.imag(), 0);
}

TEST(Representation, RejectsNonSLAndNonRepresentations) {
  const Context ctx = fixture_ctx("fig8.tri");
  std::map<int, Eigen::MatrixXcd> twice;
  for (int g : ctx.presentation.generators) twice[g] = 2.0 * Eigen::MatrixXcd::Identity(2, 2);
  EXPECT_EQ(error_of([&] { make_representation(ctx, 2, twice); }), ErrorKind::NotSL);
  std::map<int, Eigen::MatrixXcd> shear;
  for (int g : ctx.presentation.generators) {
    Eigen::MatrixXcd m(2, 2);
    m << 1, 1 + g, 0, 1;
    shear[g] = m;
  }
  EXPECT_EQ(error_of([&] { make_representation(ctx, 2, shear); }), ErrorKind::NotARepresentation);
}

TEST(Representation, JsonRoundTrip) {
  const Context ctx = fixture_ctx("fig8.tri");
  const Representation rho = fig8_geometric_rep(ctx);
  nlohmann::json j{{"dim", 2}, {"generators", nlohmann::json::object()}};
  for (const auto& [g, m] : rho.matrices) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 2; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < 2; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
      rows.push_back(row);
    }
    j["generators"][generator_name(g)] = rows;
  }
  const Representation back = load_representation(j.dump(), ctx);
  for (const auto& [g, m] : rho.matrices) EXPECT_LT((back.matrices.at(g) - m).norm(), 1e-12);
}

TEST(TwistedAlexander, Fig8Geometric) {
  const Context ctx = fixture_ctx("fig8.tri");
  const AlphaMap a = compute_alpha(ctx, kFig8Meridian);
  const TwistedResult r = twisted_alexander(ctx, a, fig8_geometric_rep(ctx));
  const ZPoly t1 = zpoly(0, {-1, 1});
  const CPoly want_det = to_complex(t1 * t1 * t1 * t1 * zpoly(0, {1, -4, 1}));
  EXPECT_TRUE(close(normalize(cleaned(r.det_b, 1e-9)), want_det, 1e-6));
  ASSERT_TRUE(r.twisted_alexander.has_value());
  EXPECT_TRUE(close(*r.twisted_alexander, to_complex(zpoly(0, {1, -4, 1})), 1e-6));
}

TEST(TwistedAlexander, TrivialRepresentationMatchesUntwisted) {
  for (const char* name : {"fig8.tri", "k8_2.tri"}) {
    const Context ctx = fixture_ctx(name);
    const AlphaMap a = compute_alpha(ctx);
    const AlexanderResult un = alexander_polynomial(ctx, a);
    const TwistedResult tw = twisted_alexander(ctx, a, trivial_representation(ctx, 1));
    const auto rounded = round_to_integer(tw.det_b, 1e-7);
    ASSERT_TRUE(rounded.has_value());
    EXPECT_EQ(*rounded, un.det_b);
    // det B / prod (t^a - 1) = Delta / (t - 1)
    EXPECT_TRUE(associated_ratio(tw.det_b, tw.divisor, to_complex(*un.alexander), to_complex(zpoly(0, {-1, 1})), 1e-7));
  }
}

TEST(TwistedAlexander, TrivialHigherDimensionIsPower) {
  const Context ctx = fixture_ctx("fig8.tri");
  const AlphaMap a = compute_alpha(ctx, kFig8Meridian);
  const ZPoly d = alexander_polynomial(ctx, a).det_b;
  const TwistedResult tw = twisted_alexander(ctx, a, trivial_representation(ctx, 3));
  EXPECT_TRUE(associated(tw.det_b, to_complex(d * d * d), 1e-7));
}

TEST(TwistedAlexander, InterpolationMatchesPointEvaluation) {
  const Context ctx = fixture_ctx("fig8.tri");
  const AlphaMap a = compute_alpha(ctx, kFig8Meridian);
  const Representation rho = fig8_geometric_rep(ctx);
  const CMatrix b = specialize(twisted_matrices(ctx).b, a, rho);
  const CPoly d = det(b);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> r(0.5, 2.0), th(0, 6.283185307179586);
  for (int k = 0; k < 5; ++k) {
    const std::complex<double> t = std::polar(r(rng), th(rng));
    const std::complex<double> direct = det_at(b, t);
    EXPECT_LT(std::abs(d.evaluate(t) - direct), 1e-8 * std::max(1.0, std::abs(direct)));
  }
}

}  // namespace
}  // namespace nzalex
