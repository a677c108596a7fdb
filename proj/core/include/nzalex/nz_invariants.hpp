#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nzalex/context.hpp"
#include "nzalex/dual_complex.hpp"
#include "nzalex/group_algebra.hpp"
#include "nzalex/laurent.hpp"

namespace nzalex {

// Entry (i, j) of G^k is p(dR_i / dz_j^k). Rows are defined up to left multiplication by
// a diagonal matrix over the group, so the matrices are representatives only.
struct TwistedMatrices {
  GroupRingMatrix g, gp, gpp, a, b;
};

TwistedMatrices twisted_matrices(const Context& ctx);

struct SymplecticReport {
  bool classical_symmetric = false;    // A B^T = B A^T over Z
  bool specialized_identity = false;   // A(t) B(1/t)^T = B(t) A(1/t)^T
  bool holds() const { return classical_symmetric && specialized_identity; }
};

SymplecticReport check_symplectic(const Matrix<mpz_class>& a, const Matrix<mpz_class>& b, const ZMatrix& a_alpha,
                                  const ZMatrix& b_alpha);
SymplecticReport check_symplectic(const TwistedMatrices& tm, const AlphaMap& alpha);

struct AlexanderResult {
  ZPoly det_b;                        // det of the specialized B, unnormalized
  std::vector<std::int64_t> z_alphas;  // alpha of every Z-curve component
  ZPoly z_product;                    // prod (t^a - 1)
  bool degenerate = false;            // det B vanishes
  std::optional<ZPoly> alexander;     // normalized
  bool palindromic = false;
  bool alpha_abs_constant = false;    // all |alpha(Z_i)| agree
  std::int64_t n = 0;                 // common |alpha(Z_i)|
  std::size_t m = 0;                  // number of Z components
  bool shape_holds = false;           // det B (t-1) = Delta (t^n - 1)^m up to units
};

// Throws InternalDivisionFailure when det B (t-1) is not divisible by the Z product.
AlexanderResult alexander_polynomial(const Context& ctx, const AlphaMap& alpha);

std::vector<std::int64_t> curve_alphas(const Context& ctx, const AlphaMap& alpha, ShapeKind kind);

struct Mod2Report {
  bool applicable = false;  // false when det B = 0
  ZPoly det_a;
  ZPoly det_a_minus_b;
  std::vector<std::int64_t> zp_alphas;
  std::vector<std::int64_t> zpp_alphas;
  ZPoly expected_a;          // Delta/(t-1) * prod over Z'' curves
  ZPoly expected_a_minus_b;  // Delta/(t-1) * prod over Z' curves
  bool a_holds = false;
  bool a_minus_b_holds = false;
  bool holds() const { return applicable && a_holds && a_minus_b_holds; }
};

Mod2Report mod2_report(const ZMatrix& a_alpha, const ZMatrix& b_alpha, const ZPoly& alexander,
                       const std::vector<std::int64_t>& zp_alphas, const std::vector<std::int64_t>& zpp_alphas);
Mod2Report mod2_report(const Context& ctx, const AlphaMap& alpha);

struct FoxBoundaryReport {
  ZMatrix boundary2;         // 2N x N, alpha-specialized Fox matrix of the r_i
  ZMatrix boundary1;         // N x 2N
  ZMatrix boundary1_b;       // rows v_f + v_f' over the (01)-adjacent pair of each tet
  ZMatrix product;           // boundary2^T boundary1_b^T
  std::string side;          // "right", "left" or "none"
  std::vector<ZPoly> diagonal;
  bool holds = false;
  ZPoly cyclic_block_det;    // det [boundary1_b ; boundary1 - boundary1_b]
  ZPoly z_product;
  bool cyclic_block_matches = false;
  bool alternate_pairs_hold = false;  // same identity using the (23)-adjacent pairs
};

FoxBoundaryReport fox_boundary_crosscheck(const Context& ctx, const AlphaMap& alpha);

// Alexander polynomial straight from the presentation: delete a generator column with
// alpha(g) != 0 from the specialized Fox Jacobian, then det * (t-1) / (t^alpha(g) - 1).
ZPoly presentation_alexander(const Presentation& presentation, const AlphaMap& alpha);

// Finds D with product = target * D (side "right") or D * target (side "left").
std::optional<std::vector<ZPoly>> diagonal_factor(const ZMatrix& product, const ZMatrix& target, bool right);

}  // namespace nzalex
