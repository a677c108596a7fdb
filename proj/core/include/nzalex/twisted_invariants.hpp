#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "nzalex/context.hpp"
#include "nzalex/laurent.hpp"

namespace nzalex {

// Representation of pi into SL_n(C), stored on the surviving generators.
// Generators without a matrix (the spanning tree) act as the identity.
struct Representation {
  int dim = 1;
  std::map<int, Eigen::MatrixXcd> matrices;

  Eigen::MatrixXcd operator()(const FreeWord& w) const;
};

struct RepresentationDefects {
  double max_det_error = 0;      // max |det - 1|
  double max_relator_error = 0;  // max operator-norm distance of p(r_i) from I
};

RepresentationDefects measure(const Context& ctx, const Representation& rho);

// Accepts matrices for any dual generators. When tree generators carry non-identity
// matrices, the assignment is conjugated per tetrahedron so that the tree acts trivially.
// Throws NotSL or NotARepresentation when a check exceeds `tol`.
Representation make_representation(const Context& ctx, int dim, std::map<int, Eigen::MatrixXcd> assignment,
                                   double tol = 1e-9);

// JSON: {"dim": n, "generators": {"g2": [[[re, im], ...], ...], ...}}; entries may be plain reals.
Representation load_representation(std::string_view json_text, const Context& ctx, double tol = 1e-9);

Representation trivial_representation(const Context& ctx, int dim = 1);

// Lift of the complete hyperbolic structure of the figure-eight fixture, from a root of
// 1 - 3n + 5n^2 - 3n^3 + n^4 with positive imaginary part and least real part.
Representation fig8_geometric_rep(const Context& ctx);
std::complex<double> fig8_shape_root();

struct TwistedResult {
  int dim = 1;
  CPoly det_b;
  std::vector<std::int64_t> z_alphas;
  std::vector<CPoly> z_factors;  // det(rho(Z_i) t^alpha(Z_i) - I)
  CPoly divisor;                 // product of z_factors
  bool degenerate = false;
  bool divisible = false;
  std::optional<CPoly> twisted_alexander;  // monic, when divisible
};

// Block matrix obtained by gamma -> t^alpha(gamma) rho(gamma).
CMatrix specialize(const GroupRingMatrix& m, const AlphaMap& alpha, const Representation& rho);

TwistedResult twisted_alexander(const Context& ctx, const AlphaMap& alpha, const Representation& rho,
                                double division_tol = 1e-6);

// a * d = b * c up to a unit c t^k, compared after monic normalization.
bool associated_ratio(const CPoly& a, const CPoly& b, const CPoly& c, const CPoly& d, double tol);
bool associated(const CPoly& a, const CPoly& b, double tol);

}  // namespace nzalex
