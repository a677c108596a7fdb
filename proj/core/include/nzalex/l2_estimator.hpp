#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "nzalex/context.hpp"
#include "nzalex/group_algebra.hpp"

namespace nzalex {

// Homomorphism to Sym(k): generator -> permutation of {0..k-1}; missing generators act trivially.
struct FiniteQuotient {
  std::string name;
  int degree = 1;
  std::map<int, std::vector<int>> perms;

  // sigma_{uv} = sigma_u o sigma_v
  std::vector<int> apply(const FreeWord& w) const;
};

// Checks that every relator acts trivially; throws NotARepresentation otherwise.
FiniteQuotient make_quotient(std::string name, int degree, std::map<int, std::vector<int>> perms,
                             const Presentation& presentation);
// g -> shift by alpha(g) mod m.
FiniteQuotient cyclic_quotient(const AlphaMap& alpha, const Presentation& presentation, int m);
// JSON: {"degree": k, "generators": {"g2": [1-based images], ...}}.
FiniteQuotient load_quotient(std::string_view json_text, const Presentation& presentation, std::string name = "file");

// gamma -> t^alpha(gamma) gamma with real coefficients.
RealGroupRingMatrix twist(const GroupRingMatrix& m, const AlphaMap& alpha, double t);

// The real (N k) x (N k) matrix obtained by replacing every group element by its permutation matrix.
Eigen::MatrixXd push_forward(const RealGroupRingMatrix& m, const FiniteQuotient& q);

struct FkEstimate {
  bool singular = false;
  std::optional<double> value;  // (1/k) log |det M_q| when nonsingular
  double regularized = 0;       // (1/k) sum of log of the nonzero singular values
  int kernel_dim = 0;
};

FkEstimate fk_estimate(const RealGroupRingMatrix& m, const FiniteQuotient& q);
FkEstimate fk_estimate(const Eigen::MatrixXd& pushed, int degree);

struct ProfileEntry {
  double t = 1;
  std::string quotient;
  int degree = 1;
  FkEstimate estimate;
};

struct TorsionProfile {
  std::vector<double> t_grid;
  std::vector<ProfileEntry> entries;  // ordered by (t, degree) in input order
  std::vector<std::int64_t> z_alphas;
  std::int64_t n_abs = 0;
  std::vector<std::int64_t> exponent_candidates;  // +-|alpha(Z_i)| * #components
  std::vector<double> z_factor_log;              // per t: sum_i log max{1, t^-alpha(Z_i)}
  std::vector<std::string> warnings;
};

TorsionProfile detb_profile(const Context& ctx, const AlphaMap& alpha, const std::vector<double>& t_grid,
                            const std::vector<FiniteQuotient>& quotients);

}  // namespace nzalex
