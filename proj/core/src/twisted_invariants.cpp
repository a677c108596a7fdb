#include "nzalex/twisted_invariants.hpp"

#include <nlohmann/json.hpp>

#include <deque>

#include "nzalex/dual_complex.hpp"
#include "nzalex/error.hpp"
#include "nzalex/nz_invariants.hpp"

namespace nzalex {

Eigen::MatrixXcd Representation::operator()(const FreeWord& w) const {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Letter& l : w.letters()) {
    auto it = matrices.find(l.gen);
    if (it == matrices.end()) continue;
    acc = l.exp > 0 ? Eigen::MatrixXcd(acc * it->second) : Eigen::MatrixXcd(acc * it->second.inverse());
  }
  return acc;
}

namespace {
double operator_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0;
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}
}  // namespace

RepresentationDefects measure(const Context& ctx, const Representation& rho) {
  RepresentationDefects d;
  for (const auto& [g, m] : rho.matrices) d.max_det_error = std::max(d.max_det_error, std::abs(m.determinant() - 1.0));
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(rho.dim, rho.dim);
  for (const FreeWord& r : ctx.presentation.relators)
    d.max_relator_error = std::max(d.max_relator_error, operator_norm(rho(r) - id));
  return d;
}

Representation make_representation(const Context& ctx, int dim, std::map<int, Eigen::MatrixXcd> assignment,
                                   double tol) {
  if (dim <= 0) throw Error(ErrorKind::NotARepresentation, "dimension must be positive");
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  const int gens = static_cast<int>(ctx.dual.generators.size());
  for (auto& [g, m] : assignment) {
    if (g < 0 || g >= gens) throw Error(ErrorKind::NotARepresentation, "unknown generator " + generator_name(g));
    if (m.rows() != dim || m.cols() != dim)
      throw Error(ErrorKind::NotARepresentation, generator_name(g) + " has the wrong size");
    if (std::abs(m.determinant() - 1.0) > tol)
      throw Error(ErrorKind::NotSL, generator_name(g) + " does not have determinant 1");
  }
  for (int g : ctx.presentation.generators)
    if (!assignment.count(g)) throw Error(ErrorKind::NotARepresentation, "no matrix for " + generator_name(g));
  auto matrix = [&](int g) -> Eigen::MatrixXcd {
    auto it = assignment.find(g);
    return it == assignment.end() ? id : it->second;
  };

  // Per-tetrahedron conjugators c with c_src rho(g) c_dst^{-1} = I along the tree.
  const int n = ctx.size();
  std::vector<Eigen::MatrixXcd> c(static_cast<std::size_t>(n), id);
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  done[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int g : ctx.dual.tree) {
      const DualGenerator& e = ctx.dual.generators[g];
      if (e.source_tet == u && !done[e.target_tet]) {
        c[e.target_tet] = c[u] * matrix(g);
        done[e.target_tet] = true;
        queue.push_back(e.target_tet);
      } else if (e.target_tet == u && !done[e.source_tet]) {
        c[e.source_tet] = c[u] * matrix(g).inverse();
        done[e.source_tet] = true;
        queue.push_back(e.source_tet);
      }
    }
  }
  Representation rho;
  rho.dim = dim;
  for (int g : ctx.presentation.generators) {
    const DualGenerator& e = ctx.dual.generators[g];
    rho.matrices[g] = c[e.source_tet] * matrix(g) * c[e.target_tet].inverse();
  }
  const RepresentationDefects d = measure(ctx, rho);
  if (d.max_det_error > tol) throw Error(ErrorKind::NotSL, "conjugated matrices left SL_n");
  if (d.max_relator_error > tol)
    throw Error(ErrorKind::NotARepresentation,
                "relator defect " + std::to_string(d.max_relator_error) + " exceeds tolerance");
  return rho;
}

Representation load_representation(std::string_view json_text, const Context& ctx, double tol) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("representation JSON: ") + e.what());
  }
  try {
    const int dim = doc.at("dim").get<int>();
    std::map<int, Eigen::MatrixXcd> assignment;
    for (const auto& [name, rows] : doc.at("generators").items()) {
      if (name.size() < 2 || name[0] != 'g')
        throw Error(ErrorKind::MalformedInput, "generator names look like g<k>");
      const int g = std::stoi(name.substr(1)) - 1;
      if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
        throw Error(ErrorKind::NotARepresentation, name + " must have " + std::to_string(dim) + " rows");
      Eigen::MatrixXcd m(dim, dim);
      for (int r = 0; r < dim; ++r) {
        const auto& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
          throw Error(ErrorKind::NotARepresentation, name + " has a malformed row");
        for (int k = 0; k < dim; ++k) {
          const auto& x = row[static_cast<std::size_t>(k)];
          m(r, k) = x.is_array() ? std::complex<double>(x.at(0).get<double>(), x.at(1).get<double>())
                                 : std::complex<double>(x.get<double>(), 0.0);
        }
      }
      assignment[g] = m;
    }
    return make_representation(ctx, dim, std::move(assignment), tol);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("representation JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::MalformedInput, "generator names look like g<k>");
  }
}

Representation trivial_representation(const Context& ctx, int dim) {
  Representation rho;
  rho.dim = dim;
  for (int g : ctx.presentation.generators) rho.matrices[g] = Eigen::MatrixXcd::Identity(dim, dim);
  return rho;
}

std::complex<double> fig8_shape_root() {
  // Companion matrix of n^4 - 3n^3 + 5n^2 - 3n + 1.
  const std::array<double, 4> low{1, -3, 5, -3};
  Eigen::Matrix4cd companion = Eigen::Matrix4cd::Zero();
  for (int i = 1; i < 4; ++i) companion(i, i - 1) = 1;
  for (int i = 0; i < 4; ++i) companion(i, 3) = -low[static_cast<std::size_t>(i)];
  const Eigen::Vector4cd roots = Eigen::ComplexEigenSolver<Eigen::Matrix4cd>(companion).eigenvalues();
  std::optional<std::complex<double>> best;
  for (int i = 0; i < 4; ++i) {
    const auto z = roots(i);
    if (z.imag() <= 0) continue;
    if (!best || z.real() < best->real()) best = z;
  }
  if (!best) throw Error(ErrorKind::InvariantViolation, "shape quartic has no root in the upper half plane");
  std::complex<double> z = *best;
  for (int it = 0; it < 3; ++it) {
    const auto f = (((z - 3.0) * z + 5.0) * z - 3.0) * z + 1.0;
    const auto df = ((4.0 * z - 9.0) * z + 10.0) * z - 3.0;
    z -= f / df;
  }
  return z;
}

Representation fig8_geometric_rep(const Context& ctx) {
  if (ctx.dual.generators.size() != 4)
    throw Error(ErrorKind::NotARepresentation, "the built-in geometric representation is for the figure-eight fixture");
  const std::complex<double> n = fig8_shape_root();
  const std::complex<double> u = -(1.0 - 4.0 * n * n + n * n * n * n) / (3.0 * n + 3.0 * n * n * n);
  Eigen::Matrix2cd parabolic;
  parabolic << 1.0, 1.0, 0.0, 1.0;
  Eigen::Matrix2cd loxodromic;
  loxodromic << n, 0.0, u, 1.0 / n;
  // The published matrices use the labelling whose tree is our g4; in our labels the
  // parabolic generator is g2, the diagonal one is g1, and g3 is fixed by a relator.
  std::map<int, Eigen::MatrixXcd> assignment;
  assignment[0] = loxodromic;
  assignment[1] = parabolic;
  assignment[2] = loxodromic * parabolic.inverse() * loxodromic.inverse();
  assignment[3] = Eigen::Matrix2cd::Identity();
  return make_representation(ctx, 2, std::move(assignment));
}

CMatrix specialize(const GroupRingMatrix& m, const AlphaMap& alpha, const Representation& rho) {
  const auto n = static_cast<std::size_t>(rho.dim);
  CMatrix out(m.rows() * n, m.cols() * n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& [w, c] : m(i, j).terms()) {
        const Eigen::MatrixXcd block = rho(w) * c.get_d();
        const int e = static_cast<int>(alpha(w));
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t s = 0; s < n; ++s)
            out(i * n + r, j * n + s) += CPoly::monomial(block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)), e);
      }
  return out;
}

namespace {
double magnitude(const CPoly& p) {
  double s = 0;
  for (const auto& x : p.coeffs()) s = std::max(s, std::abs(x));
  return s;
}

double hadamard_scale(const CMatrix& m, double radius) {
  double bound = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double row = 0;
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (int e = m(r, c).lo(); !m(r, c).is_zero() && e <= m(r, c).hi(); ++e)
        row += std::abs(m(r, c).coeff(e)) * std::pow(radius, e);
    bound *= std::max(row, 1e-300);
  }
  return bound;
}
}  // namespace

bool associated(const CPoly& a, const CPoly& b, double tol) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  const CPoly x = normalize(a);
  const CPoly y = normalize(b);
  if (x.coeffs().size() != y.coeffs().size()) return false;
  const double scale = std::max(magnitude(x), magnitude(y));
  for (std::size_t i = 0; i < x.coeffs().size(); ++i)
    if (std::abs(x.coeffs()[i] - y.coeffs()[i]) > tol * scale) return false;
  return true;
}

bool associated_ratio(const CPoly& a, const CPoly& b, const CPoly& c, const CPoly& d, double tol) {
  return associated(cleaned(a * d, tol), cleaned(b * c, tol), tol);
}

TwistedResult twisted_alexander(const Context& ctx, const AlphaMap& alpha, const Representation& rho,
                                double division_tol) {
  TwistedResult r;
  r.dim = rho.dim;
  const CMatrix b = specialize(twisted_matrices(ctx).b, alpha, rho);
  r.det_b = det(b);
  r.degenerate = r.det_b.is_zero() || magnitude(r.det_b) <= 1e-9 * hadamard_scale(b, 1.2345);
  CurveSystem curves = smoothing_curves(ctx.tri, ctx.dual, ShapeKind::Z);
  assign_alpha(curves, alpha);
  r.divisor = CPoly(1.0);
  const auto n = static_cast<std::size_t>(rho.dim);
  for (const auto& comp : curves.components) {
    r.z_alphas.push_back(comp.alpha);
    const Eigen::MatrixXcd hol = rho(ctx.project(comp.word));
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = CPoly::monomial(hol(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)),
                                  static_cast<int>(comp.alpha));
        if (i == j) m(i, j) -= CPoly(1.0);
      }
    r.z_factors.push_back(det(m));
    r.divisor *= r.z_factors.back();
  }
  r.divisor = cleaned(r.divisor, 1e-12);
  if (r.degenerate || r.divisor.is_zero()) return r;
  if (auto q = exact_divide(r.det_b, r.divisor, division_tol)) {
    r.divisible = true;
    r.twisted_alexander = normalize(cleaned(*q, division_tol));
  }
  return r;
}

}  // namespace nzalex
