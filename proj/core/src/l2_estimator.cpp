#include "nzalex/l2_estimator.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nzalex/dual_complex.hpp"
#include "nzalex/error.hpp"
#include "nzalex/nz_invariants.hpp"

namespace nzalex {

std::vector<int> FiniteQuotient::apply(const FreeWord& w) const {
  std::vector<int> acc(static_cast<std::size_t>(degree));
  std::iota(acc.begin(), acc.end(), 0);
  // Apply letters right to left so that the result is sigma_{l1} o ... o sigma_{lk}.
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    auto p = perms.find(it->gen);
    if (p == perms.end()) continue;
    std::vector<int> next(acc.size());
    if (it->exp > 0) {
      for (std::size_t i = 0; i < acc.size(); ++i) next[i] = p->second[static_cast<std::size_t>(acc[i])];
    } else {
      std::vector<int> inv(acc.size());
      for (std::size_t i = 0; i < acc.size(); ++i) inv[static_cast<std::size_t>(p->second[i])] = static_cast<int>(i);
      for (std::size_t i = 0; i < acc.size(); ++i) next[i] = inv[static_cast<std::size_t>(acc[i])];
    }
    acc = std::move(next);
  }
  return acc;
}

FiniteQuotient make_quotient(std::string name, int degree, std::map<int, std::vector<int>> perms,
                             const Presentation& presentation) {
  if (degree <= 0) throw Error(ErrorKind::MalformedInput, "quotient degree must be positive");
  for (const auto& [g, p] : perms) {
    if (static_cast<int>(p.size()) != degree)
      throw Error(ErrorKind::MalformedInput, "permutation for " + generator_name(g) + " has the wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    for (int x : p) {
      if (x < 0 || x >= degree || seen[static_cast<std::size_t>(x)])
        throw Error(ErrorKind::MalformedInput, "image list for " + generator_name(g) + " is not a permutation");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  FiniteQuotient q{std::move(name), degree, std::move(perms)};
  std::vector<int> id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  for (std::size_t i = 0; i < presentation.relators.size(); ++i)
    if (q.apply(presentation.relators[i]) != id)
      throw Error(ErrorKind::NotARepresentation, "relator " + std::to_string(i + 1) + " acts nontrivially");
  return q;
}

FiniteQuotient cyclic_quotient(const AlphaMap& alpha, const Presentation& presentation, int m) {
  if (m < 1) throw Error(ErrorKind::MalformedInput, "cyclic quotient order must be positive");
  std::map<int, std::vector<int>> perms;
  for (int g : presentation.generators) {
    const std::int64_t shift = ((alpha(g) % m) + m) % m;
    std::vector<int> p(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = static_cast<int>((i + shift) % m);
    perms[g] = std::move(p);
  }
  return make_quotient("Z/" + std::to_string(m), m, std::move(perms), presentation);
}

FiniteQuotient load_quotient(std::string_view json_text, const Presentation& presentation, std::string name) {
  try {
    const auto doc = nlohmann::json::parse(json_text);
    const int degree = doc.at("degree").get<int>();
    std::map<int, std::vector<int>> perms;
    for (const auto& [gname, images] : doc.at("generators").items()) {
      if (gname.size() < 2 || gname[0] != 'g') throw Error(ErrorKind::MalformedInput, "generator names look like g<k>");
      const int g = std::stoi(gname.substr(1)) - 1;
      std::vector<int> p;
      for (const auto& x : images) p.push_back(x.get<int>() - 1);
      const bool known = std::find(presentation.generators.begin(), presentation.generators.end(), g) !=
                         presentation.generators.end();
      if (!known) {
        std::vector<int> id(p.size());
        std::iota(id.begin(), id.end(), 0);
        if (p != id) throw Error(ErrorKind::MalformedInput, gname + " is collapsed by the spanning tree");
        continue;
      }
      perms[g] = std::move(p);
    }
    return make_quotient(std::move(name), degree, std::move(perms), presentation);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("quotient JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::MalformedInput, "generator names look like g<k>");
  }
}

RealGroupRingMatrix twist(const GroupRingMatrix& m, const AlphaMap& alpha, double t) {
  return m.map([&](const GroupRingElem& x) {
    RealGroupRingElem out;
    for (const auto& [w, c] : x.terms()) out.add_term(w, c.get_d() * std::pow(t, static_cast<double>(alpha(w))));
    return out;
  });
}

Eigen::MatrixXd push_forward(const RealGroupRingMatrix& m, const FiniteQuotient& q) {
  const auto k = static_cast<Eigen::Index>(q.degree);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.rows()) * k,
                                              static_cast<Eigen::Index>(m.cols()) * k);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& [w, c] : m(i, j).terms()) {
        const std::vector<int> sigma = q.apply(w);
        for (Eigen::Index s = 0; s < k; ++s)
          out(static_cast<Eigen::Index>(i) * k + sigma[static_cast<std::size_t>(s)], static_cast<Eigen::Index>(j) * k + s) += c;
      }
  return out;
}

FkEstimate fk_estimate(const Eigen::MatrixXd& pushed, int degree) {
  FkEstimate est;
  const double scale = pushed.cwiseAbs().maxCoeff();
  if (pushed.size() == 0) {
    est.value = 0;
    return est;
  }
  if (scale == 0) {
    est.singular = true;
    est.kernel_dim = static_cast<int>(pushed.rows());
    return est;
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(pushed);
  const auto diag = lu.matrixLU().diagonal();
  double log_det = 0;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    if (std::abs(diag(i)) <= 1e-12 * scale) {
      est.singular = true;
      break;
    }
    log_det += std::log(std::abs(diag(i)));
  }
  if (!est.singular) {
    est.value = log_det / degree;
    est.regularized = *est.value;
    return est;
  }
  const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXd>(pushed).singularValues();
  double reg = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= 1e-10 * sv(0)) {
      ++est.kernel_dim;
      continue;
    }
    reg += std::log(sv(i));
  }
  est.regularized = reg / degree;
  return est;
}

FkEstimate fk_estimate(const RealGroupRingMatrix& m, const FiniteQuotient& q) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "Fuglede-Kadison estimate needs a square matrix");
  return fk_estimate(push_forward(m, q), q.degree);
}

TorsionProfile detb_profile(const Context& ctx, const AlphaMap& alpha, const std::vector<double>& t_grid,
                            const std::vector<FiniteQuotient>& quotients) {
  TorsionProfile p;
  p.t_grid = t_grid;
  p.z_alphas = curve_alphas(ctx, alpha, ShapeKind::Z);
  bool has_zero = false;
  for (auto a : p.z_alphas) {
    has_zero = has_zero || a == 0;
    p.n_abs = std::max<std::int64_t>(p.n_abs, std::llabs(a));
  }
  if (has_zero)
    p.warnings.push_back("a Z-curve has alpha = 0; the infinite-order hypothesis cannot hold for it");
  const auto components = static_cast<std::int64_t>(p.z_alphas.size());
  p.exponent_candidates = {p.n_abs * components, -p.n_abs * components};
  const GroupRingMatrix b = twisted_matrices(ctx).b;
  for (double t : t_grid) {
    if (!(t > 0)) throw Error(ErrorKind::MalformedInput, "t values must be positive");
    double factor = 0;
    for (auto a : p.z_alphas) factor += std::max(0.0, -static_cast<double>(a) * std::log(t));
    p.z_factor_log.push_back(factor);
    const RealGroupRingMatrix twisted = twist(b, alpha, t);
    for (const FiniteQuotient& q : quotients)
      p.entries.push_back(ProfileEntry{t, q.name, q.degree, fk_estimate(twisted, q)});
  }
  return p;
}

}  // namespace nzalex
