#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "nzalex/nzalex.hpp"

namespace nzalex::testing {

inline std::string fixture_path(const std::string& name) { return std::string(NZALEX_FIXTURE_DIR) + "/" + name; }

inline std::string fixture_text(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Triangulation fixture_tri(const std::string& name) { return parse_triangulation(fixture_text(name)); }

inline Context fixture_ctx(const std::string& name) { return Context::build(fixture_tri(name)); }

// fig8 meridian in the deterministic labeling (dual generator g2).
inline constexpr int kFig8Meridian = 1;

// Schoolbook product of integer coefficient lists, lowest degree first.
inline std::vector<long> convolve(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline ZPoly from_coeffs(const std::vector<long>& c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(0, std::move(v));
}

}  // namespace nzalex::testing

namespace nzalex::testing {

// Exact determinant over Q by Gaussian elimination.
inline mpq_class det_q(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      d = -d;
    }
    d *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpq_class f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return d;
}

inline mpq_class qpow(const mpq_class& t, std::int64_t e) {
  mpq_class out = 1;
  const mpq_class base = e < 0 ? mpq_class(1 / t) : t;
  for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) out *= base;
  return out;
}

// d w / d gen evaluated under gamma -> t^alpha(gamma), straight from the letter sequence.
inline mpq_class fox_at(const FreeWord& w, int gen, const AlphaMap& alpha, const mpq_class& t) {
  mpq_class acc = 0;
  std::int64_t prefix = 0;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) acc += l.exp > 0 ? qpow(t, prefix) : mpq_class(-qpow(t, prefix - alpha(gen)));
    prefix += l.exp * alpha(l.gen);
  }
  return acc;
}

inline mpq_class eval_q(const ZPoly& p, const mpq_class& t) {
  mpq_class acc = 0;
  for (int k = p.lo(); !p.is_zero() && k <= p.hi(); ++k) acc += mpq_class(p.coeff(k)) * qpow(t, k);
  return acc;
}

// Alexander polynomial value from the presentation at a rational point: delete the column
// of a generator with nonzero alpha, then rescale by (t-1)/(t^alpha - 1).
inline mpq_class wada_at(const Presentation& pres, const AlphaMap& alpha, const mpq_class& t) {
  std::size_t drop = 0;
  while (alpha(pres.generators[drop]) == 0) ++drop;
  std::vector<std::vector<mpq_class>> m;
  for (const FreeWord& r : pres.relators) {
    std::vector<mpq_class> row;
    for (std::size_t j = 0; j < pres.generators.size(); ++j)
      if (j != drop) row.push_back(fox_at(r, pres.generators[j], alpha, t));
    m.push_back(row);
  }
  return det_q(m) * (t - 1) / (qpow(t, alpha(pres.generators[drop])) - 1);
}

// p and q agree up to +-t^k, tested at the sample points.
inline bool unit_multiple_at(const std::vector<mpq_class>& p, const std::vector<mpq_class>& q,
                             const std::vector<mpq_class>& points) {
  for (int k = -40; k <= 40; ++k)
    for (int sign : {1, -1}) {
      bool ok = true;
      for (std::size_t i = 0; i < points.size() && ok; ++i) ok = p[i] == sign * qpow(points[i], k) * q[i];
      if (ok) return true;
    }
  return false;
}

inline std::vector<mpq_class> sample_points() {
  return {mpq_class(2), mpq_class(3), mpq_class(-5), mpq_class(1, 7), mpq_class(11, 3), mpq_class(-2, 9)};
}

}  // namespace nzalex::testing
