#include "nzalex/laurent.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace nzalex {

ZPoly zpoly(int lo, std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (long x : coeffs) c.emplace_back(x);
  return ZPoly(lo, std::move(c));
}

ZPoly normalize(const ZPoly& p) {
  if (p.is_zero()) return p;
  ZPoly out = p.shifted(-p.lo());
  return sgn(out.leading()) < 0 ? -out : out;
}

CPoly normalize(const CPoly& p) {
  if (p.is_zero()) return p;
  const std::complex<double> lead = p.leading();
  std::vector<std::complex<double>> c = p.coeffs();
  for (auto& x : c) x /= lead;
  return CPoly(0, std::move(c));
}

bool associated(const ZPoly& a, const ZPoly& b) { return normalize(a) == normalize(b); }

std::optional<ZPoly> exact_divide(const ZPoly& p, const ZPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact_divide by the zero polynomial");
  if (p.is_zero()) return ZPoly{};
  std::vector<mpz_class> rem = p.coeffs();
  const std::vector<mpz_class>& den = q.coeffs();
  const std::size_t n = rem.size();
  const std::size_t m = den.size();
  if (n < m) return std::nullopt;
  std::vector<mpz_class> quot(n - m + 1);
  for (std::size_t i = n; i-- > m - 1;) {
    const mpz_class& top = rem[i];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), den.back().get_mpz_t())) return std::nullopt;
    mpz_class c = top / den.back();
    quot[i - (m - 1)] = c;
    for (std::size_t j = 0; j < m; ++j) rem[i - (m - 1) + j] -= c * den[j];
  }
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (sgn(rem[i]) != 0) return std::nullopt;
  return ZPoly(p.lo() - q.lo(), std::move(quot));
}

namespace {
double norm2(const std::vector<std::complex<double>>& c) {
  double s = 0;
  for (const auto& x : c) s += std::norm(x);
  return std::sqrt(s);
}
}  // namespace

std::optional<CPoly> exact_divide(const CPoly& p, const CPoly& q, double rel_tol) {
  if (q.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact_divide by the zero polynomial");
  if (p.is_zero()) return CPoly{};
  std::vector<std::complex<double>> rem = p.coeffs();
  const auto& den = q.coeffs();
  const std::size_t n = rem.size();
  const std::size_t m = den.size();
  const double scale = norm2(rem);
  if (n < m) return std::nullopt;
  std::vector<std::complex<double>> quot(n - m + 1);
  for (std::size_t i = n; i-- > m - 1;) {
    const std::complex<double> c = rem[i] / den.back();
    quot[i - (m - 1)] = c;
    for (std::size_t j = 0; j < m; ++j) rem[i - (m - 1) + j] -= c * den[j];
  }
  rem.resize(m - 1);
  if (norm2(rem) > rel_tol * scale) return std::nullopt;
  return CPoly(p.lo() - q.lo(), std::move(quot));
}

bool is_palindromic(const ZPoly& p) { return associated(p, p.reflected()); }

bool is_palindromic(const CPoly& p, double tol) {
  if (p.is_zero()) return true;
  const CPoly a = normalize(p);
  const CPoly b = normalize(p.reflected());
  if (a.coeffs().size() != b.coeffs().size()) return false;
  double scale = 0;
  for (const auto& x : a.coeffs()) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (std::abs(a.coeffs()[i] - b.coeffs()[i]) > tol * scale) return false;
  return true;
}

ZPoly mod2(const ZPoly& p) {
  std::vector<mpz_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(mpz_tstbit(x.get_mpz_t(), 0));
  return ZPoly(p.lo(), std::move(c));
}

bool f2_associated(const ZPoly& a, const ZPoly& b) {
  const ZPoly x = mod2(a);
  const ZPoly y = mod2(b);
  if (x.is_zero() || y.is_zero()) return x.is_zero() == y.is_zero();
  return x.shifted(-x.lo()) == y.shifted(-y.lo());
}

CPoly to_complex(const ZPoly& p) {
  std::vector<std::complex<double>> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x.get_d(), 0.0);
  return CPoly(p.lo(), std::move(c));
}

CPoly cleaned(const CPoly& p, double rel_tol) {
  double scale = 0;
  for (const auto& x : p.coeffs()) scale = std::max(scale, std::abs(x));
  std::vector<std::complex<double>> c = p.coeffs();
  for (auto& x : c) {
    if (std::abs(x) < rel_tol * scale) x = 0;
    if (std::abs(x.imag()) < rel_tol * scale) x.imag(0);
    if (std::abs(x.real()) < rel_tol * scale) x.real(0);
  }
  return CPoly(p.lo(), std::move(c));
}

std::optional<ZPoly> round_to_integer(const CPoly& p, double tol) {
  std::vector<mpz_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    const double r = std::round(x.real());
    if (std::abs(x - std::complex<double>(r, 0)) > tol) return std::nullopt;
    c.emplace_back(r);
  }
  return ZPoly(p.lo(), std::move(c));
}

ZPoly cyclotomic_product(const std::vector<std::int64_t>& exponents) {
  ZPoly acc(1);
  for (std::int64_t a : exponents) acc *= ZPoly::t_power(static_cast<int>(a)) - ZPoly(1);
  return acc;
}

ZPoly det(const ZMatrix& input) {
  if (!input.square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return ZPoly(1);
  ZMatrix m = input;
  int shift = 0;
  for (std::size_t r = 0; r < n; ++r) {
    bool any = false;
    int lo = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (m(r, c).is_zero()) continue;
      lo = any ? std::min(lo, m(r, c).lo()) : m(r, c).lo();
      any = true;
    }
    if (!any) return ZPoly{};
    for (std::size_t c = 0; c < n; ++c) m(r, c) = m(r, c).shifted(-lo);
    shift += lo;
  }
  int sign = 1;
  ZPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return ZPoly{};
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ZPoly num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = exact_divide(num, prev);
        if (!q) throw Error(ErrorKind::InternalDivisionFailure, "Bareiss step was not exact");
        m(i, j) = std::move(*q);
      }
      m(i, k) = ZPoly{};
    }
    prev = m(k, k);
  }
  ZPoly out = m(n - 1, n - 1).shifted(shift);
  return sign < 0 ? -out : out;
}

std::complex<double> det_at(const CMatrix& m, std::complex<double> t) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const auto n = static_cast<Eigen::Index>(m.rows());
  if (n == 0) return 1.0;
  Eigen::MatrixXcd e(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) e(r, c) = m(r, c).evaluate(t);
  return e.partialPivLu().determinant();
}

CPoly det(const CMatrix& input, double radius) {
  if (!input.square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return CPoly(1.0);
  CMatrix m = input;
  int shift = 0;
  int d = 0;
  for (std::size_t r = 0; r < n; ++r) {
    bool any = false;
    int lo = 0;
    int hi = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const CPoly& x = m(r, c);
      if (x.is_zero()) continue;
      lo = any ? std::min(lo, x.lo()) : x.lo();
      hi = any ? std::max(hi, x.hi()) : x.hi();
      any = true;
    }
    if (!any) return CPoly{};
    for (std::size_t c = 0; c < n; ++c) m(r, c) = m(r, c).shifted(-lo);
    shift += lo;
    d += hi - lo;
  }
  const int points = d + 1;
  const double step = 2.0 * std::numbers::pi / points;
  std::vector<std::complex<double>> values(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) values[k] = det_at(m, std::polar(radius, step * k));
  std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j) {
    std::complex<double> acc = 0;
    for (int k = 0; k < points; ++k)
      acc += values[k] * std::polar(1.0, -step * static_cast<double>((static_cast<long>(j) * k) % points));
    coeffs[j] = acc / static_cast<double>(points) / std::pow(radius, j);
  }
  return cleaned(CPoly(shift, std::move(coeffs)), 1e-8);
}

namespace {
template <class Coeff, class Fmt>
std::string render(const LaurentPoly<Coeff>& p, std::string_view var, Fmt&& fmt) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = p.hi(); e >= p.lo(); --e) {
    const Coeff& c = p.coeffs()[e - p.lo()];
    if (detail::coeff_is_zero(c)) continue;
    auto [negative, magnitude, is_one] = fmt(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude;
      continue;
    }
    if (!is_one) out << magnitude << '*';
    out << var;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}
}  // namespace

std::string to_string(const ZPoly& p, std::string_view var) {
  return render(p, var, [](const mpz_class& c) {
    const bool negative = sgn(c) < 0;
    mpz_class a = abs(c);
    return std::tuple{negative, a.get_str(), a == 1};
  });
}

std::string to_string(const CPoly& p, std::string_view var, int precision) {
  return render(p, var, [precision](const std::complex<double>& c) {
    std::ostringstream s;
    s << std::setprecision(precision);
    if (c.imag() == 0.0) {
      s << std::abs(c.real());
      return std::tuple{c.real() < 0, s.str(), std::abs(c.real()) == 1.0};
    }
    s << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    return std::tuple{false, s.str(), false};
  });
}

}  // namespace nzalex
