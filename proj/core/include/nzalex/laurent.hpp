#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "nzalex/matrix.hpp"

namespace nzalex {

namespace detail {
inline bool coeff_is_zero(const mpz_class& x) { return sgn(x) == 0; }
inline bool coeff_is_zero(const std::complex<double>& x) { return x == std::complex<double>{}; }
}  // namespace detail

// Laurent polynomial sum_k c_k t^(lo+k). The zero polynomial has no coefficients.
template <class R>
class LaurentPoly {
 public:
  using coeff_type = R;

  LaurentPoly() = default;
  LaurentPoly(int lo, std::vector<R> coeffs) : lo_(lo), c_(std::move(coeffs)) { trim(); }
  // Implicit so that integer and complex literals act as constants.
  LaurentPoly(const R& constant) : c_{constant} { trim(); }
  template <class I>
    requires(std::is_integral_v<I> && std::is_same_v<R, mpz_class>)
  LaurentPoly(I constant) : c_{R(static_cast<long>(constant))} { trim(); }

  static LaurentPoly monomial(const R& c, int exponent) { return LaurentPoly(exponent, {c}); }
  static LaurentPoly t_power(int exponent) { return monomial(R(1), exponent); }

  bool is_zero() const noexcept { return c_.empty(); }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(c_.size()) - 1; }
  int width() const noexcept { return is_zero() ? 0 : hi() - lo_; }
  const std::vector<R>& coeffs() const noexcept { return c_; }

  R coeff(int exponent) const {
    if (is_zero() || exponent < lo_ || exponent > hi()) return R(0);
    return c_[exponent - lo_];
  }
  const R& lowest() const { return c_.front(); }
  const R& leading() const { return c_.back(); }

  LaurentPoly shifted(int k) const {
    LaurentPoly out = *this;
    out.lo_ += k;
    return out;
  }

  // p(t) -> p(1/t)
  LaurentPoly reflected() const {
    if (is_zero()) return {};
    std::vector<R> c(c_.rbegin(), c_.rend());
    return LaurentPoly(-hi(), std::move(c));
  }

  template <class S>
  S evaluate(const S& t) const {
    if (is_zero()) return S(0);
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + to_scalar<S>(*it);
    return acc * pow_int(t, lo_);
  }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, 1); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, -1); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return LaurentPoly(a.lo_ + b.lo_, std::move(c));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }

 private:
  template <class S>
  static S to_scalar(const R& x) {
    if constexpr (std::is_same_v<R, mpz_class>) {
      return S(x.get_d());
    } else {
      return S(x);
    }
  }
  template <class S>
  static S pow_int(const S& t, int k) {
    S base = k < 0 ? S(1) / t : t;
    S acc(1);
    for (int n = k < 0 ? -k : k; n > 0; n >>= 1) {
      if (n & 1) acc = acc * base;
      base = base * base;
    }
    return acc;
  }

  LaurentPoly& accumulate(const LaurentPoly& o, int sign) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = sign > 0 ? o : -o;
      return *this;
    }
    const int lo = std::min(lo_, o.lo_);
    const int hi_ = std::max(hi(), o.hi());
    std::vector<R> c(static_cast<std::size_t>(hi_ - lo + 1), R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + (lo_ - lo)] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      if (sign > 0) {
        c[i + (o.lo_ - lo)] += o.c_[i];
      } else {
        c[i + (o.lo_ - lo)] -= o.c_[i];
      }
    }
    lo_ = lo;
    c_ = std::move(c);
    trim();
    return *this;
  }

  void trim() {
    std::size_t first = 0;
    while (first < c_.size() && detail::coeff_is_zero(c_[first])) ++first;
    if (first == c_.size()) {
      c_.clear();
      lo_ = 0;
      return;
    }
    std::size_t last = c_.size();
    while (detail::coeff_is_zero(c_[last - 1])) --last;
    c_ = std::vector<R>(c_.begin() + static_cast<std::ptrdiff_t>(first),
                        c_.begin() + static_cast<std::ptrdiff_t>(last));
    lo_ += static_cast<int>(first);
  }

  int lo_ = 0;
  std::vector<R> c_;
};

using ZPoly = LaurentPoly<mpz_class>;
using CPoly = LaurentPoly<std::complex<double>>;
using ZMatrix = Matrix<ZPoly>;
using CMatrix = Matrix<CPoly>;

// Integer polynomial from coefficients listed lowest degree first.
ZPoly zpoly(int lo, std::initializer_list<long> coeffs);

// Representative of the class up to +-t^k: lowest exponent 0 and positive leading coefficient.
ZPoly normalize(const ZPoly& p);
// Lowest exponent 0 and monic.
CPoly normalize(const CPoly& p);

bool associated(const ZPoly& a, const ZPoly& b);

// p/q when the division is exact, nullopt otherwise. Throws DivisionByZero when q = 0.
std::optional<ZPoly> exact_divide(const ZPoly& p, const ZPoly& q);
// Tolerant variant: the remainder norm must be below rel_tol * |p|.
std::optional<CPoly> exact_divide(const CPoly& p, const CPoly& q, double rel_tol = 1e-8);

bool is_palindromic(const ZPoly& p);
bool is_palindromic(const CPoly& p, double tol);

// Coefficients reduced into {0, 1}.
ZPoly mod2(const ZPoly& p);
// Equality in F_2[t^{+-1}] up to multiplication by t^k.
bool f2_associated(const ZPoly& a, const ZPoly& b);

CPoly to_complex(const ZPoly& p);
// Drops coefficients below rel_tol times the largest magnitude.
CPoly cleaned(const CPoly& p, double rel_tol = 1e-8);
// Rounds every coefficient to the nearest integer when all are within tol of one.
std::optional<ZPoly> round_to_integer(const CPoly& p, double tol);

// Product of (t^a - 1) over the given exponents; an exponent 0 yields the zero polynomial.
ZPoly cyclotomic_product(const std::vector<std::int64_t>& exponents);

// Fraction-free Bareiss elimination over Z[t^{+-1}].
ZPoly det(const ZMatrix& m);
// Evaluation at points r * exp(2 pi i k/(d+1)) followed by interpolation.
CPoly det(const CMatrix& m, double radius = 1.2345);
// Direct complex LU determinant of a Laurent matrix evaluated at a point.
std::complex<double> det_at(const CMatrix& m, std::complex<double> t);

std::string to_string(const ZPoly& p, std::string_view var = "t");
std::string to_string(const CPoly& p, std::string_view var = "t", int precision = 6);

}  // namespace nzalex
