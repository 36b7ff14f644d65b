#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "gradedga/algebra.hpp"
#include "gradedga/error.hpp"
#include "gradedga/tolerance.hpp"

namespace gradedga {

using Complex = std::complex<double>;

/// Dense multivector: 2^n complex coefficients indexed by blade mask.
class Multivector {
 public:
  explicit Multivector(AlgebraPtr algebra)
      : algebra_(std::move(algebra)), coeffs_(checked(algebra_).blade_count()) {}

  Multivector(AlgebraPtr algebra, std::vector<Complex> coeffs)
      : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != checked(algebra_).blade_count()) {
      throw Error(ErrorCode::InvalidArgument, "coefficient count does not match 2^n");
    }
  }

  static Multivector scalar(AlgebraPtr algebra, Complex value) {
    Multivector m(std::move(algebra));
    m.coeffs_[0] = value;
    return m;
  }

  static Multivector blade(AlgebraPtr algebra, BladeMask mask, Complex value = 1.0) {
    Multivector m(std::move(algebra));
    m.coeffs_.at(mask) = value;
    return m;
  }

  static Multivector generator(AlgebraPtr algebra, int index, Complex value = 1.0) {
    if (index < 0 || index >= checked(algebra).dim()) {
      throw Error(ErrorCode::InvalidArgument, "generator index out of range");
    }
    return blade(std::move(algebra), BladeMask{1} << index, value);
  }

  /// Blade by name, honouring the written order: named("e21") == -named("e12").
  static Multivector named(AlgebraPtr algebra, std::string_view name, Complex value = 1.0) {
    const auto parsed = checked(algebra).parse_blade(name);
    if (!parsed) {
      throw Error(ErrorCode::InvalidArgument, "unknown blade name '" + std::string(name) + "'");
    }
    return blade(std::move(algebra), parsed->first, value * static_cast<double>(parsed->second));
  }

  const Algebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }

  std::size_t size() const noexcept { return coeffs_.size(); }
  Complex operator[](BladeMask mask) const { return coeffs_[mask]; }
  Complex& operator[](BladeMask mask) { return coeffs_[mask]; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex scalar_part() const noexcept { return coeffs_[0]; }

  double max_abs() const noexcept {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  double l1_norm() const noexcept {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::abs(c);
    return s;
  }

  bool is_real(const Tolerance& tol = {}) const noexcept {
    const double scale = max_abs();
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [&](const Complex& c) { return tol.is_zero(c.imag(), scale); });
  }

  bool is_zero(const Tolerance& tol = {}, double scale = 0.0) const noexcept {
    return tol.is_zero(max_abs(), scale);
  }

  /// True when everything outside grade k vanishes relative to the largest
  /// coefficient.
  bool is_grade(int k, const Tolerance& tol = {}) const noexcept {
    const double scale = max_abs();
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
      if (grade_of(static_cast<BladeMask>(m)) != k && !tol.is_zero(coeffs_[m], scale)) {
        return false;
      }
    }
    return true;
  }

  bool is_even(const Tolerance& tol = {}) const noexcept { return parity_clean(0, tol); }
  bool is_odd(const Tolerance& tol = {}) const noexcept { return parity_clean(1, tol); }

  Multivector& operator+=(const Multivector& o) {
    require_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    require_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Multivector& operator*=(Complex s) noexcept {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  Multivector& operator/=(Complex s) noexcept {
    for (auto& c : coeffs_) c /= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, Complex s) { return a *= s; }
  friend Multivector operator*(Complex s, Multivector a) { return a *= s; }
  friend Multivector operator*(Multivector a, double s) { return a *= Complex(s); }
  friend Multivector operator*(double s, Multivector a) { return a *= Complex(s); }
  friend Multivector operator/(Multivector a, Complex s) { return a /= s; }
  friend Multivector operator/(Multivector a, double s) { return a /= Complex(s); }
  friend Multivector operator-(Multivector a) { return a *= Complex(-1.0); }

  friend Multivector operator+(Multivector a, Complex s) {
    a.coeffs_[0] += s;
    return a;
  }
  friend Multivector operator+(Complex s, Multivector a) { return std::move(a) + s; }
  friend Multivector operator+(Multivector a, double s) { return std::move(a) + Complex(s); }
  friend Multivector operator+(double s, Multivector a) { return std::move(a) + Complex(s); }
  friend Multivector operator-(Multivector a, double s) { return std::move(a) + Complex(-s); }
  friend Multivector operator-(double s, Multivector a) { return -std::move(a) + Complex(s); }

  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  void require_same(const Multivector& o) const {
    if (algebra_ != o.algebra_ && !(*algebra_ == *o.algebra_)) {
      throw Error(ErrorCode::AlgebraMismatch, "operands belong to different algebras");
    }
  }

 private:
  static const Algebra& checked(const AlgebraPtr& a) {
    if (!a) throw Error(ErrorCode::InvalidArgument, "null algebra");
    return *a;
  }

  bool parity_clean(int parity, const Tolerance& tol) const noexcept {
    const double scale = max_abs();
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
      if ((grade_of(static_cast<BladeMask>(m)) & 1) != parity && !tol.is_zero(coeffs_[m], scale)) {
        return false;
      }
    }
    return true;
  }

  AlgebraPtr algebra_;
  std::vector<Complex> coeffs_;
};

namespace detail {

// Bilinear blade-pair kernel: keeps a blade product only when `keep(ga, gb,
// gresult)` holds.
template <typename Keep>
Multivector blade_product(const Multivector& a, const Multivector& b, Keep keep) {
  a.require_same(b);
  const Algebra& alg = a.algebra();
  Multivector out(a.algebra_ptr());
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  const std::size_t n = ca.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (ca[i] == Complex{}) continue;
    const auto ma = static_cast<BladeMask>(i);
    const int ga = grade_of(ma);
    for (std::size_t j = 0; j < n; ++j) {
      if (cb[j] == Complex{}) continue;
      const auto mb = static_cast<BladeMask>(j);
      const BladeMask mr = ma ^ mb;
      if (!keep(ga, grade_of(mb), grade_of(mr))) continue;
      const int s = alg.blade_sign(ma, mb);
      if (s == 0) continue;
      const Complex t = ca[i] * cb[j];
      out[mr] += s > 0 ? t : -t;
    }
  }
  return out;
}

template <typename SignOf>
Multivector grade_map(Multivector x, SignOf sign_of) {
  for (std::size_t m = 0; m < x.size(); ++m) {
    if (sign_of(grade_of(static_cast<BladeMask>(m))) < 0) {
      x[static_cast<BladeMask>(m)] = -x[static_cast<BladeMask>(m)];
    }
  }
  return x;
}

}  // namespace detail

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return detail::blade_product(a, b, [](int, int, int) { return true; });
}

inline Multivector gp(const Multivector& a, const Multivector& b) { return a * b; }

/// Wedge product, extended bilinearly over the homogeneous parts.
inline Multivector outer(const Multivector& a, const Multivector& b) {
  return detail::blade_product(a, b, [](int ga, int gb, int gr) { return gr == ga + gb; });
}

/// Inner product <ab>_{|k-l|}, extended bilinearly over the homogeneous parts.
inline Multivector inner(const Multivector& a, const Multivector& b) {
  return detail::blade_product(a, b,
                               [](int ga, int gb, int gr) { return gr == std::abs(ga - gb); });
}

inline Multivector commutator(const Multivector& a, const Multivector& b) {
  return (a * b - b * a) * 0.5;
}

inline Multivector grade_select(Multivector x, int k) {
  for (std::size_t m = 0; m < x.size(); ++m) {
    if (grade_of(static_cast<BladeMask>(m)) != k) x[static_cast<BladeMask>(m)] = 0.0;
  }
  return x;
}

inline Multivector even_part(Multivector x) {
  for (std::size_t m = 0; m < x.size(); ++m) {
    if (grade_of(static_cast<BladeMask>(m)) & 1) x[static_cast<BladeMask>(m)] = 0.0;
  }
  return x;
}

inline Multivector odd_part(const Multivector& x) { return x - even_part(x); }

/// Flips grades 2 and 3 (mod 4).
inline Multivector reverse(Multivector x) {
  return detail::grade_map(std::move(x), [](int g) { return (g % 4 == 2 || g % 4 == 3) ? -1 : 1; });
}

/// Main involution: flips odd grades.
inline Multivector involute(Multivector x) {
  return detail::grade_map(std::move(x), [](int g) { return (g & 1) ? -1 : 1; });
}

/// Clifford conjugation, the composition of reverse and involute.
inline Multivector conjugate(Multivector x) {
  return detail::grade_map(std::move(x), [](int g) { return (g % 4 == 1 || g % 4 == 2) ? -1 : 1; });
}

/// Principal square root of <x reverse(x)>_0. For a real scalar this is the
/// case split sqrt(x x~) or sqrt(-x x~) on its sign.
inline Complex norm(const Multivector& x) {
  const Complex s = (x * reverse(x)).scalar_part();
  if (s.imag() == 0.0) return Complex(std::sqrt(std::abs(s.real())), 0.0);
  return std::sqrt(s);
}

inline Multivector normalize(const Multivector& x, const Tolerance& tol = {}) {
  const Complex n = norm(x);
  if (tol.is_zero(n, 0.0) || tol.is_zero(std::abs(n * n), x.max_abs() * x.max_abs())) {
    throw Error(ErrorCode::NullNorm, "cannot normalize a multivector with vanishing norm");
  }
  return x / n;
}

/// Largest coefficient-wise difference.
inline double max_abs_diff(const Multivector& a, const Multivector& b) { return (a - b).max_abs(); }

inline bool approx_equal(const Multivector& a, const Multivector& b, double eps) {
  return max_abs_diff(a, b) <= eps;
}

/// Inverse of a versor-like element x with x reverse(x) a nonzero scalar.
inline Multivector versor_inverse(const Multivector& x, const Tolerance& tol = {}) {
  const Multivector xr = reverse(x);
  const Multivector sq = x * xr;
  const double scale = x.max_abs() * x.max_abs();
  if (!sq.is_grade(0, tol) || tol.is_zero(sq.scalar_part(), scale)) {
    throw Error(ErrorCode::NonInvertible, "x reverse(x) is not an invertible scalar");
  }
  return xr / sq.scalar_part();
}

}  // namespace gradedga
