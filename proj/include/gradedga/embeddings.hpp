#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gradedga/multivector.hpp"

namespace gradedga {

enum class Parity { Even = 0, Odd = 1 };

inline Parity operator*(Parity a, Parity b) noexcept {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}

/// A product of invertible vectors. Parity is stored rather than inferred so
/// that an overall sign never changes how the twisted action is applied.
class Versor {
 public:
  Versor(Multivector value, Parity parity, const Tolerance& tol = {})
      : value_(std::move(value)), parity_(parity) {
    const bool clean = parity_ == Parity::Even ? value_.is_even(tol) : value_.is_odd(tol);
    if (!clean) {
      throw Error(ErrorCode::InvalidArgument, "versor grades do not match its parity");
    }
    const Multivector sq = value_ * reverse(value_);
    const double scale = value_.max_abs() * value_.max_abs();
    if (!sq.is_grade(0, tol) || tol.is_zero(sq.scalar_part(), scale)) {
      throw Error(ErrorCode::NonInvertible, "U reverse(U) is not a nonzero scalar");
    }
  }

  /// Parity read off the grades of `value`.
  static Versor from_multivector(Multivector value, const Tolerance& tol = {}) {
    if (value.is_even(tol)) return Versor(std::move(value), Parity::Even, tol);
    if (value.is_odd(tol)) return Versor(std::move(value), Parity::Odd, tol);
    throw Error(ErrorCode::InvalidArgument, "multivector mixes even and odd grades");
  }

  /// Product of the given vectors in order.
  static Versor from_vectors(std::span<const Multivector> vectors, const Tolerance& tol = {}) {
    if (vectors.empty()) throw Error(ErrorCode::InvalidArgument, "empty reflection list");
    Multivector acc = Multivector::scalar(vectors.front().algebra_ptr(), 1.0);
    for (const auto& v : vectors) {
      if (!v.is_grade(1, tol)) throw Error(ErrorCode::InvalidArgument, "factor is not a vector");
      acc = acc * v;
    }
    return Versor(std::move(acc), (vectors.size() & 1) ? Parity::Odd : Parity::Even, tol);
  }

  const Multivector& value() const noexcept { return value_; }
  Parity parity() const noexcept { return parity_; }

  Multivector inverse() const {
    const Multivector r = reverse(value_);
    return r / (value_ * r).scalar_part();
  }

  friend Versor operator*(const Versor& a, const Versor& b) {
    return Versor(a.value_ * b.value_, a.parity_ * b.parity_);
  }

 private:
  Multivector value_;
  Parity parity_;
};

namespace detail {

inline std::optional<int> first_generator_with_square(const Algebra& alg, int sq) {
  for (int i = 0; i < alg.dim(); ++i) {
    if (alg.square(i) == sq) return i;
  }
  return std::nullopt;
}

inline std::optional<int> last_generator_with_square(const Algebra& alg, int sq) {
  for (int i = alg.dim() - 1; i >= 0; --i) {
    if (alg.square(i) == sq) return i;
  }
  return std::nullopt;
}

}  // namespace detail

/// Hyperplane a x + b y + ... + offset = 0 as the vector a e1 + b e2 + ... + offset e0.
/// `normal` fills the non-null generators in order; the offset goes on the
/// lowest-index null generator unless `null_generator` says otherwise.
inline Multivector embed_plane(const AlgebraPtr& algebra, std::span<const double> normal,
                               double offset, std::optional<int> null_generator = std::nullopt) {
  const Algebra& alg = *algebra;
  const auto origin = null_generator ? null_generator : detail::first_generator_with_square(alg, 0);
  if (!origin || *origin < 0 || *origin >= alg.dim() || alg.square(*origin) != 0) {
    throw Error(ErrorCode::InvalidArgument, "plane embedding needs a null generator");
  }
  Multivector v(algebra);
  std::size_t k = 0;
  for (int i = 0; i < alg.dim(); ++i) {
    if (i == *origin) continue;
    if (alg.square(i) == 0) continue;
    if (k >= normal.size()) break;
    v[BladeMask{1} << i] = normal[k++];
  }
  if (k != normal.size() || k != static_cast<std::size_t>(alg.p() + alg.q())) {
    throw Error(ErrorCode::InvalidArgument, "normal needs one coefficient per non-null generator");
  }
  v[BladeMask{1} << *origin] = offset;
  return v;
}

struct WittBasis {
  Multivector origin;    // n_o = (e- - e+)/2
  Multivector infinity;  // n_inf = e- + e+
  int e_plus;
  int e_minus;
};

/// Null pair built from the last positive and last negative generators
/// (e4, e5 in R(4,1)) unless both are given.
inline WittBasis witt_basis(const AlgebraPtr& algebra, std::optional<int> e_plus = std::nullopt,
                            std::optional<int> e_minus = std::nullopt) {
  const Algebra& alg = *algebra;
  const auto ep = e_plus ? e_plus : detail::last_generator_with_square(alg, 1);
  const auto em = e_minus ? e_minus : detail::last_generator_with_square(alg, -1);
  if (!ep || !em || *ep < 0 || *em < 0 || *ep >= alg.dim() || *em >= alg.dim() ||
      alg.square(*ep) != 1 || alg.square(*em) != -1) {
    throw Error(ErrorCode::InvalidArgument, "Witt basis needs one positive and one negative generator");
  }
  const Multivector plus = Multivector::generator(algebra, *ep);
  const Multivector minus = Multivector::generator(algebra, *em);
  return WittBasis{(minus - plus) * 0.5, minus + plus, *ep, *em};
}

/// Hypersphere with the given centre and radius as n_o + x + (x^2 - rho^2)/2 n_inf.
/// The centre fills the generators other than e+ and e- in order.
inline Multivector embed_sphere(const AlgebraPtr& algebra, std::span<const double> center,
                                double radius) {
  const WittBasis w = witt_basis(algebra);
  const Algebra& alg = *algebra;
  Multivector x(algebra);
  std::size_t k = 0;
  for (int i = 0; i < alg.dim() && k < center.size(); ++i) {
    if (i == w.e_plus || i == w.e_minus) continue;
    x[BladeMask{1} << i] = center[k++];
  }
  if (k != center.size() || k != static_cast<std::size_t>(alg.dim() - 2)) {
    throw Error(ErrorCode::InvalidArgument, "centre needs one coefficient per remaining generator");
  }
  const Complex x2 = (x * x).scalar_part();
  return w.origin + x + w.infinity * (0.5 * (x2 - radius * radius));
}

/// Twisted conjugation: the grade-l part of x maps to (-1)^{kl} U <x>_l U^-1.
inline Multivector sandwich(const Versor& u, const Multivector& x) {
  u.value().require_same(x);
  const Multivector inv = u.inverse();
  const Multivector conj = u.value() * x * inv;
  if (u.parity() == Parity::Even) return conj;
  // Odd grades of x pick up a minus sign; conjugation preserves grade.
  return even_part(conj) - odd_part(conj);
}

inline Multivector sandwich(const Multivector& u, const Multivector& x, const Tolerance& tol = {}) {
  return sandwich(Versor::from_multivector(u, tol), x);
}

/// (-1)^k, confirmed by acting on the pseudoscalar.
inline int versor_det(const Versor& u) {
  const Algebra& alg = u.value().algebra();
  const auto top = static_cast<BladeMask>(alg.blade_count() - 1);
  const Multivector pseudo = Multivector::blade(u.value().algebra_ptr(), top);
  const Multivector image = sandwich(u, pseudo);
  const Complex ratio = image[top];
  const int expected = u.parity() == Parity::Even ? 1 : -1;
  if (std::abs(ratio - static_cast<double>(expected)) > 1e-8 ||
      std::abs((image - pseudo * ratio).max_abs()) > 1e-8) {
    throw Error(ErrorCode::InvalidArgument, "pseudoscalar is not an eigenvector of the versor");
  }
  return expected;
}

}  // namespace gradedga
