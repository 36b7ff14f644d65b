#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gradedga/embeddings.hpp"
#include "gradedga/multivector.hpp"

namespace gradedga {

inline constexpr int kMaxRepDimension = 8;

/// Blade order used for the E(3) conjugation example in R(3,0,1).
inline constexpr std::string_view kE3BladeOrder =
    "1,e1,e2,e3,e0,e23,e31,e12,e01,e02,e03,e032,e013,e021,e123,e0123";

/// Square matrix with at most one nonzero entry per column, each entry in
/// {-1, 0, +1}. Kronecker products and products of such matrices stay in the
/// class, so the whole representation is built without dense arithmetic.
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  explicit MonomialMatrix(std::size_t dim) : row_(dim, 0), val_(dim, 0) {}

  static MonomialMatrix identity(std::size_t dim) {
    MonomialMatrix m(dim);
    for (std::size_t j = 0; j < dim; ++j) m.set(j, j, 1);
    return m;
  }

  /// From a dense 2x2 pattern given row by row.
  static MonomialMatrix from_2x2(int a00, int a01, int a10, int a11) {
    MonomialMatrix m(2);
    const std::array<std::array<int, 2>, 2> a{{{a00, a01}, {a10, a11}}};
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t i = 0; i < 2; ++i) {
        if (a[i][j] != 0) m.set(j, i, a[i][j]);
      }
    }
    return m;
  }

  std::size_t dim() const noexcept { return row_.size(); }
  std::size_t row_of(std::size_t col) const noexcept { return row_[col]; }
  int value_of(std::size_t col) const noexcept { return val_[col]; }

  int operator()(std::size_t i, std::size_t j) const noexcept {
    return (val_[j] != 0 && row_[j] == i) ? val_[j] : 0;
  }

  void set(std::size_t col, std::size_t row, int value) {
    row_[col] = static_cast<std::uint32_t>(row);
    val_[col] = static_cast<std::int8_t>(value);
  }

  friend MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b) {
    MonomialMatrix out(a.dim() * b.dim());
    for (std::size_t ja = 0; ja < a.dim(); ++ja) {
      for (std::size_t jb = 0; jb < b.dim(); ++jb) {
        const int v = a.val_[ja] * b.val_[jb];
        if (v != 0) out.set(ja * b.dim() + jb, a.row_[ja] * b.dim() + b.row_[jb], v);
      }
    }
    return out;
  }

  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
    MonomialMatrix out(a.dim());
    for (std::size_t j = 0; j < b.dim(); ++j) {
      if (b.val_[j] == 0) continue;
      const std::size_t k = b.row_[j];
      const int v = a.val_[k] * b.val_[j];
      if (v != 0) out.set(j, a.row_[k], v);
    }
    return out;
  }

  bool is_signed_permutation() const {
    std::vector<bool> seen(dim(), false);
    for (std::size_t j = 0; j < dim(); ++j) {
      if (val_[j] == 0 || seen[row_[j]]) return false;
      seen[row_[j]] = true;
    }
    return true;
  }

  /// Only defined for signed permutations, where the transpose is the inverse.
  MonomialMatrix transpose() const {
    if (!is_signed_permutation()) {
      throw Error(ErrorCode::InvalidArgument, "transpose requires a signed permutation");
    }
    MonomialMatrix t(dim());
    for (std::size_t j = 0; j < dim(); ++j) t.set(row_[j], j, val_[j]);
    return t;
  }

  Eigen::MatrixXd to_dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim()),
                                              static_cast<Eigen::Index>(dim()));
    for (std::size_t j = 0; j < dim(); ++j) {
      if (val_[j] != 0) m(row_[j], static_cast<Eigen::Index>(j)) = val_[j];
    }
    return m;
  }

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::vector<std::uint32_t> row_;
  std::vector<std::int8_t> val_;
};

/// A permutation of all 2^n blades, each with an orientation: "e032" stands
/// for e0 e3 e2 = -e023.
class BladeOrder {
 public:
  struct Entry {
    BladeMask mask;
    int sign;
    std::string name;
    std::vector<int> generators;  // in written order
  };

  static BladeOrder canonical(const Algebra& alg) {
    BladeOrder o;
    for (std::size_t m = 0; m < alg.blade_count(); ++m) {
      const auto mask = static_cast<BladeMask>(m);
      Entry e{mask, 1, alg.blade_name(mask), {}};
      for (int i = 0; i < alg.dim(); ++i) {
        if (mask & (BladeMask{1} << i)) e.generators.push_back(i);
      }
      o.entries_.push_back(std::move(e));
    }
    return o;
  }

  /// Comma separated signed blade names; must cover every blade exactly once.
  static BladeOrder parse(const Algebra& alg, std::string_view list) {
    BladeOrder o;
    std::vector<bool> seen(alg.blade_count(), false);
    std::stringstream ss{std::string(list)};
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const auto b = tok.find_first_not_of(" \t");
      const auto e = tok.find_last_not_of(" \t");
      tok = b == std::string::npos ? std::string() : tok.substr(b, e - b + 1);
      const auto parsed = alg.parse_blade(tok);
      if (!parsed) throw Error(ErrorCode::InvalidArgument, "invalid blade name '" + tok + "'");
      if (seen[parsed->first]) throw Error(ErrorCode::InvalidArgument, "blade '" + tok + "' listed twice");
      seen[parsed->first] = true;
      Entry entry{parsed->first, parsed->second, tok, {}};
      if (tok != "1") {
        for (char c : std::string_view(tok).substr(1)) {
          entry.generators.push_back(static_cast<int>(detail::kIndexChars.find(c)) - alg.first_index());
        }
      }
      o.entries_.push_back(std::move(entry));
    }
    if (o.entries_.size() != alg.blade_count()) {
      throw Error(ErrorCode::InvalidArgument, "blade order must list all " +
                                                  std::to_string(alg.blade_count()) + " blades");
    }
    return o;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::string to_string() const {
    std::string s;
    for (const auto& e : entries_) {
      if (!s.empty()) s += ',';
      s += e.name;
    }
    return s;
  }

 private:
  std::vector<Entry> entries_;
};

/// Clifford representation of an algebra in a chosen blade order:
/// generator matrices E_i, blade matrices R^i, ordering matrix O and the
/// conjugated set C^i = O R^i O^T whose first columns are unit vectors.
class RepMatrices {
 public:
  RepMatrices(AlgebraPtr algebra, BladeOrder order)
      : algebra_(std::move(algebra)), order_(std::move(order)) {
    const Algebra& alg = *algebra_;
    const int n = alg.dim();
    if (n > kMaxRepDimension) {
      throw Error(ErrorCode::DimensionCap, "Clifford representation is capped at n = " +
                                               std::to_string(kMaxRepDimension));
    }
    if (order_.size() != alg.blade_count()) {
      throw Error(ErrorCode::InvalidArgument, "blade order does not match the algebra");
    }
    const auto I = MonomialMatrix::identity(2);
    const auto Ip = MonomialMatrix::from_2x2(1, 0, 0, -1);
    const auto P = MonomialMatrix::from_2x2(0, 1, 1, 0);
    const auto Q = MonomialMatrix::from_2x2(0, 1, -1, 0);
    const auto R = MonomialMatrix::from_2x2(0, 0, 1, 0);

    // E_i = I x ... x I x S_i x I' x ... x I'  (i leading I factors).
    for (int i = 0; i < n; ++i) {
      MonomialMatrix e = MonomialMatrix::identity(1);
      for (int slot = 0; slot < n; ++slot) {
        const int sq = alg.square(i);
        const MonomialMatrix& s = sq > 0 ? P : (sq < 0 ? Q : R);
        e = kron(e, slot < i ? I : (slot == i ? s : Ip));
      }
      generators_.push_back(std::move(e));
    }

    const std::size_t dim = alg.blade_count();
    for (const auto& entry : order_) {
      MonomialMatrix m = MonomialMatrix::identity(dim);
      for (int g : entry.generators) m = m * generators_[static_cast<std::size_t>(g)];
      blades_.push_back(std::move(m));
    }

    // O_ij = R^i_{j0}: row i of O is the first column of R^i.
    ordering_ = MonomialMatrix(dim);
    std::vector<int> row_used(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      const int v = blades_[i].value_of(0);
      const std::size_t j = blades_[i].row_of(0);
      if (v == 0 || row_used[j]++) {
        throw Error(ErrorCode::InvalidArgument, "first columns do not form a permutation");
      }
      ordering_.set(j, i, v);
    }
    const MonomialMatrix ot = ordering_.transpose();
    for (std::size_t i = 0; i < dim; ++i) {
      MonomialMatrix c = ordering_ * blades_[i] * ot;
      if (c.value_of(0) != 1 || c.row_of(0) != i) {
        throw Error(ErrorCode::InvalidArgument, "conjugated first column is not e_i");
      }
      clifford_.push_back(std::move(c));
    }
  }

  const Algebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const BladeOrder& order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return order_.size(); }

  const std::vector<MonomialMatrix>& generators() const noexcept { return generators_; }
  const std::vector<MonomialMatrix>& blade_matrices() const noexcept { return blades_; }
  const MonomialMatrix& ordering() const noexcept { return ordering_; }
  const std::vector<MonomialMatrix>& clifford() const noexcept { return clifford_; }

  /// Oriented basis blade i of the order as a multivector.
  Multivector basis_blade(std::size_t i) const {
    return Multivector::blade(algebra_, order_[i].mask, static_cast<double>(order_[i].sign));
  }

 private:
  AlgebraPtr algebra_;
  BladeOrder order_;
  std::vector<MonomialMatrix> generators_;
  std::vector<MonomialMatrix> blades_;
  MonomialMatrix ordering_;
  std::vector<MonomialMatrix> clifford_;
};

inline RepMatrices build_rep(const AlgebraPtr& algebra) {
  return RepMatrices(algebra, BladeOrder::canonical(*algebra));
}

inline RepMatrices build_rep(const AlgebraPtr& algebra, std::string_view order) {
  return RepMatrices(algebra, BladeOrder::parse(*algebra, order));
}

inline Eigen::VectorXcd vec(const Multivector& x, const RepMatrices& rep) {
  if (!(x.algebra() == rep.algebra())) {
    throw Error(ErrorCode::AlgebraMismatch, "multivector and representation differ in algebra");
  }
  Eigen::VectorXcd v(static_cast<Eigen::Index>(rep.dim()));
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    v(static_cast<Eigen::Index>(i)) = x[rep.order()[i].mask] * static_cast<double>(rep.order()[i].sign);
  }
  return v;
}

inline Multivector unvec(const Eigen::VectorXcd& v, const RepMatrices& rep) {
  if (static_cast<std::size_t>(v.size()) != rep.dim()) {
    throw Error(ErrorCode::InvalidArgument, "vector length does not match the representation");
  }
  Multivector x(rep.algebra_ptr());
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    x[rep.order()[i].mask] = v(static_cast<Eigen::Index>(i)) * static_cast<double>(rep.order()[i].sign);
  }
  return x;
}

/// D(x) = sum_i x_i C^i, the matrix of left multiplication by x.
inline Eigen::MatrixXcd rep_matrix(const Multivector& x, const RepMatrices& rep) {
  const Eigen::VectorXcd v = vec(x, rep);
  const auto n = static_cast<Eigen::Index>(rep.dim());
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    const std::complex<double> xi = v(static_cast<Eigen::Index>(i));
    if (xi == std::complex<double>{}) continue;
    const MonomialMatrix& c = rep.clifford()[i];
    for (std::size_t j = 0; j < rep.dim(); ++j) {
      if (c.value_of(j) != 0) {
        d(static_cast<Eigen::Index>(c.row_of(j)), static_cast<Eigen::Index>(j)) +=
            xi * static_cast<double>(c.value_of(j));
      }
    }
  }
  return d;
}

enum class GradeOp { Reverse, Involute, Conjugate };

inline Eigen::MatrixXd grade_op_matrix(GradeOp kind, const RepMatrices& rep) {
  Eigen::VectorXd diag(static_cast<Eigen::Index>(rep.dim()));
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    const int g = grade_of(rep.order()[i].mask) % 4;
    bool flip = false;
    switch (kind) {
      case GradeOp::Reverse: flip = g == 2 || g == 3; break;
      case GradeOp::Involute: flip = (g & 1) != 0; break;
      case GradeOp::Conjugate: flip = g == 1 || g == 2; break;
    }
    diag(static_cast<Eigen::Index>(i)) = flip ? -1.0 : 1.0;
  }
  return diag.asDiagonal();
}

/// Solves d * y = n for y through the Clifford representation.
inline Multivector divide(const Multivector& n, const Multivector& d, const Tolerance& tol = {}) {
  n.require_same(d);
  const RepMatrices rep = build_rep(d.algebra_ptr());
  const Eigen::MatrixXcd m = rep_matrix(d, rep);
  const Eigen::VectorXcd rhs = vec(n, rep);
  const Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::NonInvertible, "denominator has no inverse");
  }
  const Eigen::VectorXcd y = lu.solve(rhs);
  const double residual = (m * y - rhs).cwiseAbs().maxCoeff();
  const double scale = m.cwiseAbs().maxCoeff() * y.cwiseAbs().maxCoeff() + rhs.cwiseAbs().maxCoeff();
  if (!tol.is_zero(residual, scale * 1e2)) {
    throw Error(ErrorCode::NonInvertible, "denominator solve is inconsistent");
  }
  return unvec(y, rep);
}

/// Matrix of the (twisted) conjugation x -> U[x] in the representation's
/// blade order, together with the grade partition of that order.
struct ConjugationMatrix {
  Eigen::MatrixXcd A;
  std::vector<std::vector<int>> grade_indices;  // indices of the order per grade
  double off_block_max = 0.0;
};

inline ConjugationMatrix conjugation_matrix(const Versor& u, const RepMatrices& rep) {
  const auto n = static_cast<Eigen::Index>(rep.dim());
  ConjugationMatrix out;
  out.A = Eigen::MatrixXcd::Zero(n, n);
  out.grade_indices.resize(static_cast<std::size_t>(rep.algebra().dim() + 1));
  std::vector<int> grade(rep.dim());
  for (std::size_t j = 0; j < rep.dim(); ++j) {
    out.A.col(static_cast<Eigen::Index>(j)) = vec(sandwich(u, rep.basis_blade(j)), rep);
    grade[j] = grade_of(rep.order()[j].mask);
    out.grade_indices[static_cast<std::size_t>(grade[j])].push_back(static_cast<int>(j));
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (grade[static_cast<std::size_t>(i)] != grade[static_cast<std::size_t>(j)]) {
        out.off_block_max = std::max(out.off_block_max, std::abs(out.A(i, j)));
      }
    }
  }
  const double scale = out.A.cwiseAbs().maxCoeff();
  if (out.off_block_max > 1e-8 * std::max(1.0, scale)) {
    throw Error(ErrorCode::InvalidArgument, "conjugation mixes grades; input is not a versor");
  }
  return out;
}

/// Diagonal blocks of the E(3) conjugation matrix: scalar, planes (4x4),
/// lines (6x6), points (4x4) and pseudoscalar.
struct E3Blocks {
  Eigen::MatrixXcd d1, d2, d3, d4, d5;
};

inline bool is_e3_layout(const RepMatrices& rep) {
  const Algebra& alg = rep.algebra();
  const std::vector<int> expected{0, 1, 1, 1};
  if (!std::equal(alg.squares().begin(), alg.squares().end(), expected.begin(), expected.end()) ||
      alg.first_index() != 0) {
    return false;
  }
  const BladeOrder ref = BladeOrder::parse(alg, kE3BladeOrder);
  for (std::size_t i = 0; i < ref.size(); ++i) {
    if (ref[i].mask != rep.order()[i].mask || ref[i].sign != rep.order()[i].sign) return false;
  }
  return true;
}

inline E3Blocks e3_blocks(const ConjugationMatrix& conj, const RepMatrices& rep) {
  if (!is_e3_layout(rep)) {
    throw Error(ErrorCode::InvalidArgument,
                "E(3) blocks need R(3,0,1) with the blade order " + std::string(kE3BladeOrder));
  }
  const auto& A = conj.A;
  return E3Blocks{A.block(0, 0, 1, 1), A.block(1, 1, 4, 4), A.block(5, 5, 6, 6),
                  A.block(11, 11, 4, 4), A.block(15, 15, 1, 1)};
}

/// Polynomial expressions in the rotor coefficients
/// R = a + b e23 + c e31 + d e12 + e e01 + f e02 + g e03 + h e0123.
struct E3ClosedForm {
  Eigen::Matrix3d rotation;      // R
  Eigen::Vector3d translation;   // t
  Eigen::Vector3d s;             // s = -R^T t
  Eigen::Matrix3d cross;         // T, the cross-product matrix of t
  Eigen::Matrix4d planes;        // [[R, 0], [s^T, 1]]
  Eigen::Matrix<double, 6, 6> lines;  // [[R, 0], [-T R, R]]
  Eigen::Matrix4d points;        // [[R, t], [0, 1]]
};

inline E3ClosedForm e3_closed_form(double a, double b, double c, double d, double e, double f,
                                   double g, double h) {
  E3ClosedForm out;
  auto& R = out.rotation;
  R << a * a + b * b - c * c - d * d, 2 * (a * d + b * c), 2 * (-a * c + b * d),
      2 * (-a * d + b * c), a * a - b * b + c * c - d * d, 2 * (a * b + c * d),
      2 * (a * c + b * d), 2 * (-a * b + c * d), a * a - b * b - c * c + d * d;
  out.translation << 2 * (c * g - a * e - b * h - d * f), 2 * (d * e - a * f - b * g - c * h),
      2 * (b * f - a * g - c * e - d * h);
  out.s << 2 * (c * g + a * e + b * h - d * f), 2 * (d * e + a * f - b * g + c * h),
      2 * (b * f + a * g - c * e + d * h);
  const auto& t = out.translation;
  out.cross << 0, t(2), -t(1), -t(2), 0, t(0), t(1), -t(0), 0;

  out.planes.setZero();
  out.planes.topLeftCorner<3, 3>() = R;
  out.planes.block<1, 3>(3, 0) = out.s.transpose();
  out.planes(3, 3) = 1;

  out.lines.setZero();
  out.lines.topLeftCorner<3, 3>() = R;
  out.lines.bottomLeftCorner<3, 3>() = -out.cross * R;
  out.lines.bottomRightCorner<3, 3>() = R;

  out.points.setZero();
  out.points.topLeftCorner<3, 3>() = R;
  out.points.block<3, 1>(0, 3) = t;
  out.points(3, 3) = 1;
  return out;
}

}  // namespace gradedga
