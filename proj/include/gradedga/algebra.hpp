#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gradedga/error.hpp"

namespace gradedga {

using BladeMask = std::uint32_t;

inline constexpr int kMaxDimension = 12;

namespace detail {
// Generator labels are single characters so that blade names like "e032" stay
// unambiguous up to the dimension cap.
inline constexpr std::string_view kIndexChars = "0123456789abc";
}  // namespace detail

/// Signature of a real Clifford algebra R(p,q,r) together with the ordered
/// list of generator squares and labels.
///
/// The default ordering places null generators first, then positive, then
/// negative ones. Labels start at e0 when the algebra has a null generator
/// (so R(3,0,1) reads e0,e1,e2,e3 with e0 null) and at e1 otherwise.
class Algebra {
 public:
  Algebra(int p, int q, int r = 0) {
    if (p < 0 || q < 0 || r < 0) {
      throw Error(ErrorCode::InvalidArgument, "signature counts must be non-negative");
    }
    std::vector<int> squares;
    squares.insert(squares.end(), static_cast<std::size_t>(r), 0);
    squares.insert(squares.end(), static_cast<std::size_t>(p), 1);
    squares.insert(squares.end(), static_cast<std::size_t>(q), -1);
    init(std::move(squares), r > 0 ? 0 : 1);
  }

  /// Custom generator order. `first_index` is the label of generator 0.
  static Algebra from_squares(std::vector<int> squares, int first_index = 1) {
    Algebra a;
    a.init(std::move(squares), first_index);
    return a;
  }

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int r() const noexcept { return r_; }
  int dim() const noexcept { return static_cast<int>(squares_.size()); }
  std::size_t blade_count() const noexcept { return std::size_t{1} << squares_.size(); }
  int first_index() const noexcept { return first_index_; }

  std::span<const int> squares() const noexcept { return squares_; }
  int square(int i) const { return squares_.at(static_cast<std::size_t>(i)); }
  const std::string& generator_name(int i) const { return names_.at(static_cast<std::size_t>(i)); }

  BladeMask null_mask() const noexcept { return null_mask_; }
  BladeMask negative_mask() const noexcept { return neg_mask_; }

  /// Sign of the product of canonical blades a*b (ascending generator order),
  /// or 0 when a shared generator squares to zero.
  int blade_sign(BladeMask a, BladeMask b) const noexcept {
    const BladeMask common = a & b;
    if (common & null_mask_) return 0;
    int swaps = std::popcount(common & neg_mask_);
    for (BladeMask t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
    return (swaps & 1) ? -1 : 1;
  }

  /// "1" for the scalar, otherwise "e" followed by ascending generator labels.
  std::string blade_name(BladeMask mask) const {
    if (mask == 0) return "1";
    std::string s = "e";
    for (int i = 0; i < dim(); ++i) {
      if (mask & (BladeMask{1} << i)) s += label_char(i);
    }
    return s;
  }

  /// Parses "1", "e1", "e032", ... into the canonical mask and the sign that
  /// relates the written order to the ascending one. Repeated generators are
  /// rejected.
  std::optional<std::pair<BladeMask, int>> parse_blade(std::string_view name) const {
    if (name == "1") return std::pair<BladeMask, int>{0, 1};
    if (name.size() < 2 || name[0] != 'e') return std::nullopt;
    BladeMask mask = 0;
    std::vector<int> idx;
    for (char c : name.substr(1)) {
      const auto pos = detail::kIndexChars.find(c);
      if (pos == std::string_view::npos) return std::nullopt;
      const int g = static_cast<int>(pos) - first_index_;
      if (g < 0 || g >= dim()) return std::nullopt;
      const BladeMask bit = BladeMask{1} << g;
      if (mask & bit) return std::nullopt;
      mask |= bit;
      idx.push_back(g);
    }
    int inversions = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        if (idx[i] > idx[j]) ++inversions;
      }
    }
    return std::pair<BladeMask, int>{mask, (inversions & 1) ? -1 : 1};
  }

  friend bool operator==(const Algebra& a, const Algebra& b) noexcept {
    return a.squares_ == b.squares_ && a.first_index_ == b.first_index_;
  }

 private:
  Algebra() = default;

  char label_char(int i) const {
    return detail::kIndexChars[static_cast<std::size_t>(i + first_index_)];
  }

  void init(std::vector<int> squares, int first_index) {
    if (squares.size() > static_cast<std::size_t>(kMaxDimension)) {
      throw Error(ErrorCode::DimensionCap,
                  "dimension " + std::to_string(squares.size()) + " exceeds cap " +
                      std::to_string(kMaxDimension));
    }
    if (first_index < 0 ||
        first_index + squares.size() > detail::kIndexChars.size()) {
      throw Error(ErrorCode::InvalidArgument, "generator labels out of range");
    }
    p_ = q_ = r_ = 0;
    null_mask_ = neg_mask_ = 0;
    for (std::size_t i = 0; i < squares.size(); ++i) {
      switch (squares[i]) {
        case 1: ++p_; break;
        case -1: ++q_; neg_mask_ |= BladeMask{1} << i; break;
        case 0: ++r_; null_mask_ |= BladeMask{1} << i; break;
        default:
          throw Error(ErrorCode::InvalidArgument, "generator squares must be +1, -1 or 0");
      }
    }
    squares_ = std::move(squares);
    first_index_ = first_index;
    names_.clear();
    for (int i = 0; i < dim(); ++i) names_.push_back(std::string("e") + label_char(i));
  }

  std::vector<int> squares_;
  std::vector<std::string> names_;
  int p_ = 0, q_ = 0, r_ = 0;
  int first_index_ = 1;
  BladeMask null_mask_ = 0;
  BladeMask neg_mask_ = 0;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline AlgebraPtr make_algebra(int p, int q, int r = 0) {
  return std::make_shared<const Algebra>(p, q, r);
}

inline int grade_of(BladeMask mask) noexcept { return std::popcount(mask); }

}  // namespace gradedga
