#ifndef SUBDIVSYM_PERM_HPP
#define SUBDIVSYM_PERM_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "subdivsym/error.hpp"

namespace subdivsym {

using Point = std::uint32_t;

/// A permutation of 0..degree-1, acting on the right: x^(ab) = (x^a)^b.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    for (Point i = 0; i < degree; ++i) p.images_[i] = i;
    return p;
  }

  /// Throws InvalidArgument unless `images` is a bijection on 0..size-1.
  static Permutation from_images(std::vector<Point> images) {
    std::vector<bool> hit(images.size(), false);
    for (Point x : images) {
      if (x >= images.size() || hit[x]) {
        throw InvalidArgument("image list is not a permutation of 0.." +
                              std::to_string(images.size() == 0 ? 0 : images.size() - 1));
      }
      hit[x] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Product of disjoint or overlapping cycles, applied left to right.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles) {
    Permutation result = identity(degree);
    for (const auto& cycle : cycles) {
      std::vector<Point> c(cycle);
      Permutation step = identity(degree);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= degree) throw InvalidArgument("cycle point out of range");
        step.images_[c[i]] = c[(i + 1) % c.size()];
      }
      result = result * Permutation::from_images(step.images_);
    }
    return result;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const {
    for (Point i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  /// Smallest point moved, or degree() for the identity.
  Point first_moved() const {
    for (Point i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return i;
    }
    return static_cast<Point>(images_.size());
  }

  Permutation inverse() const {
    Permutation inv;
    inv.images_.resize(images_.size());
    for (Point i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = i;
    return inv;
  }

  /// Apply *this first, then rhs.
  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
    if (lhs.degree() != rhs.degree()) throw InvalidArgument("degree mismatch in product");
    Permutation out;
    out.images_.resize(lhs.images_.size());
    for (Point i = 0; i < lhs.images_.size(); ++i) out.images_[i] = rhs.images_[lhs.images_[i]];
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Cycle notation, "()" for the identity.
  std::string to_string() const {
    std::ostringstream out;
    std::vector<bool> seen(images_.size(), false);
    for (Point i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out << '(';
      Point j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        out << (first ? "" : " ") << j;
        first = false;
        j = images_[j];
      }
      out << ')';
    }
    const auto text = out.str();
    return text.empty() ? "()" : text;
  }

 private:
  std::vector<Point> images_;
};

/// a^-1 b^-1 a b
inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace subdivsym

#endif  // SUBDIVSYM_PERM_HPP
