#ifndef SUBDIVSYM_PROJECTIVE_LINE_HPP
#define SUBDIVSYM_PROJECTIVE_LINE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "subdivsym/permgroup.hpp"

namespace subdivsym {

/// GF(8) as GF(2)[x]/(x^3 + x + 1); an element is its 3-bit coefficient
/// vector, bit i holding the coefficient of x^i.
namespace gf8 {

inline constexpr std::uint8_t kModulus = 0b1011;
/// x itself; it generates the multiplicative group since 7 is prime.
inline constexpr std::uint8_t kPrimitive = 0b010;

constexpr std::uint8_t add(std::uint8_t a, std::uint8_t b) { return a ^ b; }

constexpr std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t product = 0;
  for (int i = 0; i < 3; ++i) {
    if (b & (1u << i)) product ^= static_cast<std::uint8_t>(a << i);
  }
  for (int bit = 4; bit >= 3; --bit) {
    if (product & (1u << bit)) product ^= static_cast<std::uint8_t>(kModulus << (bit - 3));
  }
  return product;
}

constexpr std::uint8_t inv(std::uint8_t a) {
  for (std::uint8_t b = 1; b < 8; ++b) {
    if (mul(a, b) == 1) return b;
  }
  return 0;  // 0 has no inverse
}

}  // namespace gf8

/// Points of PG(1,8): label 0 is infinity, label 1+a is the field element a.
inline constexpr Point kProjectiveInfinity = 0;
inline constexpr Point projective_point(std::uint8_t a) { return static_cast<Point>(1 + a); }

namespace detail {

template <class Map>
Permutation projective_map(Map map) {
  std::vector<Point> images(9);
  for (Point p = 0; p < 9; ++p) images[p] = map(p);
  return Permutation::from_images(std::move(images));
}

inline Permutation translation_by_one() {
  return projective_map([](Point p) {
    if (p == kProjectiveInfinity) return p;
    return projective_point(gf8::add(static_cast<std::uint8_t>(p - 1), 1));
  });
}

inline Permutation scaling_by_primitive() {
  return projective_map([](Point p) {
    if (p == kProjectiveInfinity) return p;
    return projective_point(gf8::mul(static_cast<std::uint8_t>(p - 1), gf8::kPrimitive));
  });
}

inline Permutation inversion() {
  return projective_map([](Point p) {
    if (p == kProjectiveInfinity) return projective_point(0);
    if (p == projective_point(0)) return kProjectiveInfinity;
    return projective_point(gf8::inv(static_cast<std::uint8_t>(p - 1)));
  });
}

inline Permutation frobenius() {
  return projective_map([](Point p) {
    if (p == kProjectiveInfinity) return p;
    const auto a = static_cast<std::uint8_t>(p - 1);
    return projective_point(gf8::mul(a, a));
  });
}

}  // namespace detail

/// PGL(2,8) = PSL(2,8) on the 9 points of PG(1,8), order 504: generated by
/// x -> x+1, x -> ax (a primitive) and x -> 1/x.
inline PermGroup pgl_2_8() {
  PermGroup g(9, {detail::translation_by_one(), detail::scaling_by_primitive(),
                  detail::inversion()});
  if (g.order() != 504) throw std::logic_error("PGL(2,8) construction has wrong order");
  return g;
}

/// PGammaL(2,8): PGL(2,8) extended by the Frobenius x -> x^2, order 1512.
inline PermGroup pgammal_2_8() {
  PermGroup g(9, {detail::translation_by_one(), detail::scaling_by_primitive(),
                  detail::inversion(), detail::frobenius()});
  if (g.order() != 1512) throw std::logic_error("PGammaL(2,8) construction has wrong order");
  return g;
}

}  // namespace subdivsym

#endif  // SUBDIVSYM_PROJECTIVE_LINE_HPP
