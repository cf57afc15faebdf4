#ifndef SUBDIVSYM_PERMGROUP_HPP
#define SUBDIVSYM_PERMGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "subdivsym/perm.hpp"
#include "subdivsym/schreier_sims.hpp"

namespace subdivsym {

/// A permutation group given by generators.
///
/// The stabilizer chain is built on first use behind a std::call_once, so
/// concurrent first queries are safe; afterwards the object is read-only.
/// Copies share the cached chain.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}

  PermGroup(std::size_t degree, std::vector<Permutation> generators)
      : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : generators_) {
      if (g.degree() != degree_) {
        throw InvalidArgument("generator of degree " + std::to_string(g.degree()) +
                              " in a group of degree " + std::to_string(degree_));
      }
    }
  }

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  const StabilizerChain& chain() const {
    std::call_once(cache_->once, [this] {
      cache_->chain = std::make_unique<StabilizerChain>(degree_, generators_);
    });
    return *cache_->chain;
  }

  std::uint64_t order() const { return chain().order(); }
  bool contains(const Permutation& g) const { return chain().contains(g); }
  bool is_trivial() const { return order() == 1; }
  Permutation random_element(std::mt19937_64& rng) const { return chain().random_element(rng); }

  /// Chain whose base starts with `prefix`; not cached.
  StabilizerChain chain_with_base(std::span<const Point> prefix) const {
    return StabilizerChain(degree_, generators_, prefix);
  }

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

inline PermGroup from_generators(std::size_t degree, std::vector<Permutation> perms) {
  return PermGroup(degree, std::move(perms));
}

/// Subgroups are compared by order and mutual containment of generators.
inline bool same_group(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Permutation& g) { return b.contains(g); });
}

// ---------------------------------------------------------------------------
// Actions and orbits

struct TupleHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

template <class T>
struct DefaultHash : std::hash<T> {};

template <>
struct DefaultHash<std::vector<Point>> : TupleHash {};

/// A group action on a finite labelled domain.
template <class T>
struct Action {
  std::vector<T> domain;
  std::function<T(const Permutation&, const T&)> apply;
};

/// Points: x -> x^g.
struct PointAction {
  Point operator()(const Permutation& g, Point x) const { return g[x]; }
};

/// Ordered tuples, coordinatewise.
struct TupleAction {
  std::vector<Point> operator()(const Permutation& g, const std::vector<Point>& t) const {
    std::vector<Point> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = g[t[i]];
    return out;
  }
};

/// Sets stored as sorted tuples (unordered pairs in particular).
struct SetAction {
  std::vector<Point> operator()(const Permutation& g, const std::vector<Point>& t) const {
    auto out = TupleAction{}(g, t);
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Orbit of x under the group generated by `generators`, in BFS order.
template <class T, class Apply, class Hash = DefaultHash<T>>
std::vector<T> orbit(std::span<const Permutation> generators, const T& x, Apply apply) {
  std::vector<T> out{x};
  std::unordered_set<T, Hash> seen{x};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators) {
      T y = apply(g, out[head]);
      if (seen.insert(y).second) out.push_back(std::move(y));
    }
  }
  return out;
}

template <class T>
std::vector<T> orbit(const PermGroup& group, const T& x, const Action<T>& action) {
  return orbit<T>(std::span<const Permutation>(group.generators()), x, action.apply);
}

inline std::vector<Point> orbit(const PermGroup& group, Point x) {
  if (x >= group.degree()) throw InvalidArgument("point out of range");
  return orbit<Point>(std::span<const Permutation>(group.generators()), x, PointAction{});
}

/// Partition of `domain` into orbits; each orbit keeps BFS order, orbits
/// are listed by first occurrence in `domain`.
template <class T, class Apply, class Hash = DefaultHash<T>>
std::vector<std::vector<T>> orbit_partition(std::span<const Permutation> generators,
                                            const std::vector<T>& domain, Apply apply) {
  std::unordered_map<T, bool, Hash> assigned;
  for (const auto& x : domain) assigned.emplace(x, false);
  std::vector<std::vector<T>> parts;
  for (const auto& x : domain) {
    if (assigned[x]) continue;
    auto part = orbit<T, Apply, Hash>(generators, x, apply);
    for (const auto& y : part) assigned[y] = true;
    parts.push_back(std::move(part));
  }
  return parts;
}

/// Orbits on points 0..degree-1, each sorted, ordered by smallest point.
inline std::vector<std::vector<Point>> point_orbits(const PermGroup& group) {
  std::vector<Point> domain(group.degree());
  for (Point p = 0; p < group.degree(); ++p) domain[p] = p;
  auto parts = orbit_partition<Point>(std::span<const Permutation>(group.generators()), domain,
                                      PointAction{});
  for (auto& part : parts) std::sort(part.begin(), part.end());
  return parts;
}

inline bool is_transitive(const PermGroup& group) {
  return group.degree() <= 1 || orbit(group, Point{0}).size() == group.degree();
}

// ---------------------------------------------------------------------------
// Stabilizers

/// Pointwise stabilizer of `points`, generated by the strong generators of
/// a chain whose base begins with them.
inline PermGroup stabilizer_points(const PermGroup& group, std::span<const Point> points) {
  auto chain = group.chain_with_base(points);
  return PermGroup(group.degree(), chain.stabilizer_generators(points.size()));
}

inline PermGroup stabilizer_point(const PermGroup& group, Point v) {
  if (v >= group.degree()) throw InvalidArgument("point out of range");
  const Point prefix[] = {v};
  return stabilizer_points(group, prefix);
}

/// Setwise stabilizer of the pair {u,v}: the two-point stabilizer G_(u,v)
/// plus one element swapping u and v if the group has one.
///
/// With a chain on base (u, v, ...), g = h t swaps the pair when t maps u to
/// v (first-level transversal) and h in G_u maps v to u^(t^-1) (second level).
inline PermGroup stabilizer_edge(const PermGroup& group, Point u, Point v) {
  if (u >= group.degree() || v >= group.degree() || u == v) {
    throw InvalidArgument("stabilizer_edge needs two distinct points in range");
  }
  const Point prefix[] = {u, v};
  auto chain = group.chain_with_base(prefix);
  auto generators = chain.stabilizer_generators(2);
  const auto& first = chain.levels()[0];
  const auto& second = chain.levels()[1];
  if (first.in_orbit(v)) {
    const Permutation& t = first.rep(v);
    const Point target = first.rep_inverse(v)[u];
    if (second.in_orbit(target)) generators.push_back(second.rep(target) * t);
  }
  return PermGroup(group.degree(), std::move(generators));
}

// ---------------------------------------------------------------------------
// Derived constructions

/// Commutator subgroup: normal closure of the generator commutators.
inline PermGroup derived_subgroup(const PermGroup& group) {
  const auto& gens = group.generators();
  std::vector<Permutation> normal_gens;
  PermGroup current = PermGroup::trivial(group.degree());
  auto absorb = [&](const Permutation& c) {
    if (c.is_identity() || current.contains(c)) return;
    normal_gens.push_back(c);
    current = PermGroup(group.degree(), normal_gens);
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) absorb(commutator(gens[i], gens[j]));
  }
  for (std::size_t k = 0; k < normal_gens.size(); ++k) {
    for (const auto& g : gens) absorb(g.inverse() * normal_gens[k] * g);
  }
  return current;
}

/// Falling factorial n (n-1) ... (n-k+1).
inline std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out *= (n - i);
  return out;
}

/// k-transitivity on all points: one orbit on ordered k-tuples of
/// distinct points.
inline bool is_k_transitive(const PermGroup& group, std::size_t k) {
  const auto n = group.degree();
  if (k > n) return false;
  if (k == 0) return true;
  std::vector<Point> start(k);
  for (Point i = 0; i < k; ++i) start[i] = i;
  const auto tuples =
      orbit<std::vector<Point>>(std::span<const Permutation>(group.generators()), start,
                                TupleAction{});
  return tuples.size() == falling_factorial(n, k);
}

/// The trivial group, the group itself, then `count` subgroups each
/// generated by 1-3 random elements. Deterministic in `seed`.
inline std::vector<PermGroup> random_subgroups(const PermGroup& group, std::size_t count,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PermGroup> out{PermGroup::trivial(group.degree()), group};
  for (std::size_t i = 0; i < count; ++i) {
    const auto k = 1 + uniform_below(rng, 3);
    std::vector<Permutation> gens;
    for (std::uint64_t j = 0; j < k; ++j) gens.push_back(group.random_element(rng));
    out.emplace_back(group.degree(), std::move(gens));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named groups

inline PermGroup symmetric_group(std::size_t n) {
  if (n < 2) return PermGroup::trivial(n);
  std::vector<Point> cycle(n);
  for (Point i = 0; i < n; ++i) cycle[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_images(cycle)});
}

/// Generated by the 3-cycles (0 1 i).
inline PermGroup alternating_group(std::size_t n) {
  if (n < 3) return PermGroup::trivial(n);
  std::vector<Permutation> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return PermGroup(n, std::move(gens));
}

/// Rotations of C_n: x -> x+1.
inline PermGroup cyclic_rotation_group(std::size_t n) {
  if (n < 1) throw InvalidArgument("cyclic group needs n >= 1");
  std::vector<Point> rotation(n);
  for (Point i = 0; i < n; ++i) rotation[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Permutation::from_images(rotation)});
}

/// D_{2n} on the cycle ids: x -> x+1 and x -> -x.
inline PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw InvalidArgument("dihedral group needs n >= 3");
  std::vector<Point> rotation(n), reflection(n);
  for (Point i = 0; i < n; ++i) {
    rotation[i] = static_cast<Point>((i + 1) % n);
    reflection[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {Permutation::from_images(rotation), Permutation::from_images(reflection)});
}

/// For even n: the index-2 dihedral subgroup of D_{2n} generated by
/// x -> x+2 and x -> 1-x. It has two orbits on the edges of C_n and every
/// edge stabilizer swaps the edge's endpoints.
inline PermGroup half_dihedral_group(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("half dihedral group needs even n >= 4");
  std::vector<Point> rotation(n), reflection(n);
  for (Point i = 0; i < n; ++i) {
    rotation[i] = static_cast<Point>((i + 2) % n);
    reflection[i] = static_cast<Point>((n + 1 - i) % n);
  }
  return PermGroup(n, {Permutation::from_images(rotation), Permutation::from_images(reflection)});
}

/// S_n x S_n on {0..n-1} and {n..2n-1}, no swap of the halves.
inline PermGroup direct_product_symmetric(std::size_t n) {
  std::vector<Permutation> gens;
  const PermGroup factor = symmetric_group(n);
  for (const auto& g : factor.generators()) {
    std::vector<Point> left(2 * n), right(2 * n);
    for (Point i = 0; i < n; ++i) {
      left[i] = g[i];
      left[n + i] = static_cast<Point>(n + i);
      right[i] = i;
      right[n + i] = static_cast<Point>(n + g[i]);
    }
    gens.push_back(Permutation::from_images(left));
    gens.push_back(Permutation::from_images(right));
  }
  return PermGroup(2 * n, std::move(gens));
}

/// S_n wr S_2 on 2n points: S_n on the first half plus the swap i <-> n+i.
inline PermGroup wreath_symmetric_s2(std::size_t n) {
  std::vector<Permutation> gens;
  const PermGroup factor = symmetric_group(n);
  for (const auto& g : factor.generators()) {
    std::vector<Point> left(2 * n);
    for (Point i = 0; i < n; ++i) {
      left[i] = g[i];
      left[n + i] = static_cast<Point>(n + i);
    }
    gens.push_back(Permutation::from_images(left));
  }
  std::vector<Point> swap(2 * n);
  for (Point i = 0; i < n; ++i) {
    swap[i] = static_cast<Point>(n + i);
    swap[n + i] = i;
  }
  gens.push_back(Permutation::from_images(swap));
  return PermGroup(2 * n, std::move(gens));
}

}  // namespace subdivsym

#endif  // SUBDIVSYM_PERMGROUP_HPP
