#ifndef SUBDIVSYM_SCHREIER_SIMS_HPP
#define SUBDIVSYM_SCHREIER_SIMS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "subdivsym/constructions.hpp"
#include "subdivsym/perm.hpp"

namespace subdivsym {

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Level i has base point b_i, the strong generators fixing b_0..b_{i-1},
/// the fundamental orbit of b_i under them, and explicit transversal
/// elements u_p with b_i^(u_p) = p.
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // per point: index into transversal, or -1
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;

    bool in_orbit(Point p) const { return slot[p] >= 0; }
    const Permutation& rep(Point p) const { return transversal[static_cast<std::size_t>(slot[p])]; }
    const Permutation& rep_inverse(Point p) const {
      return inverse_transversal[static_cast<std::size_t>(slot[p])];
    }
  };

  StabilizerChain() = default;

  /// `base_prefix` points become the first base points, in order, even if
  /// the group fixes them.
  StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators,
                  std::span<const Point> base_prefix = {})
      : degree_(degree) {
    std::vector<Permutation> gens;
    for (const auto& g : generators) {
      if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
      if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) {
        gens.push_back(g);
      }
    }
    for (Point b : base_prefix) {
      if (b >= degree) throw InvalidArgument("base point out of range");
      if (std::any_of(levels_.begin(), levels_.end(), [b](const Level& l) { return l.base == b; })) {
        throw InvalidArgument("repeated base point");
      }
      levels_.push_back(Level{b, {}, {}, {}, {}, {}});
    }
    orbit_size_ = point_orbit_sizes(gens);
    for (const auto& g : gens) {
      if (fixes_base(g)) levels_.push_back(Level{choose_base_point(g), {}, {}, {}, {}, {}});
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      for (const auto& g : gens) {
        if (fixes_prefix(g, i)) levels_[i].generators.push_back(g);
      }
      rebuild_orbit(i);
    }
    run();
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  std::vector<Point> base() const {
    std::vector<Point> out;
    for (const auto& l : levels_) out.push_back(l.base);
    return out;
  }

  /// Product of fundamental orbit lengths. Throws if it overflows 64 bits.
  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (const auto& l : levels_) {
      if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(l.orbit.size()), &result)) {
        throw Error("group order exceeds 64 bits");
      }
    }
    return result;
  }

  /// Strips g through levels [start, end). Returns the residue and the level
  /// where sifting stopped (levels().size() if it went all the way).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start = 0) const {
    for (std::size_t i = start; i < levels_.size(); ++i) {
      const Point p = g[levels_[i].base];
      if (!levels_[i].in_orbit(p)) return {std::move(g), i};
      g = g * levels_[i].rep_inverse(p);
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    auto [residue, level] = sift(g);
    return level == levels_.size() && residue.is_identity();
  }

  /// Uniformly random element: product of one random coset representative
  /// per level, deepest level first.
  Permutation random_element(std::mt19937_64& rng) const {
    Permutation g = Permutation::identity(degree_);
    for (std::size_t i = levels_.size(); i-- > 0;) {
      const auto& l = levels_[i];
      g = g * l.transversal[uniform_below(rng, l.transversal.size())];
    }
    return g;
  }

  /// Strong generators of the pointwise stabilizer of the first k base
  /// points.
  std::vector<Permutation> stabilizer_generators(std::size_t k) const {
    if (k < levels_.size()) return levels_[k].generators;
    return {};
  }

 private:
  bool fixes_prefix(const Permutation& g, std::size_t count) const {
    for (std::size_t i = 0; i < count; ++i) {
      if (g[levels_[i].base] != levels_[i].base) return false;
    }
    return true;
  }

  bool fixes_base(const Permutation& g) const { return fixes_prefix(g, levels_.size()); }

  std::vector<std::size_t> point_orbit_sizes(const std::vector<Permutation>& gens) const {
    std::vector<std::size_t> size(degree_, 0);
    std::vector<std::int64_t> component(degree_, -1);
    for (Point root = 0; root < degree_; ++root) {
      if (component[root] >= 0) continue;
      std::vector<Point> members{root};
      component[root] = root;
      for (std::size_t head = 0; head < members.size(); ++head) {
        for (const auto& g : gens) {
          const Point q = g[members[head]];
          if (component[q] < 0) {
            component[q] = root;
            members.push_back(q);
          }
        }
      }
      for (Point p : members) size[p] = members.size();
    }
    return size;
  }

  /// A point moved by g, preferring the largest orbit of the whole group.
  Point choose_base_point(const Permutation& g) const {
    Point best = static_cast<Point>(degree_);
    for (Point p = 0; p < degree_; ++p) {
      if (g[p] == p) continue;
      if (best == degree_ || orbit_size_[p] > orbit_size_[best]) best = p;
    }
    return best;
  }

  void rebuild_orbit(std::size_t i) {
    auto& l = levels_[i];
    l.orbit.assign(1, l.base);
    l.slot.assign(degree_, -1);
    l.transversal.assign(1, Permutation::identity(degree_));
    l.inverse_transversal.assign(1, Permutation::identity(degree_));
    l.slot[l.base] = 0;
    for (std::size_t head = 0; head < l.orbit.size(); ++head) {
      const Point p = l.orbit[head];
      for (const auto& s : l.generators) {
        const Point q = s[p];
        if (l.slot[q] >= 0) continue;
        l.slot[q] = static_cast<std::int32_t>(l.transversal.size());
        Permutation u = l.rep(p) * s;
        l.inverse_transversal.push_back(u.inverse());
        l.transversal.push_back(std::move(u));
        l.orbit.push_back(q);
      }
    }
  }

  void run() {
    std::size_t i = levels_.size();
    while (i-- > 0) {
      bool restarted = false;
      for (std::size_t oi = 0; !restarted && oi < levels_[i].orbit.size(); ++oi) {
        const Point p = levels_[i].orbit[oi];
        for (std::size_t si = 0; si < levels_[i].generators.size(); ++si) {
          const Point q = levels_[i].generators[si][p];
          Permutation schreier =
              levels_[i].rep(p) * levels_[i].generators[si] * levels_[i].rep_inverse(q);
          if (schreier.is_identity()) continue;
          auto [residue, stop] = sift(std::move(schreier), i + 1);
          if (stop == levels_.size() && residue.is_identity()) continue;
          if (stop == levels_.size()) {
            levels_.push_back(Level{choose_base_point(residue), {}, {}, {}, {}, {}});
          }
          for (std::size_t l = i + 1; l <= stop; ++l) {
            levels_[l].generators.push_back(residue);
            rebuild_orbit(l);
          }
          i = stop + 1;  // the loop decrement resumes at level `stop`
          restarted = true;
          break;
        }
      }
    }
  }

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
  std::vector<std::size_t> orbit_size_;
};

}  // namespace subdivsym

#endif  // SUBDIVSYM_SCHREIER_SIMS_HPP
