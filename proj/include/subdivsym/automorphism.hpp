#ifndef SUBDIVSYM_AUTOMORPHISM_HPP
#define SUBDIVSYM_AUTOMORPHISM_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "subdivsym/constructions.hpp"
#include "subdivsym/graph.hpp"
#include "subdivsym/metrics.hpp"
#include "subdivsym/permgroup.hpp"

namespace subdivsym {

struct AutomorphismOptions {
  /// Search-tree nodes allowed before BudgetExceeded is thrown.
  std::size_t node_budget = 20'000'000;
};

namespace detail {

/// Individualization-refinement search for generators of Aut(g).
///
/// The first path of the search tree fixes a base b_0..b_{k-1}. Working
/// from the deepest level up, for each vertex w of the target cell at
/// depth i that is not yet in the orbit of b_i under the generators found
/// so far, the subtree rooted at "individualize w" is searched for a leaf
/// isomorphic to the first leaf. Every generator found at depth i fixes
/// b_0..b_{i-1}, so the generators collected form a strong generating set
/// relative to the base.
class RefinementSearch {
 public:
  using Colouring = std::vector<std::uint32_t>;

  RefinementSearch(const Graph& g, const AutomorphismOptions& options)
      : graph_(g), budget_(options.node_budget) {}

  std::vector<Permutation> run() {
    const std::size_t n = graph_.order();
    if (n <= 1) return {};
    path_.push_back(refine(Colouring(n, 0)));
    while (!discrete(path_.back())) {
      const auto cell = target_cell(path_.back());
      targets_.push_back(cell);
      base_.push_back(cell.front());
      sizes_.push_back(cell_sizes(path_.back()));
      path_.push_back(refine(individualize(path_.back(), cell.front())));
    }
    sizes_.push_back(cell_sizes(path_.back()));
    first_leaf_ = leaf_order(path_.back());

    std::vector<Permutation> generators;
    for (std::size_t level = base_.size(); level-- > 0;) {
      auto reached = orbit_mask(generators, base_[level]);
      for (Vertex w : targets_[level]) {
        if (reached[w]) continue;
        auto found = explore(refine(individualize(path_[level], w)), level + 1, level, w);
        if (found) {
          generators.push_back(std::move(*found));
          reached = orbit_mask(generators, base_[level]);
        }
      }
    }
    return generators;
  }

  std::size_t nodes_visited() const noexcept { return nodes_; }

 private:
  std::vector<bool> orbit_mask(const std::vector<Permutation>& gens, Vertex root) const {
    std::vector<bool> mask(graph_.order(), false);
    for (Point p : orbit<Point>(std::span<const Permutation>(gens), root, PointAction{})) {
      mask[p] = true;
    }
    return mask;
  }

  std::optional<Permutation> explore(const Colouring& c, std::size_t depth, std::size_t level,
                                     Vertex target) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("automorphism search exceeded " + std::to_string(budget_) +
                           " nodes");
    }
    if (depth >= sizes_.size() || cell_sizes(c) != sizes_[depth]) return std::nullopt;
    if (discrete(c)) {
      const auto leaf = leaf_order(c);
      std::vector<Point> images(graph_.order());
      for (std::size_t k = 0; k < leaf.size(); ++k) images[first_leaf_[k]] = leaf[k];
      for (std::size_t i = 0; i < level; ++i) {
        if (images[base_[i]] != base_[i]) return std::nullopt;
      }
      if (images[base_[level]] != target) return std::nullopt;
      auto candidate = Permutation::from_images(std::move(images));
      for (const auto& [u, v] : graph_.edges()) {
        if (!graph_.adjacent(candidate[u], candidate[v])) return std::nullopt;
      }
      return candidate;
    }
    for (Vertex w : target_cell(c)) {
      auto found = explore(refine(individualize(c, w)), depth + 1, level, target);
      if (found) return found;
    }
    return std::nullopt;
  }

  // The helpers below are shared with IsomorphismSearch.
 public:
  /// Colour refinement to the coarsest equitable colouring finer than c.
  /// New colours are ranks of (old colour, sorted neighbour colours), so the
  /// result commutes with relabelling the vertices.
  Colouring refine(Colouring c) const {
    const std::size_t n = graph_.order();
    std::size_t classes = count_classes(c);
    std::vector<std::vector<std::uint32_t>> signature(n);
    std::vector<Vertex> order(n);
    while (true) {
      for (Vertex v = 0; v < n; ++v) {
        auto& sig = signature[v];
        sig.clear();
        sig.push_back(c[v]);
        for (Vertex w : graph_.neighbors(v)) sig.push_back(c[w]);
        std::sort(sig.begin() + 1, sig.end());
      }
      std::iota(order.begin(), order.end(), Vertex{0});
      std::sort(order.begin(), order.end(),
                [&](Vertex a, Vertex b) { return signature[a] < signature[b]; });
      Colouring next(n);
      std::uint32_t colour = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && signature[order[i]] != signature[order[i - 1]]) ++colour;
        next[order[i]] = colour;
      }
      const std::size_t next_classes = static_cast<std::size_t>(colour) + 1;
      c = std::move(next);
      if (next_classes == classes) return c;
      classes = next_classes;
    }
  }

  /// Splits v's cell into {v, also} and the rest; `also` defaults to v.
  static Colouring individualize(const Colouring& c, Vertex v, std::optional<Vertex> also = {}) {
    const Vertex u = also.value_or(v);
    std::vector<std::uint64_t> key(c.size());
    for (std::size_t w = 0; w < c.size(); ++w) {
      key[w] = 2 * static_cast<std::uint64_t>(c[w]) + ((c[w] == c[v] && w != v && w != u) ? 1 : 0);
    }
    auto sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Colouring out(c.size());
    for (std::size_t w = 0; w < c.size(); ++w) {
      out[w] = static_cast<std::uint32_t>(
          std::lower_bound(sorted.begin(), sorted.end(), key[w]) - sorted.begin());
    }
    return out;
  }

  static std::size_t count_classes(const Colouring& c) {
    if (c.empty()) return 0;
    return static_cast<std::size_t>(*std::max_element(c.begin(), c.end())) + 1;
  }

  static bool discrete(const Colouring& c) { return count_classes(c) == c.size(); }

  static std::vector<std::size_t> cell_sizes(const Colouring& c) {
    std::vector<std::size_t> sizes(count_classes(c), 0);
    for (auto colour : c) ++sizes[colour];
    return sizes;
  }

  /// Vertices of the smallest non-singleton cell (lowest colour on ties).
  static std::vector<Vertex> target_cell(const Colouring& c) {
    const auto sizes = cell_sizes(c);
    std::optional<std::uint32_t> best;
    for (std::uint32_t k = 0; k < sizes.size(); ++k) {
      if (sizes[k] > 1 && (!best || sizes[k] < sizes[*best])) best = k;
    }
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < c.size(); ++v) {
      if (c[v] == *best) cell.push_back(v);
    }
    return cell;
  }

  static std::vector<Vertex> leaf_order(const Colouring& c) {
    std::vector<Vertex> at(c.size());
    for (Vertex v = 0; v < c.size(); ++v) at[c[v]] = v;
    return at;
  }

 private:
  const Graph& graph_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<Colouring> path_;
  std::vector<Vertex> base_;
  std::vector<std::vector<Vertex>> targets_;
  std::vector<std::vector<std::size_t>> sizes_;
  std::vector<Vertex> first_leaf_;
};

}  // namespace detail

/// Aut(g) as a permutation group on the vertex ids.
/// Throws BudgetExceeded if the search tree grows past the node budget.
inline PermGroup automorphism_group(const Graph& g, const AutomorphismOptions& options = {}) {
  detail::RefinementSearch search(g, options);
  return PermGroup(g.order(), search.run());
}

namespace detail {

/// Isomorphism search on the disjoint union A + B (A first). A vertex of A
/// and a candidate image in B are individualized together; a branch dies as
/// soon as some cell holds different numbers of A- and B-vertices.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b, const AutomorphismOptions& options)
      : n_(a.order()), a_(a), b_(b), both_(disjoint_union(a, b)), refiner_(both_, options),
        budget_(options.node_budget) {}

  std::optional<Permutation> run() {
    return explore(refiner_.refine(RefinementSearch::Colouring(2 * n_, 0)));
  }

 private:
  std::optional<Permutation> explore(const RefinementSearch::Colouring& c) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("isomorphism search exceeded " + std::to_string(budget_) + " nodes");
    }
    const auto classes = RefinementSearch::cell_sizes(c).size();
    std::vector<std::int64_t> balance(classes, 0);
    for (std::size_t v = 0; v < 2 * n_; ++v) balance[c[v]] += v < n_ ? 1 : -1;
    if (std::any_of(balance.begin(), balance.end(), [](std::int64_t x) { return x != 0; })) {
      return std::nullopt;
    }
    if (classes == n_) {
      std::vector<Vertex> in_b(classes);
      for (std::size_t v = n_; v < 2 * n_; ++v) in_b[c[v]] = static_cast<Vertex>(v - n_);
      std::vector<Point> images(n_);
      for (std::size_t v = 0; v < n_; ++v) images[v] = in_b[c[v]];
      auto map = Permutation::from_images(std::move(images));
      for (const auto& [u, v] : a_.edges()) {
        if (!b_.adjacent(map[u], map[v])) return std::nullopt;
      }
      return map;
    }
    // Smallest cell with more than one A-vertex, lowest colour on ties.
    std::vector<std::size_t> count(classes, 0);
    for (std::size_t v = 0; v < n_; ++v) ++count[c[v]];
    std::optional<std::uint32_t> cell;
    for (std::uint32_t k = 0; k < classes; ++k) {
      if (count[k] > 1 && (!cell || count[k] < count[*cell])) cell = k;
    }
    Vertex x = 0;
    while (c[x] != *cell) ++x;
    for (auto y = static_cast<Vertex>(n_); y < 2 * n_; ++y) {
      if (c[y] != *cell) continue;
      auto found = explore(refiner_.refine(RefinementSearch::individualize(c, x, y)));
      if (found) return found;
    }
    return std::nullopt;
  }

  std::size_t n_;
  const Graph& a_;
  const Graph& b_;
  Graph both_;
  RefinementSearch refiner_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// An isomorphism a -> b as a vertex map, or nullopt.
inline std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b,
                                                   const AutomorphismOptions& options = {}) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (a.order() == 0) return Permutation::identity(0);
  return detail::IsomorphismSearch(a, b, options).run();
}

inline bool is_isomorphic(const Graph& a, const Graph& b, const AutomorphismOptions& options = {}) {
  return find_isomorphism(a, b, options).has_value();
}

}  // namespace subdivsym

#endif  // SUBDIVSYM_AUTOMORPHISM_HPP
