#ifndef SUBDIVSYM_METRICS_HPP
#define SUBDIVSYM_METRICS_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "subdivsym/graph.hpp"

namespace subdivsym {

using Distance = std::uint32_t;
inline constexpr Distance kInfinite = std::numeric_limits<Distance>::max();

/// Hop distances from `source`; unreachable vertices get kInfinite.
inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<Distance> dist(g.order(), kInfinite);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kInfinite) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// All-pairs hop distances, one BFS per vertex.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  explicit DistanceMatrix(const Graph& g) : n_(g.order()), data_(n_ * n_, kInfinite) {
    for (Vertex v = 0; v < n_; ++v) {
      auto row = bfs_distances(g, v);
      std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(v * n_));
    }
  }

  std::size_t order() const noexcept { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return data_[u * n_ + v]; }

  bool connected() const {
    return std::none_of(data_.begin(), data_.end(), [](Distance d) { return d == kInfinite; });
  }

  /// Largest finite distance; throws DisconnectedGraph if any pair is unreachable.
  Distance diameter() const {
    if (!connected()) throw DisconnectedGraph("diameter is undefined for a disconnected graph");
    return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
  }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](Distance d) { return d == kInfinite; });
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> seen(g.order(), false);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> component{root};
    seen[root] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (Vertex w : g.neighbors(component[head])) {
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

inline Distance eccentricity(const Graph& g, Vertex v) {
  auto dist = bfs_distances(g, v);
  if (std::any_of(dist.begin(), dist.end(), [](Distance d) { return d == kInfinite; })) {
    throw DisconnectedGraph("eccentricity is undefined for a disconnected graph");
  }
  return *std::max_element(dist.begin(), dist.end());
}

inline Distance diameter(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("diameter is undefined for a disconnected graph");
  Distance best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

/// Length of a shortest cycle, or nullopt when the graph is acyclic.
///
/// BFS from every root; a non-tree edge {u,w} closes a cycle of length at
/// most dist(u)+dist(w)+1, with equality for the root on a shortest cycle.
inline std::optional<std::size_t> girth(const Graph& g) {
  std::optional<std::size_t> best;
  std::vector<Distance> dist(g.order());
  std::vector<Vertex> parent(g.order());
  for (Vertex root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), kInfinite);
    dist[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (best && 2 * static_cast<std::size_t>(dist[u]) >= *best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kInfinite) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          const std::size_t cycle = static_cast<std::size_t>(dist[u]) + dist[w] + 1;
          if (!best || cycle < *best) best = cycle;
        }
      }
    }
  }
  return best;
}

/// The two colour classes of a proper 2-colouring, the class of vertex 0
/// first. nullopt if the graph is not bipartite or has fewer than 2 vertices.
inline std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition(
    const Graph& g) {
  if (g.order() < 2) return std::nullopt;
  std::vector<int> colour(g.order(), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<Vertex>, std::vector<Vertex>> parts;
  for (Vertex v = 0; v < g.order(); ++v) {
    (colour[v] == 0 ? parts.first : parts.second).push_back(v);
  }
  if (parts.second.empty()) return std::nullopt;
  return parts;
}

struct Metrics {
  Distance diameter = 0;
  std::optional<std::size_t> girth;  // nullopt: acyclic
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition;
};

/// Throws DisconnectedGraph for disconnected input.
inline Metrics metrics(const Graph& g) {
  Metrics m;
  m.diameter = diameter(g);
  m.girth = girth(g);
  m.bipartition = bipartition(g);
  return m;
}

/// Sorted list of vertices at distance exactly i from v.
inline std::vector<Vertex> distance_sphere(const Graph& g, Vertex v, Distance i) {
  auto dist = bfs_distances(g, v);
  std::vector<Vertex> sphere;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (dist[w] == i) sphere.push_back(w);
  }
  return sphere;
}

}  // namespace subdivsym

#endif  // SUBDIVSYM_METRICS_HPP
