#ifndef SUBDIVSYM_GRAPH_HPP
#define SUBDIVSYM_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subdivsym/error.hpp"

namespace subdivsym {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Immutable simple undirected graph on vertex ids 0..order()-1.
///
/// Adjacency lists and the edge list are kept sorted, so edge indices are
/// stable: the k-th edge in lexicographic order has index k. Subdivision
/// and line-graph constructions number their new vertices by this index.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list in any order and orientation.
  /// Throws InvalidArgument on self-loops, duplicate edges, or ids >= n.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges) {
    for (auto& e : edges) {
      if (e.first == e.second) {
        throw InvalidArgument("self-loop at vertex " + std::to_string(e.first));
      }
      if (e.first >= n || e.second >= n) {
        throw InvalidArgument("edge {" + std::to_string(e.first) + "," +
                              std::to_string(e.second) + "} out of range for n=" +
                              std::to_string(n));
      }
      e = make_edge(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
      throw InvalidArgument("duplicate edge {" + std::to_string(dup->first) + "," +
                            std::to_string(dup->second) + "}");
    }
    Graph g;
    g.adjacency_.assign(n, {});
    for (const auto& [u, v] : edges) {
      g.adjacency_[u].push_back(v);
      g.adjacency_[v].push_back(u);
    }
    for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
    g.edges_ = std::move(edges);
    return g;
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t valency(Vertex v) const { return neighbors(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
  }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Index of {u,v} in edges(), if it is an edge.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const {
    const Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool is_regular() const {
    if (adjacency_.empty()) return true;
    const auto k = adjacency_.front().size();
    return std::all_of(adjacency_.begin(), adjacency_.end(),
                       [k](const auto& list) { return list.size() == k; });
  }

  void check_vertex(Vertex v) const {
    if (v >= adjacency_.size()) {
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n=" +
                            std::to_string(adjacency_.size()));
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// An s-arc (v_0, ..., v_s): consecutive vertices adjacent, no immediate
/// backtracking.
struct SArc {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex initial() const { return vertices.front(); }
  Vertex terminal() const { return vertices.back(); }

  friend auto operator<=>(const SArc&, const SArc&) = default;
};

inline bool is_s_arc(const Graph& g, std::span<const Vertex> walk) {
  if (walk.size() < 2) return false;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (walk[i] >= g.order()) return false;
  }
  for (std::size_t i = 1; i < walk.size(); ++i) {
    if (!g.adjacent(walk[i - 1], walk[i])) return false;
  }
  for (std::size_t j = 1; j + 1 < walk.size(); ++j) {
    if (walk[j - 1] == walk[j + 1]) return false;
  }
  return true;
}

inline bool is_s_arc(const Graph& g, const SArc& arc) { return is_s_arc(g, arc.vertices); }

}  // namespace subdivsym

#endif  // SUBDIVSYM_GRAPH_HPP
