#ifndef SUBDIVSYM_TRANSFORMS_HPP
#define SUBDIVSYM_TRANSFORMS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subdivsym/constructions.hpp"
#include "subdivsym/graph.hpp"
#include "subdivsym/metrics.hpp"

namespace subdivsym {

enum class Part { Vertex, Edge };

/// S(g): the base graph with one new vertex in the middle of every edge.
///
/// V-vertices keep their base ids 0..n-1. The E-vertex for the k-th edge of
/// base().edges() has id n+k.
class SubdivisionGraph {
 public:
  SubdivisionGraph() = default;

  explicit SubdivisionGraph(Graph base) : base_(std::move(base)) {
    const auto n = static_cast<Vertex>(base_.order());
    std::vector<Edge> edges;
    edges.reserve(2 * base_.size());
    for (std::size_t k = 0; k < base_.size(); ++k) {
      const auto e = static_cast<Vertex>(n + k);
      edges.emplace_back(base_.edges()[k].first, e);
      edges.emplace_back(base_.edges()[k].second, e);
    }
    graph_ = Graph::from_edges(base_.order() + base_.size(), std::move(edges));
  }

  const Graph& base() const noexcept { return base_; }
  const Graph& graph() const noexcept { return graph_; }

  std::size_t vertex_part_size() const noexcept { return base_.order(); }
  std::size_t edge_part_size() const noexcept { return base_.size(); }

  Part part(Vertex x) const {
    graph_.check_vertex(x);
    return x < base_.order() ? Part::Vertex : Part::Edge;
  }

  Vertex edge_vertex(std::size_t edge_index) const {
    if (edge_index >= base_.size()) throw InvalidArgument("edge index out of range");
    return static_cast<Vertex>(base_.order() + edge_index);
  }

  /// The base edge {u,v} subdivided by E-vertex x.
  const Edge& edge_of(Vertex x) const {
    if (part(x) != Part::Edge) {
      throw InvalidArgument("vertex " + std::to_string(x) + " is not an E-vertex");
    }
    return base_.edges()[x - base_.order()];
  }

 private:
  Graph base_;
  Graph graph_;
};

inline SubdivisionGraph subdivide(const Graph& g) { return SubdivisionGraph(g); }

/// L(g): vertex k is the k-th edge of g; adjacency is sharing an endpoint.
inline Graph line_graph(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nbrs = g.neighbors(v);
    std::vector<Vertex> incident;
    incident.reserve(nbrs.size());
    for (Vertex w : nbrs) incident.push_back(static_cast<Vertex>(*g.edge_index(v, w)));
    for (std::size_t i = 0; i < incident.size(); ++i) {
      for (std::size_t j = i + 1; j < incident.size(); ++j) {
        edges.push_back(make_edge(incident[i], incident[j]));
      }
    }
  }
  // Two distinct edges of a simple graph share at most one endpoint, so each
  // line-graph edge was produced exactly once.
  return Graph::from_edges(g.size(), std::move(edges));
}

/// A connected component with its vertices relabelled 0..k-1 in the order
/// of `vertices` (sorted ascending).
struct InducedComponent {
  std::vector<Vertex> vertices;
  Graph graph;
};

inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<Vertex> local(g.order(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (local[u] != static_cast<Vertex>(-1) && local[v] != static_cast<Vertex>(-1)) {
      edges.push_back(make_edge(local[u], local[v]));
    }
  }
  return Graph::from_edges(vertices.size(), std::move(edges));
}

inline std::vector<InducedComponent> split_components(const Graph& g) {
  std::vector<InducedComponent> out;
  for (auto& vertices : connected_components(g)) {
    Graph piece = induced_subgraph(g, vertices);
    out.push_back(InducedComponent{std::move(vertices), std::move(piece)});
  }
  return out;
}

/// The distance-2 graph of a connected graph: same vertices, edges between
/// pairs at distance exactly 2.
inline Graph distance_two_graph_whole(const Graph& g) {
  DistanceMatrix dist(g);
  if (!dist.connected()) throw DisconnectedGraph("distance-2 graph requires a connected graph");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (dist(u, v) == 2) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), std::move(edges));
}

/// Components of the distance-2 graph. Isolated vertices come back as
/// singleton components, so K_n yields n of them.
inline std::vector<InducedComponent> distance_two_graph(const Graph& g) {
  return split_components(distance_two_graph_whole(g));
}

/// Recovers the base graph from the bare graph of a subdivision, without
/// any part labels.
///
/// If every vertex has valency 2 the input is an even cycle C_{2n} and the
/// result is C_n; the base is only determined up to isomorphism there.
/// Otherwise the base is the component of the distance-2 graph that holds
/// the vertices of valency other than 2.
inline Graph reconstruct_from_ambient(const Graph& ambient) {
  if (ambient.order() < 3 || !is_connected(ambient)) {
    throw MalformedSubdivision("not the subdivision of a connected graph on >= 2 vertices");
  }
  bool all_two = true;
  for (Vertex v = 0; v < ambient.order(); ++v) all_two = all_two && ambient.valency(v) == 2;
  if (all_two) {
    if (ambient.order() % 2 != 0 || ambient.order() < 6) {
      throw MalformedSubdivision("cycle of length " + std::to_string(ambient.order()) +
                                 " is not a subdivision");
    }
    return make_cycle(ambient.order() / 2);
  }
  auto components = distance_two_graph(ambient);
  std::optional<std::size_t> chosen;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const bool irregular = std::any_of(components[c].vertices.begin(),
                                       components[c].vertices.end(),
                                       [&](Vertex v) { return ambient.valency(v) != 2; });
    if (!irregular) continue;
    if (chosen) throw MalformedSubdivision("two distance-2 components contain valency != 2");
    chosen = c;
  }
  if (components.size() != 2 || !chosen) {
    throw MalformedSubdivision("distance-2 graph does not split into a base and a line graph");
  }
  // Every vertex of the other component must be a valency-2 midpoint.
  const auto& other = components[1 - *chosen];
  for (Vertex v : other.vertices) {
    if (ambient.valency(v) != 2) throw MalformedSubdivision("midpoint of valency != 2");
  }
  return std::move(components[*chosen].graph);
}

/// With forget_labels the part tags are ignored and only sg.graph() is used.
inline Graph reconstruct(const SubdivisionGraph& sg, bool forget_labels) {
  if (forget_labels) return reconstruct_from_ambient(sg.graph());
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < sg.edge_part_size(); ++k) {
    edges.push_back(sg.edge_of(sg.edge_vertex(k)));
  }
  return Graph::from_edges(sg.vertex_part_size(), std::move(edges));
}

/// Recovers the base from a graph whose first `vertex_part_size` ids are the
/// V-vertices and the rest E-vertices, in the order the E-vertices appear.
inline Graph reconstruct_tagged(const Graph& ambient, std::size_t vertex_part_size) {
  if (vertex_part_size > ambient.order()) throw MalformedSubdivision("V-part larger than the graph");
  std::vector<Edge> edges;
  for (auto x = static_cast<Vertex>(vertex_part_size); x < ambient.order(); ++x) {
    const auto& nbrs = ambient.neighbors(x);
    if (nbrs.size() != 2 || nbrs[0] >= vertex_part_size || nbrs[1] >= vertex_part_size) {
      throw MalformedSubdivision("E-vertex " + std::to_string(x) + " is not a midpoint of two V-vertices");
    }
    edges.push_back(make_edge(nbrs[0], nbrs[1]));
  }
  for (Vertex v = 0; v < vertex_part_size; ++v) {
    for (Vertex w : ambient.neighbors(v)) {
      if (w < vertex_part_size) throw MalformedSubdivision("two V-vertices are adjacent");
    }
  }
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw MalformedSubdivision("two E-vertices subdivide the same edge");
  }
  return Graph::from_edges(vertex_part_size, std::move(edges));
}

/// Distances in S(g) from distances in g, without searching S(g):
///   two V-vertices          2 d(a,b)
///   V-vertex a, E {u,v}     2 min{d(a,u), d(a,v)} + 1
///   distinct E {x,u},{y,v}  2 min{d(x,y), d(x,v), d(u,y), d(u,v)} + 2
/// The base graph must be connected.
class SubdivisionDistance {
 public:
  explicit SubdivisionDistance(const SubdivisionGraph& sg) : sg_(sg), base_(sg.base()) {
    if (!base_.connected()) throw DisconnectedGraph("subdivision distance needs a connected base");
  }

  Distance operator()(Vertex a, Vertex b) const {
    const auto pa = sg_.part(a);
    const auto pb = sg_.part(b);
    if (a == b) return 0;
    if (pa == Part::Vertex && pb == Part::Vertex) return 2 * base_(a, b);
    if (pa == Part::Edge && pb == Part::Vertex) std::swap(a, b);
    if (pa != pb) {
      const auto [u, v] = sg_.edge_of(b);
      return 2 * std::min(base_(a, u), base_(a, v)) + 1;
    }
    const auto [x, u] = sg_.edge_of(a);
    const auto [y, v] = sg_.edge_of(b);
    return 2 * std::min({base_(x, y), base_(x, v), base_(u, y), base_(u, v)}) + 2;
  }

  const DistanceMatrix& base_distances() const noexcept { return base_; }

 private:
  SubdivisionGraph sg_;
  DistanceMatrix base_;
};

inline Distance subdivision_distance(const SubdivisionGraph& sg, Vertex a, Vertex b) {
  return SubdivisionDistance(sg)(a, b);
}

struct DeltaReport {
  Distance d = 0;
  Distance diam_s = 0;
  Distance delta = 0;
  /// Edges e={x,y}, f={u,v} with all four cross distances equal to d, when
  /// such a pair exists.
  std::optional<std::pair<Edge, Edge>> diameter_pair;
};

/// diam(S(g)) - 2 diam(g), with diam(S(g)) measured by BFS on S(g).
inline DeltaReport delta_of(const Graph& g) {
  if (g.order() < 2) throw InvalidArgument("delta needs at least 2 vertices");
  DistanceMatrix dist(g);
  DeltaReport report;
  report.d = dist.diameter();
  report.diam_s = diameter(subdivide(g).graph());
  report.delta = report.diam_s - 2 * report.d;
  for (const auto& e : g.edges()) {
    for (const auto& f : g.edges()) {
      const auto [x, y] = e;
      const auto [u, v] = f;
      if (dist(x, u) == report.d && dist(x, v) == report.d && dist(y, u) == report.d &&
          dist(y, v) == report.d) {
        report.diameter_pair = std::make_pair(e, f);
        return report;
      }
    }
  }
  return report;
}

}  // namespace subdivsym

#endif  // SUBDIVSYM_TRANSFORMS_HPP
