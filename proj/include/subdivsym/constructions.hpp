#ifndef SUBDIVSYM_CONSTRUCTIONS_HPP
#define SUBDIVSYM_CONSTRUCTIONS_HPP

#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "subdivsym/graph.hpp"
#include "subdivsym/metrics.hpp"

namespace subdivsym {

/// K_n on ids 0..n-1.
inline Graph make_complete(std::size_t n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, std::move(edges));
}

/// K_{m,n} with biparts {0..m-1} and {m..m+n-1}.
inline Graph make_complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw InvalidArgument("complete bipartite graph needs m, n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(u, static_cast<Vertex>(m + v));
  }
  return Graph::from_edges(m + n, std::move(edges));
}

/// C_n as 0-1-...-(n-1)-0.
inline Graph make_cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(make_edge(v, static_cast<Vertex>((v + 1) % n)));
  return Graph::from_edges(n, std::move(edges));
}

/// Path on n vertices 0-1-...-(n-1).
inline Graph make_path(std::size_t n) {
  if (n < 1) throw InvalidArgument("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, std::move(edges));
}

/// The 2-subsets of {1..5} in lexicographic order, as used for the Petersen
/// vertex ids: id 0 = {1,2}, id 1 = {1,3}, ..., id 9 = {4,5}.
inline std::vector<std::pair<int, int>> petersen_labels() {
  std::vector<std::pair<int, int>> labels;
  for (int a = 1; a <= 5; ++a) {
    for (int b = a + 1; b <= 5; ++b) labels.emplace_back(a, b);
  }
  return labels;
}

/// Kneser graph K(5,2): 2-subsets adjacent iff disjoint.
inline Graph make_petersen() {
  const auto labels = petersen_labels();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < labels.size(); ++u) {
    for (Vertex v = u + 1; v < labels.size(); ++v) {
      const auto [a, b] = labels[u];
      const auto [c, d] = labels[v];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(labels.size(), std::move(edges));
}

inline Vertex hoffman_singleton_pentagon(int h, int j) { return static_cast<Vertex>(5 * h + j); }
inline Vertex hoffman_singleton_pentagram(int k, int j) {
  return static_cast<Vertex>(25 + 5 * k + j);
}

/// Robertson's construction: pentagons P_h (ids 5h+j) and pentagrams Q_k
/// (ids 25+5k+j), with P_{h,j} ~ Q_{k,(hk+j) mod 5}.
///
/// The result is checked to be 50 vertices, 7-regular, girth 5 and diameter
/// 2; a failed check means the construction code is wrong and throws
/// std::logic_error.
inline Graph make_hoffman_singleton() {
  std::vector<Edge> edges;
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      edges.push_back(make_edge(hoffman_singleton_pentagon(h, j),
                                hoffman_singleton_pentagon(h, (j + 1) % 5)));
      edges.push_back(make_edge(hoffman_singleton_pentagram(h, j),
                                hoffman_singleton_pentagram(h, (j + 2) % 5)));
    }
  }
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      for (int k = 0; k < 5; ++k) {
        edges.push_back(make_edge(hoffman_singleton_pentagon(h, j),
                                  hoffman_singleton_pentagram(k, (h * k + j) % 5)));
      }
    }
  }
  Graph g = Graph::from_edges(50, std::move(edges));
  if (g.order() != 50 || !g.is_regular() || g.valency(0) != 7 || girth(g) != std::size_t{5} ||
      diameter(g) != 2) {
    throw std::logic_error("Hoffman-Singleton construction failed its self-check");
  }
  return g;
}

/// Vertices of `second` are shifted by first.order().
inline Graph disjoint_union(const Graph& first, const Graph& second) {
  std::vector<Edge> edges = first.edges();
  const auto shift = static_cast<Vertex>(first.order());
  for (const auto& [u, v] : second.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(first.order() + second.order(), std::move(edges));
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), std::move(edges));
}

/// Uniform integer in [0, bound) from a 64-bit engine, independent of the
/// standard library's distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

/// Random connected graph: a random recursive tree on a random labelling,
/// plus every remaining pair independently with probability
/// `extra_per_mille`/1000. Deterministic for a given engine state.
inline Graph random_connected_graph(std::size_t n, unsigned extra_per_mille,
                                    std::mt19937_64& rng) {
  if (n < 1) throw InvalidArgument("random graph needs n >= 1");
  std::vector<Vertex> label(n);
  for (Vertex v = 0; v < n; ++v) label[v] = v;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(label[i - 1], label[uniform_below(rng, i)]);
  }
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const auto parent = static_cast<Vertex>(uniform_below(rng, v));
    const Edge e = make_edge(label[v], label[parent]);
    present[e.first][e.second] = true;
    edges.push_back(e);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!present[u][v] && uniform_below(rng, 1000) < extra_per_mille) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace subdivsym

#endif  // SUBDIVSYM_CONSTRUCTIONS_HPP
