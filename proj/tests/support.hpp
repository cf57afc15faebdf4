// Independent oracles and seeded generators shared by the test suites. Nothing
// here calls the stabilizer chain, the distance matrix or the s-arc
// enumerator of the library.

#ifndef SUBDIVSYM_TESTS_SUPPORT_HPP
#define SUBDIVSYM_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "subdivsym/graph.hpp"
#include "subdivsym/io.hpp"
#include "subdivsym/perm.hpp"
#include "subdivsym/symmetry.hpp"

namespace subdivsym::testing {

using Images = std::vector<Point>;

inline std::string data_path(const std::string& relative) {
  return std::string(SUBDIVSYM_DATA_DIR) + "/" + relative;
}

inline PermGroup load_group(const std::string& name) {
  std::ifstream in(data_path("groups/" + name));
  return read_generators(in);
}

/// Every element of <gens>, found by breadth-first multiplication.
/// Gives up (returns what it has) past `limit` elements.
inline std::set<Images> closure(std::size_t degree, const std::vector<Permutation>& gens,
                                std::size_t limit = 400000) {
  Images id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<Point>(i);
  std::set<Images> seen{id};
  std::deque<Images> queue{id};
  while (!queue.empty() && seen.size() <= limit) {
    const Images x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Images y(degree);
      for (std::size_t i = 0; i < degree; ++i) y[i] = g[x[i]];
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return seen;
}

inline std::vector<std::vector<int>> bfs_all_pairs(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    std::deque<Vertex> queue{s};
    d[s][s] = 0;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w = 0; w < n; ++w) {
        if (d[s][w] < 0 && g.adjacent(u, w)) {
          d[s][w] = d[s][u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return d;
}

/// s-arcs (v_0..v_s), v_{i+1} adjacent to v_i, v_{i+2} != v_i.
inline std::vector<std::vector<Vertex>> brute_arcs(const Graph& g, std::size_t s,
                                                   std::optional<Vertex> start = {}) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> walk;
  auto extend = [&](auto& self) -> void {
    if (walk.size() == s + 1) {
      out.push_back(walk);
      return;
    }
    for (Vertex w = 0; w < g.order(); ++w) {
      if (!g.adjacent(walk.back(), w)) continue;
      if (walk.size() >= 2 && walk[walk.size() - 2] == w) continue;
      walk.push_back(w);
      self(self);
      walk.pop_back();
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    if (start && v != *start) continue;
    walk = {v};
    extend(extend);
  }
  return out;
}

/// The property decided from its definition: all group elements listed,
/// every vertex checked, spheres from BFS.
inline bool brute_property(const Graph& g, const std::set<Images>& elements, PropertyKind kind) {
  const auto d = bfs_all_pairs(g);
  int diam = 0;
  for (const auto& row : d) diam = std::max(diam, *std::max_element(row.begin(), row.end()));
  const bool arcs = kind.family == Family::Arc || kind.family == Family::SArc;
  std::size_t s = kind.s;
  if (kind.family == Family::Arc) s = 1;
  if (kind.family == Family::Distance) s = static_cast<std::size_t>(diam);

  using Tuple = std::vector<Vertex>;
  auto transitive_on = [](const std::vector<const Images*>& group, const std::vector<Tuple>& set) {
    if (set.empty()) return true;
    std::set<Tuple> members(set.begin(), set.end());
    std::set<Tuple> reached;
    for (const Images* x : group) {
      Tuple image;
      for (Vertex v : set.front()) image.push_back((*x)[v]);
      reached.insert(image);
    }
    return reached == members;
  };
  auto level_set = [&](std::optional<Vertex> v, std::size_t i) {
    std::vector<Tuple> set;
    if (arcs) return brute_arcs(g, i, v);
    for (Vertex a = 0; a < g.order(); ++a) {
      if (v && a != *v) continue;
      for (Vertex b = 0; b < g.order(); ++b) {
        if (d[a][b] != static_cast<int>(i)) continue;
        set.push_back(v ? Tuple{b} : Tuple{a, b});
      }
    }
    return set;
  };

  std::vector<const Images*> all;
  for (const auto& x : elements) all.push_back(&x);
  bool nonempty = false;
  if (kind.scope == Scope::Global) {
    for (std::size_t i = 1; i <= s; ++i) {
      const auto set = level_set(std::nullopt, i);
      if (!transitive_on(all, set)) return false;
      if (i == s) nonempty = !set.empty();
    }
    return nonempty;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<const Images*> stab;
    for (const Images* x : all) {
      if ((*x)[v] == v) stab.push_back(x);
    }
    for (std::size_t i = 1; i <= s; ++i) {
      const auto set = level_set(v, i);
      if (!transitive_on(stab, set)) return false;
      if (i == s && !set.empty()) nonempty = true;
    }
  }
  return nonempty;
}

/// Connected graph on n vertices: a random spanning tree plus each other pair
/// with probability p.
inline Graph seeded_graph_with_density(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  std::set<Edge> have;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    const Edge e{pick(rng), v};
    have.insert(e);
    edges.push_back(e);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!have.count({u, v}) && coin(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

inline Graph seeded_connected_graph(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> order(lo, hi);
  std::uniform_real_distribution<double> density(0.0, 0.6);
  const auto n = order(rng);
  return seeded_graph_with_density(rng, n, density(rng));
}

inline Graph relabel(const Graph& g, const Images& p) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.push_back(make_edge(p[u], p[v]));
  return Graph::from_edges(g.order(), std::move(edges));
}

inline Images seeded_permutation(std::mt19937_64& rng, std::size_t n) {
  Images p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Point>(i);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace subdivsym::testing

#endif  // SUBDIVSYM_TESTS_SUPPORT_HPP
