#ifndef SUBDIVSYM_INDUCED_ACTION_HPP
#define SUBDIVSYM_INDUCED_ACTION_HPP

#include <string>
#include <vector>

#include "subdivsym/graph.hpp"
#include "subdivsym/permgroup.hpp"
#include "subdivsym/transforms.hpp"

namespace subdivsym {

inline bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(p[u], p[v])) return false;
  }
  return true;
}

/// Throws InvalidArgument on a degree mismatch and NotAnAutomorphism naming
/// the first offending generator.
inline void validate_automorphisms(const Graph& g, const PermGroup& group) {
  if (group.degree() != g.order()) {
    throw InvalidArgument("group degree " + std::to_string(group.degree()) +
                          " does not match graph order " + std::to_string(g.order()));
  }
  for (std::size_t i = 0; i < group.generators().size(); ++i) {
    if (!is_automorphism(g, group.generators()[i])) throw NotAnAutomorphism(i);
  }
}

/// The permutation of edge indices induced by an automorphism.
inline Permutation edge_permutation(const Graph& g, const Permutation& p) {
  std::vector<Point> images(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto [u, v] = g.edges()[k];
    const auto image = g.edge_index(p[u], p[v]);
    if (!image) throw InvalidArgument("permutation does not preserve the edge set");
    images[k] = static_cast<Point>(*image);
  }
  return Permutation::from_images(std::move(images));
}

/// Action on the sorted edge indices 0..m-1.
inline Action<std::size_t> induced_edge_action(const PermGroup& group, const Graph& g) {
  validate_automorphisms(g, group);
  Action<std::size_t> action;
  action.domain.resize(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) action.domain[k] = k;
  action.apply = [edges = g.edges(), n = g.order()](const Permutation& p, const std::size_t& k) {
    const Edge image = make_edge(p[edges[k].first], p[edges[k].second]);
    auto it = std::lower_bound(edges.begin(), edges.end(), image);
    return static_cast<std::size_t>(it - edges.begin());
  };
  return action;
}

/// The same group acting on edge indices, as a permutation group of
/// degree m.
inline PermGroup induced_edge_group(const PermGroup& group, const Graph& g) {
  validate_automorphisms(g, group);
  std::vector<Permutation> gens;
  for (const auto& p : group.generators()) gens.push_back(edge_permutation(g, p));
  return PermGroup(g.size(), std::move(gens));
}

/// Extends p on V(base) to V(S(base)) = V u E: E-vertex n+k goes to n+k'
/// where k' is the index of the image edge.
inline Permutation subdivision_permutation(const SubdivisionGraph& sg, const Permutation& p) {
  const auto n = sg.vertex_part_size();
  const auto on_edges = edge_permutation(sg.base(), p);
  std::vector<Point> images(n + sg.edge_part_size());
  for (Point v = 0; v < n; ++v) images[v] = p[v];
  for (Point k = 0; k < sg.edge_part_size(); ++k) images[n + k] = static_cast<Point>(n + on_edges[k]);
  return Permutation::from_images(std::move(images));
}

/// The embedding Aut(base) -> Aut(S(base)) applied to every generator.
inline PermGroup induced_subdivision_action(const PermGroup& group, const SubdivisionGraph& sg) {
  validate_automorphisms(sg.base(), group);
  std::vector<Permutation> gens;
  for (const auto& p : group.generators()) gens.push_back(subdivision_permutation(sg, p));
  return PermGroup(sg.graph().order(), std::move(gens));
}

}  // namespace subdivsym

#endif  // SUBDIVSYM_INDUCED_ACTION_HPP
