#ifndef SUBDIVSYM_ARCS_HPP
#define SUBDIVSYM_ARCS_HPP

#include <vector>

#include "subdivsym/graph.hpp"

namespace subdivsym {

namespace detail {

inline void extend_arcs(const Graph& g, std::vector<Vertex>& walk, std::size_t s,
                        std::vector<SArc>& out) {
  if (walk.size() == s + 1) {
    out.push_back(SArc{walk});
    return;
  }
  const Vertex tip = walk.back();
  const bool has_previous = walk.size() >= 2;
  const Vertex previous = has_previous ? walk[walk.size() - 2] : tip;
  for (Vertex next : g.neighbors(tip)) {
    if (has_previous && next == previous) continue;
    walk.push_back(next);
    extend_arcs(g, walk, s, out);
    walk.pop_back();
  }
}

}  // namespace detail

/// All s-arcs starting at v, in lexicographic order.
inline std::vector<SArc> s_arcs_from(const Graph& g, Vertex v, std::size_t s) {
  g.check_vertex(v);
  if (s == 0) throw InvalidArgument("arc length must be positive");
  std::vector<SArc> out;
  std::vector<Vertex> walk{v};
  detail::extend_arcs(g, walk, s, out);
  return out;
}

/// All s-arcs of g, in lexicographic order.
inline std::vector<SArc> enumerate_s_arcs(const Graph& g, std::size_t s) {
  std::vector<SArc> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto part = s_arcs_from(g, v, s);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace subdivsym

#endif  // SUBDIVSYM_ARCS_HPP
