#ifndef SUBDIVSYM_SYMMETRY_HPP
#define SUBDIVSYM_SYMMETRY_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subdivsym/arcs.hpp"
#include "subdivsym/graph.hpp"
#include "subdivsym/induced_action.hpp"
#include "subdivsym/metrics.hpp"
#include "subdivsym/permgroup.hpp"

namespace subdivsym {

enum class Family { Arc, SArc, SDistance, Distance };
enum class Scope { Global, Local };

/// One of the eight properties. `s` is ignored for Arc (always 1) and
/// Distance (always the diameter); the effective value is in the report.
struct PropertyKind {
  Family family = Family::SArc;
  Scope scope = Scope::Global;
  std::size_t s = 1;

  std::string name() const {
    std::string base;
    switch (family) {
      case Family::Arc: base = "arc"; break;
      case Family::SArc: base = "s-arc"; break;
      case Family::SDistance: base = "s-distance"; break;
      case Family::Distance: base = "distance"; break;
    }
    return scope == Scope::Local ? "local-" + base : base;
  }

  /// Inverse of name(); nullopt for an unknown name.
  static std::optional<PropertyKind> parse(std::string_view text, std::size_t s = 1) {
    PropertyKind kind;
    kind.s = s;
    if (text.starts_with("local-")) {
      kind.scope = Scope::Local;
      text.remove_prefix(6);
    }
    if (text == "arc") kind.family = Family::Arc;
    else if (text == "s-arc") kind.family = Family::SArc;
    else if (text == "s-distance") kind.family = Family::SDistance;
    else if (text == "distance") kind.family = Family::Distance;
    else return std::nullopt;
    return kind;
  }

  bool takes_s() const { return family == Family::SArc || family == Family::SDistance; }
  bool operator==(const PropertyKind&) const = default;
};

/// Why a verdict is false. For "distinct-orbits", `first` and `second` are
/// two objects of the same level (arcs, ordered pairs, or sphere points)
/// lying in different orbits of G, or of G_v when `vertex` is set. For
/// "empty-level" the level-s set is empty (for every v when local).
struct Witness {
  std::string reason;
  std::optional<Vertex> vertex;
  std::size_t level = 0;
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

struct TransitivityReport {
  PropertyKind kind;
  bool verdict = false;
  std::optional<Witness> witness;
  /// Orbit counts for levels 1..k, where k is s or the first failing
  /// level. Local counts are the maximum over vertices; 0 marks an empty
  /// set.
  std::vector<std::size_t> orbit_counts;
};

/// A graph together with a group of automorphisms, validated once.
/// Vertex-orbit representatives and point stabilizers are computed on demand
/// and cached; the cache is mutex-protected so a context can be shared.
class ActionContext {
 public:
  ActionContext(Graph g, PermGroup group)
      : graph_(std::move(g)), group_(std::move(group)), state_(std::make_shared<State>()) {
    validate_automorphisms(graph_, group_);
    if (!is_connected(graph_)) throw DisconnectedGraph();
    distances_ = std::make_shared<const DistanceMatrix>(graph_);
    for (const auto& orbit : point_orbits(group_)) representatives_.push_back(orbit.front());
  }

  const Graph& graph() const noexcept { return graph_; }
  const PermGroup& group() const noexcept { return group_; }
  const DistanceMatrix& distances() const noexcept { return *distances_; }
  Distance diameter() const { return distances_->diameter(); }

  /// Least vertex of each G-orbit on vertices, ascending.
  const std::vector<Vertex>& representatives() const noexcept { return representatives_; }
  bool vertex_transitive() const noexcept { return representatives_.size() <= 1; }

  /// Strong generators of G_v.
  std::vector<Permutation> stabilizer_generators(Vertex v) const {
    graph_.check_vertex(v);
    std::lock_guard lock(state_->mutex);
    auto it = state_->stabilizers.find(v);
    if (it == state_->stabilizers.end()) {
      const Point base[] = {v};
      it = state_->stabilizers
               .emplace(v, group_.chain_with_base(base).stabilizer_generators(1))
               .first;
    }
    return it->second;
  }

  std::vector<Vertex> sphere(Vertex v, Distance i) const {
    std::vector<Vertex> out;
    for (Vertex w = 0; w < graph_.order(); ++w) {
      if ((*distances_)(v, w) == i) out.push_back(w);
    }
    return out;
  }

 private:
  struct State {
    std::mutex mutex;
    std::map<Vertex, std::vector<Permutation>> stabilizers;
  };

  Graph graph_;
  PermGroup group_;
  std::shared_ptr<const DistanceMatrix> distances_;
  std::vector<Vertex> representatives_;
  std::shared_ptr<State> state_;
};

namespace detail {

struct LevelOutcome {
  std::size_t orbits = 0;
  std::vector<Vertex> first, second;
};

/// Orbit partition of a lexicographically sorted set; the witness pair is
/// the least element and the least element outside its orbit.
template <class T, class Apply>
LevelOutcome partition_level(std::span<const Permutation> gens, const std::vector<T>& set,
                             Apply apply) {
  LevelOutcome out;
  if (set.empty()) return out;
  const auto parts = orbit_partition<T, Apply>(gens, set, apply);
  out.orbits = parts.size();
  if (parts.size() > 1) {
    auto as_tuple = [](const T& x) {
      if constexpr (std::is_same_v<T, Point>) return std::vector<Vertex>{x};
      else return std::vector<Vertex>(x.begin(), x.end());
    };
    out.first = as_tuple(parts[0].front());
    out.second = as_tuple(parts[1].front());
  }
  return out;
}

inline std::vector<std::vector<Point>> arc_tuples(std::vector<SArc> arcs) {
  std::vector<std::vector<Point>> out;
  out.reserve(arcs.size());
  for (auto& a : arcs) out.push_back(std::move(a.vertices));
  return out;
}

inline std::vector<std::vector<Point>> distance_pairs(const ActionContext& ctx, Distance i) {
  std::vector<std::vector<Point>> out;
  const auto n = static_cast<Vertex>(ctx.graph().order());
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = 0; w < n; ++w) {
      if (ctx.distances()(v, w) == i) out.push_back({v, w});
    }
  }
  return out;
}

inline LevelOutcome global_level(const ActionContext& ctx, bool arcs, std::size_t i) {
  const std::span<const Permutation> gens(ctx.group().generators());
  const auto set = arcs ? arc_tuples(enumerate_s_arcs(ctx.graph(), i))
                        : distance_pairs(ctx, static_cast<Distance>(i));
  return partition_level(gens, set, TupleAction{});
}

inline LevelOutcome local_level(const ActionContext& ctx, bool arcs, Vertex v, std::size_t i) {
  const auto gens = ctx.stabilizer_generators(v);
  const std::span<const Permutation> view(gens);
  if (arcs) return partition_level(view, arc_tuples(s_arcs_from(ctx.graph(), v, i)), TupleAction{});
  return partition_level(view, ctx.sphere(v, static_cast<Distance>(i)), PointAction{});
}

}  // namespace detail

/// Decides `kind` for the action in `ctx`. Throws InvalidArgument for s = 0
/// or, in the distance families, s > diam.
inline TransitivityReport evaluate(const ActionContext& ctx, PropertyKind kind) {
  const bool arcs = kind.family == Family::Arc || kind.family == Family::SArc;
  if (kind.family == Family::Arc) kind.s = 1;
  if (kind.family == Family::Distance) {
    if (ctx.graph().order() < 2) throw InvalidArgument("distance transitivity needs n >= 2");
    kind.s = ctx.diameter();
  }
  if (kind.s == 0) throw InvalidArgument("s must be positive");
  if (!arcs && kind.s > ctx.diameter()) {
    throw InvalidArgument("s=" + std::to_string(kind.s) + " exceeds diameter " +
                          std::to_string(ctx.diameter()));
  }

  TransitivityReport report;
  report.kind = kind;
  bool last_nonempty = false;
  for (std::size_t i = 1; i <= kind.s; ++i) {
    std::size_t worst = 0;
    std::optional<Witness> failure;
    last_nonempty = false;
    if (kind.scope == Scope::Global) {
      auto level = detail::global_level(ctx, arcs, i);
      worst = level.orbits;
      last_nonempty = level.orbits > 0;
      if (level.orbits > 1) {
        failure = Witness{"distinct-orbits", std::nullopt, i, level.first, level.second};
      }
    } else {
      for (Vertex v : ctx.representatives()) {
        auto level = detail::local_level(ctx, arcs, v, i);
        worst = std::max(worst, level.orbits);
        last_nonempty = last_nonempty || level.orbits > 0;
        if (level.orbits > 1 && !failure) {
          failure = Witness{"distinct-orbits", v, i, level.first, level.second};
        }
      }
    }
    report.orbit_counts.push_back(worst);
    if (failure) {
      report.witness = std::move(failure);
      return report;
    }
  }
  if (!last_nonempty) {
    report.witness = Witness{"empty-level", std::nullopt, kind.s, {}, {}};
    return report;
  }
  report.verdict = true;
  return report;
}

inline TransitivityReport evaluate(const Graph& g, const PermGroup& group, PropertyKind kind) {
  return evaluate(ActionContext(g, group), kind);
}

inline TransitivityReport is_arc_transitive(const Graph& g, const PermGroup& group) {
  return evaluate(g, group, {Family::Arc, Scope::Global, 1});
}
inline TransitivityReport is_locally_arc_transitive(const Graph& g, const PermGroup& group) {
  return evaluate(g, group, {Family::Arc, Scope::Local, 1});
}
inline TransitivityReport is_s_arc_transitive(const Graph& g, const PermGroup& group, std::size_t s) {
  return evaluate(g, group, {Family::SArc, Scope::Global, s});
}
inline TransitivityReport is_locally_s_arc_transitive(const Graph& g, const PermGroup& group,
                                                      std::size_t s) {
  return evaluate(g, group, {Family::SArc, Scope::Local, s});
}
inline TransitivityReport is_s_distance_transitive(const Graph& g, const PermGroup& group,
                                                   std::size_t s) {
  return evaluate(g, group, {Family::SDistance, Scope::Global, s});
}
inline TransitivityReport is_locally_s_distance_transitive(const Graph& g, const PermGroup& group,
                                                           std::size_t s) {
  return evaluate(g, group, {Family::SDistance, Scope::Local, s});
}
inline TransitivityReport is_distance_transitive(const Graph& g, const PermGroup& group) {
  return evaluate(g, group, {Family::Distance, Scope::Global, 0});
}
inline TransitivityReport is_locally_distance_transitive(const Graph& g, const PermGroup& group) {
  return evaluate(g, group, {Family::Distance, Scope::Local, 0});
}

/// Whether G_x has one orbit on the sphere of radius i around x (true when
/// the sphere is empty).
inline bool stabilizer_transitive_on_sphere(const ActionContext& ctx, Vertex x, Distance i) {
  return detail::local_level(ctx, false, x, i).orbits <= 1;
}

/// G_v 2-transitive on the neighbours of v, for every v.
inline bool neighborhood_two_transitive(const ActionContext& ctx) {
  for (Vertex v : ctx.representatives()) {
    const auto nbrs = ctx.graph().neighbors(v);
    std::vector<std::vector<Point>> pairs;
    for (Vertex a : nbrs) {
      for (Vertex b : nbrs) {
        if (a != b) pairs.push_back({a, b});
      }
    }
    const auto gens = ctx.stabilizer_generators(v);
    if (detail::partition_level(std::span<const Permutation>(gens), pairs, TupleAction{}).orbits > 1) {
      return false;
    }
  }
  return true;
}

inline bool neighborhood_two_transitive(const Graph& g, const PermGroup& group) {
  return neighborhood_two_transitive(ActionContext(g, group));
}

}  // namespace subdivsym

#endif  // SUBDIVSYM_SYMMETRY_HPP
