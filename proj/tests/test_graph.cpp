#include <gtest/gtest.h>

#include <random>
#include <set>

#include "subdivsym/arcs.hpp"
#include "subdivsym/constructions.hpp"
#include "subdivsym/error.hpp"
#include "subdivsym/metrics.hpp"
#include "subdivsym/transforms.hpp"
#include "support.hpp"

namespace subdivsym {
namespace {

using testing::bfs_all_pairs;
using testing::brute_arcs;

TEST(GraphTest, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), InvalidArgument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), InvalidArgument);
}

TEST(GraphTest, EdgeListMatchesAdjacency) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    const auto g = testing::seeded_connected_graph(rng, 2, 14);
    std::size_t valency_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      valency_sum += g.valency(v);
      for (Vertex w : g.neighbors(v)) {
        EXPECT_TRUE(g.adjacent(w, v));
        EXPECT_NE(v, w);
      }
    }
    EXPECT_EQ(valency_sum, 2 * g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      const auto [u, v] = g.edges()[k];
      EXPECT_LT(u, v);
      EXPECT_EQ(g.edge_index(u, v), k);
      EXPECT_EQ(g.edge_index(v, u), k);
    }
  }
}

TEST(ConstructionsTest, Complete) {
  const auto k2 = make_complete(2);
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2.edges()[0], (Edge{0, 1}));

  const auto k4 = make_complete(4);
  EXPECT_EQ(k4.size(), 6u);
  EXPECT_TRUE(k4.is_regular());
  EXPECT_EQ(k4.valency(0), 3u);
  EXPECT_EQ(diameter(k4), 1u);

  const auto k9 = make_complete(9);
  EXPECT_EQ(k9.size(), 36u);
  EXPECT_EQ(girth(k9), 3u);
}

TEST(ConstructionsTest, CompleteBipartite) {
  const auto k11 = make_complete_bipartite(1, 1);
  EXPECT_EQ(k11.order(), 2u);
  EXPECT_EQ(k11.size(), 1u);

  const auto k22 = make_complete_bipartite(2, 2);
  EXPECT_EQ(k22.order(), 4u);
  EXPECT_EQ(k22.size(), 4u);
  EXPECT_EQ(girth(k22), 4u);

  const auto k33 = make_complete_bipartite(3, 3);
  const auto d = bfs_all_pairs(k33);
  int diam = 0;
  for (const auto& row : d) diam = std::max(diam, *std::max_element(row.begin(), row.end()));
  EXPECT_EQ(diam, 2);
  EXPECT_EQ(diameter(k33), 2u);
  EXPECT_EQ(girth(k33), 4u);
}

TEST(ConstructionsTest, Cycles) {
  EXPECT_EQ(make_cycle(3).edges(), make_complete(3).edges());
  EXPECT_EQ(diameter(make_cycle(5)), 2u);
  EXPECT_EQ(girth(make_cycle(5)), 5u);
  EXPECT_EQ(diameter(make_cycle(6)), 3u);
  for (std::size_t n = 3; n <= 20; ++n) {
    const auto m = metrics(make_cycle(n));
    EXPECT_EQ(m.girth, n);
    EXPECT_EQ(m.diameter, n / 2);
    EXPECT_EQ(m.bipartition.has_value(), n % 2 == 0);
  }
}

TEST(ConstructionsTest, Petersen) {
  const auto p = make_petersen();
  EXPECT_EQ(p.order(), 10u);
  EXPECT_EQ(p.size(), 15u);
  EXPECT_TRUE(p.is_regular());
  EXPECT_EQ(girth(p), 5u);
  EXPECT_EQ(diameter(p), 2u);
}

TEST(ConstructionsTest, HoffmanSingleton) {
  const auto h = make_hoffman_singleton();
  EXPECT_EQ(h.order(), 50u);
  EXPECT_EQ(h.size(), 175u);
  for (Vertex v = 0; v < h.order(); ++v) EXPECT_EQ(h.valency(v), 7u);
  EXPECT_EQ(diameter(h), 2u);
  EXPECT_EQ(girth(h), 5u);
  // Moore graph: any two non-adjacent vertices have exactly one common neighbour.
  for (Vertex u = 0; u < 50; ++u) {
    for (Vertex v = u + 1; v < 50; ++v) {
      if (h.adjacent(u, v)) continue;
      std::size_t common = 0;
      for (Vertex w : h.neighbors(u)) common += h.adjacent(w, v) ? 1 : 0;
      EXPECT_EQ(common, 1u);
    }
  }
}

TEST(ConstructionsTest, HoffmanSingletonIdScheme) {
  EXPECT_EQ(hoffman_singleton_pentagon(0, 0), 0u);
  EXPECT_EQ(hoffman_singleton_pentagon(4, 4), 24u);
  EXPECT_EQ(hoffman_singleton_pentagram(0, 0), 25u);
  EXPECT_EQ(hoffman_singleton_pentagram(4, 4), 49u);
}

TEST(MetricsTest, BfsDistances) {
  EXPECT_EQ(bfs_distances(make_complete(4), 0), (std::vector<Distance>{0, 1, 1, 1}));
  EXPECT_EQ(bfs_distances(make_cycle(6), 0), (std::vector<Distance>{0, 1, 2, 3, 2, 1}));
  const auto p = make_petersen();
  for (Vertex v = 0; v < 10; ++v) {
    const auto d = bfs_distances(p, v);
    EXPECT_EQ(std::count(d.begin(), d.end(), 1u), 3);
    EXPECT_EQ(std::count(d.begin(), d.end(), 2u), 6);
  }
}

TEST(MetricsTest, CompleteAndBipartite) {
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_EQ(metrics(make_complete(n)).diameter, 1u);
  const auto m = metrics(make_complete_bipartite(3, 3));
  ASSERT_TRUE(m.bipartition);
  EXPECT_EQ(m.bipartition->first.size(), 3u);
  EXPECT_EQ(m.bipartition->second.size(), 3u);
  EXPECT_EQ(m.girth, 4u);
}

TEST(MetricsTest, AcyclicHasNoGirth) {
  EXPECT_FALSE(girth(make_path(6)).has_value());
  EXPECT_FALSE(girth(make_complete(2)).has_value());
  EXPECT_FALSE(girth(Graph::from_edges(1, {})).has_value());
}

TEST(MetricsTest, DisconnectedRejected) {
  const auto g = disjoint_union(make_cycle(3), make_cycle(3));
  EXPECT_FALSE(is_connected(g));
  EXPECT_THROW(diameter(g), DisconnectedGraph);
  EXPECT_THROW(metrics(g), DisconnectedGraph);
}

TEST(MetricsTest, SpheresOfSubdividedPetersenAndHoffmanSingleton) {
  const auto sp = subdivide(make_petersen());
  EXPECT_EQ(distance_sphere(sp.graph(), 0, 4).size(), 6u);
  EXPECT_EQ(distance_sphere(sp.graph(), sp.edge_vertex(0), 4).size(), 8u);
  const auto sh = subdivide(make_hoffman_singleton());
  EXPECT_EQ(distance_sphere(sh.graph(), sh.edge_vertex(0), 4).size(), 72u);
  EXPECT_EQ(distance_sphere(sh.graph(), 0, 1).size(), 7u);
  EXPECT_EQ(distance_sphere(sh.graph(), 5, 0), (std::vector<Vertex>{5}));
}

TEST(MetricsProperty, SpheresPartitionTheVertices) {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 60; ++round) {
    const auto g = testing::seeded_connected_graph(rng, 1, 16);
    const auto d = bfs_all_pairs(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      std::size_t total = 0;
      for (Distance i = 0; i <= g.order(); ++i) {
        const auto sphere = distance_sphere(g, v, i);
        for (Vertex w : sphere) EXPECT_EQ(d[v][w], static_cast<int>(i));
        total += sphere.size();
      }
      EXPECT_EQ(total, g.order());
    }
  }
}

TEST(MetricsProperty, GirthAtMostTwiceDiameterPlusOne) {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 100; ++round) {
    const auto g = testing::seeded_connected_graph(rng, 3, 14);
    const auto gi = girth(g);
    if (!gi) {
      EXPECT_EQ(g.size(), g.order() - 1);
      continue;
    }
    EXPECT_LE(*gi, 2 * diameter(g) + 1);
  }
}

TEST(MetricsProperty, GirthMatchesBruteForceCycleSearch) {
  // Shortest cycle = shortest closed s-arc returning to its start.
  std::mt19937_64 rng(14);
  for (int round = 0; round < 40; ++round) {
    const auto g = testing::seeded_connected_graph(rng, 3, 8);
    std::optional<std::size_t> shortest;
    for (std::size_t len = 3; len <= g.order() && !shortest; ++len) {
      for (const auto& a : brute_arcs(g, len - 1)) {
        std::set<Vertex> distinct(a.begin(), a.end());
        if (distinct.size() == len && g.adjacent(a.back(), a.front())) {
          shortest = len;
          break;
        }
      }
    }
    EXPECT_EQ(girth(g), shortest);
  }
}

TEST(ArcsTest, Examples) {
  const auto k2 = make_complete(2);
  const auto one = s_arcs_from(k2, 0, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].vertices, (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(s_arcs_from(k2, 0, 2).empty());
  EXPECT_EQ(s_arcs_from(make_cycle(5), 0, 3).size(), 2u);
  EXPECT_EQ(enumerate_s_arcs(make_complete(3), 1).size(), 6u);
  EXPECT_EQ(enumerate_s_arcs(make_complete(3), 2).size(), 6u);
  for (std::size_t n = 3; n <= 9; ++n) {
    for (std::size_t s = 1; s < n; ++s) EXPECT_EQ(enumerate_s_arcs(make_cycle(n), s).size(), 2 * n);
  }
}

TEST(ArcsTest, WalkValidation) {
  const auto c5 = make_cycle(5);
  const std::vector<Vertex> good{0, 1, 2, 3};
  const std::vector<Vertex> back{0, 1, 0};
  const std::vector<Vertex> jump{0, 2};
  EXPECT_TRUE(is_s_arc(c5, good));
  EXPECT_FALSE(is_s_arc(c5, back));
  EXPECT_FALSE(is_s_arc(c5, jump));
}

TEST(ArcsProperty, CountsMatchExhaustiveTuples) {
  // Every (s+1)-tuple of vertices, filtered by the s-arc conditions.
  std::mt19937_64 rng(15);
  for (int round = 0; round < 25; ++round) {
    const auto g = testing::seeded_connected_graph(rng, 2, 8);
    for (std::size_t s = 1; s <= 4; ++s) {
      for (Vertex v = 0; v < g.order(); ++v) {
        std::size_t count = 0;
        std::vector<Vertex> t(s + 1, 0);
        t[0] = v;
        auto next = [&]() {
          for (std::size_t i = s; i >= 1; --i) {
            if (++t[i] < g.order()) return true;
            t[i] = 0;
          }
          return false;
        };
        do {
          count += is_s_arc(g, t) ? 1 : 0;
        } while (next());
        const auto arcs = s_arcs_from(g, v, s);
        EXPECT_EQ(arcs.size(), count);
        for (const auto& a : arcs) {
          EXPECT_TRUE(is_s_arc(g, a));
          EXPECT_EQ(a.length(), s);
          EXPECT_EQ(a.initial(), v);
        }
      }
    }
  }
}

TEST(ArcsProperty, EnumerationIsDeterministic) {
  std::mt19937_64 rng(16);
  for (int round = 0; round < 10; ++round) {
    const auto g = testing::seeded_connected_graph(rng, 3, 10);
    EXPECT_EQ(enumerate_s_arcs(g, 3), enumerate_s_arcs(g, 3));
  }
}

}  // namespace
}  // namespace subdivsym
