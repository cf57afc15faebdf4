#include <gtest/gtest.h>

#include <random>
#include <set>
#include <thread>

#include "subdivsym/arcs.hpp"
#include "subdivsym/automorphism.hpp"
#include "subdivsym/constructions.hpp"
#include "subdivsym/induced_action.hpp"
#include "subdivsym/permgroup.hpp"
#include "subdivsym/projective_line.hpp"
#include "subdivsym/transforms.hpp"
#include "support.hpp"

namespace subdivsym {
namespace {

using testing::closure;

TEST(PermutationTest, RightActionComposition) {
  const auto a = Permutation::from_cycles(3, {{0, 1}});
  const auto b = Permutation::from_cycles(3, {{1, 2}});
  const auto ab = a * b;
  for (Point x = 0; x < 3; ++x) EXPECT_EQ(ab[x], b[a[x]]);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), InvalidArgument);
}

TEST(PermGroupTest, Examples) {
  EXPECT_EQ(PermGroup(5, {}).order(), 1u);
  const PermGroup d10(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{1, 4}, {2, 3}})});
  EXPECT_EQ(d10.order(), 10u);
  EXPECT_EQ(closure(5, d10.generators()).size(), 10u);
  EXPECT_EQ(symmetric_group(5).order(), 120u);
  for (std::size_t n = 3; n <= 16; ++n) EXPECT_EQ(dihedral_group(n).order(), 2 * n);
  EXPECT_EQ(dihedral_group(3).order(), symmetric_group(3).order());
}

TEST(PermGroupProperty, OrderEqualsClosureSize) {
  std::vector<PermGroup> groups;
  for (std::size_t n = 3; n <= 12; ++n) groups.push_back(dihedral_group(n));
  for (std::size_t n = 1; n <= 7; ++n) groups.push_back(symmetric_group(n));
  for (std::size_t n = 3; n <= 7; ++n) groups.push_back(alternating_group(n));
  for (std::size_t n = 4; n <= 12; n += 2) groups.push_back(half_dihedral_group(n));
  for (std::size_t n = 2; n <= 3; ++n) {
    groups.push_back(direct_product_symmetric(n));
    groups.push_back(wreath_symmetric_s2(n));
  }
  groups.push_back(pgl_2_8());
  groups.push_back(pgammal_2_8());
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const std::size_t degree = 3 + rng() % 6;
    std::vector<Permutation> gens;
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) {
      gens.push_back(Permutation::from_images(testing::seeded_permutation(rng, degree)));
    }
    groups.emplace_back(degree, gens);
  }
  for (const auto& g : groups) {
    const auto elements = closure(g.degree(), g.generators());
    EXPECT_EQ(g.order(), elements.size());
  }
}

TEST(PermGroupProperty, MembershipAcceptsExactlyTheClosure) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 30; ++i) {
    const std::size_t degree = 4 + rng() % 3;
    std::vector<Permutation> gens{Permutation::from_images(testing::seeded_permutation(rng, degree))};
    if (rng() % 2) gens.push_back(Permutation::from_images(testing::seeded_permutation(rng, degree)));
    const PermGroup g(degree, gens);
    const auto elements = closure(degree, gens);
    // Every permutation of the degree, member iff in the closure.
    testing::Images p(degree);
    for (std::size_t k = 0; k < degree; ++k) p[k] = static_cast<Point>(k);
    do {
      EXPECT_EQ(g.contains(Permutation::from_images(p)), elements.count(p) == 1);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST(OrbitTest, Examples) {
  EXPECT_EQ(orbit(PermGroup::trivial(4), Point{2}), (std::vector<Point>{2}));
  EXPECT_EQ(orbit(dihedral_group(5), Point{0}).size(), 5u);

  const auto p = make_petersen();
  const auto aut = automorphism_group(p);
  std::vector<std::vector<Point>> arcs;
  for (const auto& a : enumerate_s_arcs(p, 2)) arcs.push_back(a.vertices);
  ASSERT_EQ(arcs.size(), 60u);
  const auto parts = orbit_partition<std::vector<Point>>(std::span<const Permutation>(aut.generators()), arcs,
                                                         TupleAction{});
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].size(), 60u);
}

TEST(StabilizerTest, Examples) {
  EXPECT_EQ(stabilizer_point(symmetric_group(5), 0).order(), 24u);
  const auto petersen = make_petersen();
  const auto p_aut = automorphism_group(petersen);
  for (Point v = 0; v < 10; ++v) EXPECT_EQ(stabilizer_point(p_aut, v).order(), 12u);
  for (const auto& [u, v] : petersen.edges()) EXPECT_EQ(stabilizer_edge(p_aut, u, v).order(), 8u);
  EXPECT_EQ(stabilizer_edge(PermGroup::trivial(5), 0, 1).order(), 1u);
}

TEST(StabilizerTest, HoffmanSingletonFromFixture) {
  const auto aut = testing::load_group("hoffman_singleton_aut.gens");
  EXPECT_EQ(aut.order(), 252000u);
  const auto derived = derived_subgroup(aut);
  EXPECT_EQ(derived.order(), 126000u);
  EXPECT_EQ(stabilizer_point(aut, 0).order(), 5040u);
  EXPECT_EQ(stabilizer_point(derived, 0).order(), 2520u);
  const auto [u, v] = make_hoffman_singleton().edges()[0];
  EXPECT_EQ(stabilizer_edge(aut, u, v).order(), 1440u);
  EXPECT_EQ(stabilizer_edge(derived, u, v).order(), 720u);
}

TEST(StabilizerProperty, OrbitStabilizerAndEdgeIndex) {
  std::mt19937_64 rng(33);
  std::vector<PermGroup> groups{symmetric_group(6), alternating_group(6), dihedral_group(9), pgammal_2_8(),
                                automorphism_group(make_petersen())};
  for (int i = 0; i < 20; ++i) {
    const std::size_t degree = 5 + rng() % 4;
    groups.emplace_back(degree, std::vector<Permutation>{
                                    Permutation::from_images(testing::seeded_permutation(rng, degree)),
                                    Permutation::from_images(testing::seeded_permutation(rng, degree))});
  }
  for (const auto& g : groups) {
    for (int k = 0; k < 3; ++k) {
      const auto x = static_cast<Point>(rng() % g.degree());
      EXPECT_EQ(g.order(), orbit(g, x).size() * stabilizer_point(g, x).order());
      auto y = static_cast<Point>(rng() % g.degree());
      if (y == x) y = static_cast<Point>((x + 1) % g.degree());
      const Point pair[] = {x, y};
      const auto pointwise = stabilizer_points(g, pair);
      const auto setwise = stabilizer_edge(g, x, y);
      for (const auto& h : pointwise.generators()) EXPECT_TRUE(setwise.contains(h));
      const auto index = setwise.order() / pointwise.order();
      EXPECT_EQ(setwise.order() % pointwise.order(), 0u);
      EXPECT_TRUE(index == 1 || index == 2);
      // Brute force: some element swaps x and y iff the index is 2.
      bool swaps = false;
      for (const auto& e : closure(g.degree(), g.generators())) swaps = swaps || (e[x] == y && e[y] == x);
      EXPECT_EQ(swaps, index == 2);
    }
  }
}

TEST(ProjectiveLineTest, SemilinearGroup) {
  const auto g = pgammal_2_8();
  EXPECT_EQ(g.order(), 1512u);
  EXPECT_EQ(closure(9, g.generators()).size(), 1512u);
  EXPECT_TRUE(is_k_transitive(g, 3));
  EXPECT_FALSE(is_k_transitive(g, 4));

  // Orbit of one ordered 3-tuple and one ordered 4-tuple, by direct enumeration.
  const auto elements = closure(9, g.generators());
  std::set<std::vector<Point>> triples, quads;
  for (const auto& e : elements) {
    triples.insert({e[0], e[1], e[2]});
    quads.insert({e[0], e[1], e[2], e[3]});
  }
  EXPECT_EQ(triples.size(), 9u * 8 * 7);
  EXPECT_LT(quads.size(), 9u * 8 * 7 * 6);

  const auto pgl = pgl_2_8();
  EXPECT_EQ(pgl.order(), 504u);
  for (const auto& h : pgl.generators()) EXPECT_TRUE(g.contains(h));
  EXPECT_TRUE(is_k_transitive(pgl, 3));
}

TEST(InducedActionTest, EdgeAction) {
  const auto c5 = make_cycle(5);
  const auto trivial_action = induced_edge_action(PermGroup::trivial(5), c5);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(trivial_action.apply(Permutation::identity(5), k), k);
  EXPECT_TRUE(is_transitive(induced_edge_group(dihedral_group(5), c5)));
  EXPECT_TRUE(is_transitive(induced_edge_group(symmetric_group(4), make_complete(4))));
  EXPECT_THROW(induced_edge_group(symmetric_group(5), c5), NotAnAutomorphism);
}

TEST(InducedActionTest, SubdivisionAction) {
  const auto c5 = subdivide(make_cycle(5));
  const auto d10 = induced_subdivision_action(dihedral_group(5), c5);
  EXPECT_EQ(d10.degree(), 10u);
  EXPECT_EQ(d10.order(), 10u);
  const auto aut_c10 = automorphism_group(c5.graph());
  EXPECT_EQ(aut_c10.order(), 20u);
  for (const auto& h : d10.generators()) EXPECT_TRUE(aut_c10.contains(h));

  const auto sp = subdivide(make_petersen());
  const auto s5 = induced_subdivision_action(automorphism_group(make_petersen()), sp);
  EXPECT_EQ(s5.order(), 120u);
  EXPECT_NO_THROW(validate_automorphisms(sp.graph(), s5));
}

TEST(InducedActionProperty, FaithfulAndValid) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 40; ++i) {
    const auto g = testing::seeded_connected_graph(rng, 2, 8);
    const auto aut = automorphism_group(g);
    const auto sg = subdivide(g);
    for (const auto& h : random_subgroups(aut, 3, rng())) {
      const auto image = induced_subdivision_action(h, sg);
      EXPECT_EQ(image.order(), h.order());
      EXPECT_NO_THROW(validate_automorphisms(sg.graph(), image));
    }
  }
}

TEST(RandomSubgroupsTest, ShapeAndDeterminism) {
  const auto s6 = symmetric_group(6);
  const auto none = random_subgroups(s6, 0, 5);
  ASSERT_EQ(none.size(), 2u);
  EXPECT_EQ(none[0].order(), 1u);
  EXPECT_EQ(none[1].order(), 720u);

  const auto a = random_subgroups(s6, 8, 99);
  const auto b = random_subgroups(s6, 8, 99);
  ASSERT_EQ(a.size(), 10u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].generators(), b[i].generators());
    EXPECT_EQ(720u % a[i].order(), 0u);
    for (const auto& h : a[i].generators()) EXPECT_TRUE(s6.contains(h));
  }
}

TEST(DerivedSubgroupTest, SmallGroups) {
  EXPECT_EQ(derived_subgroup(symmetric_group(5)).order(), 60u);
  EXPECT_EQ(derived_subgroup(dihedral_group(6)).order(), 3u);
  EXPECT_EQ(derived_subgroup(cyclic_rotation_group(7)).order(), 1u);
  EXPECT_EQ(derived_subgroup(pgammal_2_8()).order(), 504u);
}

TEST(PermGroupConcurrency, FirstQueriesFromManyThreads) {
  const auto reference = pgammal_2_8().order();
  for (int round = 0; round < 5; ++round) {
    const PermGroup g = pgammal_2_8();
    std::vector<std::thread> threads;
    std::vector<std::uint64_t> orders(8);
    for (std::size_t t = 0; t < orders.size(); ++t) {
      threads.emplace_back([&, t] { orders[t] = g.order(); });
    }
    for (auto& t : threads) t.join();
    for (auto o : orders) EXPECT_EQ(o, reference);
  }
}

TEST(GroupFixturesTest, OrdersAndActions) {
  struct Fixture {
    const char* file;
    std::uint64_t order;
    Graph graph;
  };
  const std::vector<Fixture> fixtures{
      {"d10.gens", 10, make_cycle(5)},
      {"d32.gens", 32, make_cycle(16)},
      {"d34.gens", 34, make_cycle(17)},
      {"s3.gens", 6, make_complete(3)},
      {"s4.gens", 24, make_complete(4)},
      {"s5.gens", 120, make_complete(5)},
      {"s6.gens", 720, make_complete(6)},
      {"a5.gens", 60, make_complete(5)},
      {"pgl_2_8.gens", 504, make_complete(9)},
      {"pgammal_2_8.gens", 1512, make_complete(9)},
      {"s3_wr_s2.gens", 72, make_complete_bipartite(3, 3)},
      {"s3_x_s3.gens", 36, make_complete_bipartite(3, 3)},
      {"petersen_aut.gens", 120, make_petersen()},
      {"hoffman_singleton_aut.gens", 252000, make_hoffman_singleton()},
  };
  for (const auto& f : fixtures) {
    SCOPED_TRACE(f.file);
    const auto g = testing::load_group(f.file);
    EXPECT_EQ(g.order(), f.order);
    EXPECT_NO_THROW(validate_automorphisms(f.graph, g));
    if (f.order <= 2000) EXPECT_EQ(closure(g.degree(), g.generators()).size(), f.order);
  }
}

}  // namespace
}  // namespace subdivsym
