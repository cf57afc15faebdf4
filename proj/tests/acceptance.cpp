// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "subdivsym/automorphism.hpp"
#include "subdivsym/constructions.hpp"
#include "subdivsym/corpus.hpp"
#include "subdivsym/metrics.hpp"
#include "subdivsym/projective_line.hpp"
#include "subdivsym/theorems.hpp"
#include "subdivsym/transforms.hpp"

using namespace subdivsym;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    if (failures.size() < 8) failures.push_back(std::move(what));
  }
};

CorpusConfig default_config() {
  std::ifstream in(std::string(SUBDIVSYM_DATA_DIR) + "/configs/default.cfg");
  return read_config(in);
}

std::string label_of(const CheckOutcome& o) {
  std::string s = o.name + " " + o.instance.graph + " [" + o.instance.group + "]";
  if (o.instance.s) s += " s=" + std::to_string(*o.instance.s);
  if (!o.reason.empty()) s += ": " + o.reason;
  return s;
}

struct Tally {
  std::size_t confirmed = 0, refuted = 0, skipped = 0;

  void add(const CheckOutcome& o, Verdict& v) {
    switch (o.status) {
      case Status::Confirmed: ++confirmed; break;
      case Status::Refuted: ++refuted; v.fail(label_of(o)); break;
      case Status::Skipped: ++skipped; break;
    }
  }
  std::string text() const {
    return std::to_string(confirmed) + " agree, " + std::to_string(refuted) + " disagree, " +
           std::to_string(skipped) + " outside preconditions";
  }
};

/// Random corpus graphs with their full group and sampled subgroups.
struct GroupedGraph {
  std::string name;
  Graph graph;
  std::vector<std::pair<std::string, PermGroup>> groups;
};

std::vector<GroupedGraph> random_sweep_corpus(const CorpusConfig& c) {
  std::vector<GroupedGraph> out;
  const auto graphs = random_corpus_graphs(c.random_count, c.random_max_n, c.seed);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    GroupedGraph item{"random" + std::to_string(i), graphs[i], {}};
    const auto aut = automorphism_group(graphs[i]);
    item.groups.emplace_back("Aut", aut);
    std::size_t k = 0;
    for (auto& h : random_subgroups(aut, 8, c.seed + 7919 * (i + 1))) {
      item.groups.emplace_back("sample" + std::to_string(k++), std::move(h));
    }
    out.push_back(std::move(item));
  }
  return out;
}

Verdict distance_formula() {
  Verdict v;
  std::vector<std::pair<std::string, Graph>> graphs;
  for (std::size_t n = 2; n <= 20; ++n) graphs.emplace_back("K" + std::to_string(n), make_complete(n));
  for (std::size_t n = 1; n <= 10; ++n) {
    graphs.emplace_back("K" + std::to_string(n) + "," + std::to_string(n), make_complete_bipartite(n, n));
  }
  for (std::size_t n = 3; n <= 20; ++n) graphs.emplace_back("C" + std::to_string(n), make_cycle(n));
  graphs.emplace_back("Petersen", make_petersen());
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + uniform_below(rng, 11);
    const auto per_mille = static_cast<unsigned>(uniform_below(rng, 601));
    graphs.emplace_back("random" + std::to_string(i), random_connected_graph(n, per_mille, rng));
  }
  std::uint64_t pairs = 0;
  for (const auto& [name, g] : graphs) {
    const auto o = check_distance_formula(g, name);
    if (o.status != Status::Confirmed) v.fail(label_of(o));
    if (o.details.contains("pairs")) pairs += o.details["pairs"].get<std::uint64_t>();
  }
  v.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(pairs) + " vertex pairs";
  return v;
}

Verdict classification_table() {
  Verdict v;
  std::vector<CheckOutcome> outcomes;
  outcomes.push_back(check_table_row(TableRow::K2, 0, symmetric_group(2), "S2"));
  outcomes.push_back(check_table_row(TableRow::K3, 0, symmetric_group(3), "S3"));
  for (std::size_t n = 4; n <= 9; ++n) {
    outcomes.push_back(check_table_row(TableRow::Kn, n, symmetric_group(n), "S" + std::to_string(n)));
    outcomes.push_back(check_table_row(TableRow::Kn, n, alternating_group(n), "A" + std::to_string(n)));
  }
  outcomes.push_back(check_table_row(TableRow::Kn, 9, pgammal_2_8(), "PGammaL(2,8)"));
  outcomes.push_back(check_table_row(TableRow::Kn, 9, pgl_2_8(), "PGL(2,8)"));
  for (std::size_t n = 2; n <= 4; ++n) {
    outcomes.push_back(check_table_row(TableRow::Knn, n, wreath_symmetric_s2(n), "SnwrS2"));
  }
  outcomes.push_back(check_table_row(TableRow::C5, 0, dihedral_group(5), "D10"));
  outcomes.push_back(check_table_row(TableRow::Petersen, 0, automorphism_group(make_petersen()), "S5"));
  Tally t;
  for (const auto& o : outcomes) t.add(o, v);
  v.detail = std::to_string(outcomes.size()) + " rows: " + std::to_string(t.confirmed) + " as tabulated, " +
             std::to_string(t.refuted) + " differ";
  return v;
}

Verdict hoffman_singleton() {
  Verdict v;
  const auto g = make_hoffman_singleton();
  const auto aut = automorphism_group(g);
  if (aut.order() != 252000) v.fail("|Aut| = " + std::to_string(aut.order()));
  const auto derived = derived_subgroup(aut);
  if (derived.order() != 126000) v.fail("|Aut'| = " + std::to_string(derived.order()));
  for (const auto& [name, group] : {std::pair<std::string, const PermGroup&>{"Aut", aut}, {"Aut'", derived}}) {
    const Setting st(g, group, "HoffmanSingleton", name);
    for (std::size_t s = 1; s <= 6; ++s) {
      if (!st.sub_local_distance(s).verdict) v.fail(name + " fails at s=" + std::to_string(s));
    }
  }
  const auto sg = subdivide(g);
  const auto sphere4 = distance_sphere(sg.graph(), sg.edge_vertex(0), 4).size();
  const auto sphere1 = distance_sphere(sg.graph(), 0, 1).size();
  if (sphere4 != 72) v.fail("|sphere_4(e)| = " + std::to_string(sphere4));
  if (sphere1 != 7) v.fail("|sphere_1(v)| = " + std::to_string(sphere1));
  v.detail = "|Aut| = " + std::to_string(aut.order()) + ", |Aut'| = " + std::to_string(derived.order()) +
             ", spheres 72 and 7 checked";
  return v;
}

Verdict arc_sweep(const std::vector<GroupedGraph>& corpus, std::size_t s_max) {
  Verdict v;
  Tally t;
  for (const auto& item : corpus) {
    for (const auto& [name, group] : item.groups) {
      const Setting st(item.graph, group, item.name, name);
      for (std::size_t s = 1; s <= s_max; ++s) t.add(check_arc_equivalence(st, s), v);
    }
  }
  v.detail = t.text();
  return v;
}

Verdict distance_sweep(const std::vector<GroupedGraph>& corpus) {
  Verdict v;
  Tally t;
  for (const auto& item : corpus) {
    const auto d = diameter(item.graph);
    for (const auto& [name, group] : item.groups) {
      const Setting st(item.graph, group, item.name, name);
      for (std::size_t s = 1; s + 1 <= 2 * d; ++s) t.add(check_distance_equivalence(st, s), v);
    }
  }
  v.detail = t.text();
  return v;
}

Verdict structural(const CorpusConfig& c) {
  Verdict v;
  std::vector<std::pair<std::string, Graph>> graphs;
  for (std::size_t n = 2; n <= 12; ++n) graphs.emplace_back("K" + std::to_string(n), make_complete(n));
  for (std::size_t n = 1; n <= 6; ++n) {
    graphs.emplace_back("K" + std::to_string(n) + "," + std::to_string(n), make_complete_bipartite(n, n));
  }
  for (std::size_t n = 3; n <= 20; ++n) graphs.emplace_back("C" + std::to_string(n), make_cycle(n));
  graphs.emplace_back("Petersen", make_petersen());
  const auto random = random_corpus_graphs(c.random_count, c.random_max_n, c.seed);
  for (std::size_t i = 0; i < random.size(); ++i) graphs.emplace_back("random" + std::to_string(i), random[i]);
  Tally t;
  for (const auto& [name, g] : graphs) {
    t.add(check_reconstruction(g, name), v);
    t.add(check_subdivision_structure(g, name, automorphism_group(g), {}), v);
  }
  v.detail = std::to_string(graphs.size()) + " graphs, " + t.text();
  return v;
}

Verdict long_cycles(const CorpusConfig& c) {
  Verdict v;
  Tally t;
  for (const auto& [n, s] : std::vector<std::pair<std::size_t, std::size_t>>{
           {16, 16}, {17, 16}, {17, 17}, {18, 18}, {19, 18}, {19, 19}}) {
    const auto o = check_long_cycle(n, s, c.seed);
    if (o.status == Status::Skipped) v.fail(label_of(o));
    t.add(o, v);
  }
  v.detail = t.text();
  return v;
}

/// Breadth-first closure, independent of the stabilizer chain.
std::size_t closure_size(const PermGroup& g) {
  using Images = std::vector<Point>;
  Images id(g.degree());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Point>(i);
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& x : frontier) {
      for (const auto& gen : g.generators()) {
        Images y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = gen[x[i]];
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

Verdict group_orders() {
  Verdict v;
  std::vector<std::pair<std::string, PermGroup>> groups;
  for (std::size_t n = 3; n <= 12; ++n) groups.emplace_back("D" + std::to_string(2 * n), dihedral_group(n));
  for (std::size_t n = 1; n <= 6; ++n) groups.emplace_back("S" + std::to_string(n), symmetric_group(n));
  groups.emplace_back("PGammaL(2,8)", pgammal_2_8());
  groups.emplace_back("Aut(Petersen)", automorphism_group(make_petersen()));
  for (const auto& [name, g] : groups) {
    const auto brute = closure_size(g);
    if (brute != g.order()) v.fail(name + ": chain " + std::to_string(g.order()) + ", closure " + std::to_string(brute));
  }
  v.detail = std::to_string(groups.size()) + " groups";
  return v;
}

}  // namespace

int main() {
  const auto config = default_config();
  std::vector<GroupedGraph> sweep;
  bool all = true;

  auto run = [&](int index, const std::string& title, double limit_seconds, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = body();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > limit_seconds) {
      v.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
    }
    all = all && v.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << index << "] " << title << ": " << v.detail << " ("
              << timing << ")\n";
    for (const auto& f : v.failures) std::cout << "       " << f << '\n';
    std::cout.flush();
  };

  run(1, "subdivision distance formula", 10, distance_formula);
  run(2, "classification table rows", 60, classification_table);
  run(3, "Hoffman-Singleton subdivision", 600, hoffman_singleton);
  run(4, "arc equivalence sweep", 300, [&] {
    sweep = random_sweep_corpus(config);
    return arc_sweep(sweep, 5);
  });
  run(5, "distance equivalence sweep", 300, [&] { return distance_sweep(sweep); });
  run(6, "structural invariants", 300, [&] { return structural(config); });
  run(7, "long cycles", 30, [&] { return long_cycles(config); });
  run(8, "group orders against closure", 60, group_orders);
  return all ? 0 : 1;
}
