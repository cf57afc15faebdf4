#ifndef SUBDIVSYM_CORPUS_HPP
#define SUBDIVSYM_CORPUS_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "subdivsym/automorphism.hpp"
#include "subdivsym/constructions.hpp"
#include "subdivsym/io.hpp"
#include "subdivsym/projective_line.hpp"
#include "subdivsym/theorems.hpp"

namespace subdivsym {

enum class FamilyName { Complete, CompleteBipartite, Cycle, Petersen, HoffmanSingleton };

struct FamilySpec {
  FamilyName name = FamilyName::Complete;
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// Everything defaults to empty, so an empty config runs nothing.
struct CorpusConfig {
  std::vector<FamilySpec> families;
  std::size_t random_count = 0;
  std::size_t random_max_n = 7;
  std::size_t s_max = 5;
  std::size_t subgroups = 0;
  bool extra_groups = false;
  std::vector<std::pair<std::size_t, std::size_t>> long_cycles;
  std::uint64_t seed = 1;
  bool heavy = false;
  double budget_seconds = 600;
  std::size_t node_budget = AutomorphismOptions{}.node_budget;
};

namespace detail {

inline std::string family_text(const FamilySpec& f) {
  switch (f.name) {
    case FamilyName::Complete: return "complete:" + std::to_string(f.lo) + ".." + std::to_string(f.hi);
    case FamilyName::CompleteBipartite:
      return "complete-bipartite:" + std::to_string(f.lo) + ".." + std::to_string(f.hi);
    case FamilyName::Cycle: return "cycle:" + std::to_string(f.lo) + ".." + std::to_string(f.hi);
    case FamilyName::Petersen: return "petersen";
    case FamilyName::HoffmanSingleton: return "hoffman-singleton";
  }
  return "?";
}

inline std::optional<std::pair<std::size_t, std::size_t>> parse_span(const std::string& text) {
  const auto dots = text.find("..");
  const auto lo = parse_numbers(text.substr(0, dots));
  if (!lo || lo->size() != 1) return std::nullopt;
  if (dots == std::string::npos) return std::make_pair(lo->front(), lo->front());
  const auto hi = parse_numbers(text.substr(dots + 2));
  if (!hi || hi->size() != 1 || hi->front() < lo->front()) return std::nullopt;
  return std::make_pair(lo->front(), hi->front());
}

inline std::optional<FamilySpec> parse_family(const std::string& token) {
  const auto colon = token.find(':');
  const std::string head = token.substr(0, colon);
  if (head == "petersen" && colon == std::string::npos) return FamilySpec{FamilyName::Petersen, 0, 0};
  if (head == "hoffman-singleton" && colon == std::string::npos) {
    return FamilySpec{FamilyName::HoffmanSingleton, 0, 0};
  }
  if (colon == std::string::npos) return std::nullopt;
  const auto span = parse_span(token.substr(colon + 1));
  if (!span) return std::nullopt;
  if (head == "complete" && span->first >= 2) return FamilySpec{FamilyName::Complete, span->first, span->second};
  if (head == "complete-bipartite" && span->first >= 1) {
    return FamilySpec{FamilyName::CompleteBipartite, span->first, span->second};
  }
  if (head == "cycle" && span->first >= 3) return FamilySpec{FamilyName::Cycle, span->first, span->second};
  return std::nullopt;
}

inline std::optional<bool> parse_bool(const std::string& text) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  return std::nullopt;
}

}  // namespace detail

/// Key-value config: "key = value" per line, '#' comments. Keys:
///   families      comma-separated: complete:A..B, complete-bipartite:A..B,
///                 cycle:A..B, petersen, hoffman-singleton
///   random_count, random_max_n, s_max, subgroups, seed, node_budget
///   extra_groups, heavy   true/false
///   budget_seconds
///   long_cycles   comma-separated n/s pairs
inline CorpusConfig read_config(std::istream& in) {
  detail::LineReader reader(in);
  CorpusConfig config;
  std::string line;
  while (reader.next(line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(reader.line(), "expected \"key = value\"");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto number = [&]() -> std::uint64_t {
      const auto v = detail::parse_numbers(value);
      if (!v || v->size() != 1) throw ParseError(reader.line(), key + " needs a non-negative integer");
      return v->front();
    };
    auto list = [&]() {
      std::vector<std::string> items;
      std::istringstream parts(value);
      std::string item;
      while (std::getline(parts, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
      }
      return items;
    };
    if (key == "families") {
      for (const auto& item : list()) {
        auto f = detail::parse_family(item);
        if (!f) throw ParseError(reader.line(), "unknown family \"" + item + "\"");
        config.families.push_back(*f);
      }
    } else if (key == "random_count") {
      config.random_count = number();
    } else if (key == "random_max_n") {
      config.random_max_n = number();
      if (config.random_max_n < 3) throw ParseError(reader.line(), "random_max_n must be >= 3");
    } else if (key == "s_max") {
      config.s_max = number();
    } else if (key == "subgroups") {
      config.subgroups = number();
    } else if (key == "seed") {
      config.seed = number();
    } else if (key == "node_budget") {
      config.node_budget = number();
    } else if (key == "extra_groups" || key == "heavy") {
      const auto b = detail::parse_bool(value);
      if (!b) throw ParseError(reader.line(), key + " needs true or false");
      (key == "heavy" ? config.heavy : config.extra_groups) = *b;
    } else if (key == "budget_seconds") {
      try {
        std::size_t used = 0;
        config.budget_seconds = std::stod(value, &used);
        if (used != value.size() || config.budget_seconds <= 0) throw std::invalid_argument(value);
      } catch (const std::logic_error&) {
        throw ParseError(reader.line(), "budget_seconds needs a positive number");
      }
    } else if (key == "long_cycles") {
      for (const auto& item : list()) {
        const auto slash = item.find('/');
        const auto n = detail::parse_numbers(item.substr(0, slash));
        const auto s = slash == std::string::npos ? std::nullopt
                                                  : detail::parse_numbers(item.substr(slash + 1));
        if (!n || !s || n->size() != 1 || s->size() != 1) {
          throw ParseError(reader.line(), "long_cycles entries look like n/s");
        }
        config.long_cycles.emplace_back(n->front(), s->front());
      }
    } else {
      throw ParseError(reader.line(), "unknown key \"" + key + "\"");
    }
  }
  return config;
}

inline CorpusConfig parse_config(const std::string& text) {
  std::istringstream in(text);
  return read_config(in);
}

inline Json to_json(const CorpusConfig& c) {
  Json j;
  Json families = Json::array();
  for (const auto& f : c.families) families.push_back(detail::family_text(f));
  j["families"] = families;
  j["random_count"] = c.random_count;
  j["random_max_n"] = c.random_max_n;
  j["s_max"] = c.s_max;
  j["subgroups"] = c.subgroups;
  j["extra_groups"] = c.extra_groups;
  Json cycles = Json::array();
  for (const auto& [n, s] : c.long_cycles) cycles.push_back(std::to_string(n) + "/" + std::to_string(s));
  j["long_cycles"] = cycles;
  j["seed"] = c.seed;
  j["heavy"] = c.heavy;
  j["budget_seconds"] = c.budget_seconds;
  j["node_budget"] = c.node_budget;
  return j;
}

/// One line reproducing the configuration, in config-file syntax.
inline std::string effective_config_line(const CorpusConfig& c) {
  std::ostringstream out;
  out << "families=";
  for (std::size_t i = 0; i < c.families.size(); ++i) out << (i ? "," : "") << detail::family_text(c.families[i]);
  out << "; random_count=" << c.random_count << "; random_max_n=" << c.random_max_n
      << "; s_max=" << c.s_max << "; subgroups=" << c.subgroups
      << "; extra_groups=" << (c.extra_groups ? "true" : "false") << "; long_cycles=";
  for (std::size_t i = 0; i < c.long_cycles.size(); ++i) {
    out << (i ? "," : "") << c.long_cycles[i].first << '/' << c.long_cycles[i].second;
  }
  out << "; seed=" << c.seed << "; heavy=" << (c.heavy ? "true" : "false")
      << "; budget_seconds=" << c.budget_seconds << "; node_budget=" << c.node_budget;
  return out.str();
}

struct CorpusItem {
  std::string name;
  Graph graph;
  std::optional<TableRow> row;
  std::size_t row_n = 0;
  bool heavy = false;
  /// Set for K_{n,n}: n.
  std::optional<std::size_t> bipartite_n;
  std::vector<std::pair<std::string, PermGroup>> extra_groups;
};

/// Random connected graphs for the sweeps, n uniform in [3, max_n].
inline std::vector<Graph> random_corpus_graphs(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = 3 + static_cast<std::size_t>(uniform_below(rng, max_n - 2));
    const auto density = static_cast<unsigned>(uniform_below(rng, 601));
    out.push_back(random_connected_graph(n, density, rng));
  }
  return out;
}

inline std::vector<CorpusItem> corpus_items(const CorpusConfig& c) {
  std::vector<CorpusItem> items;
  for (const auto& f : c.families) {
    switch (f.name) {
      case FamilyName::Complete:
        for (std::size_t n = f.lo; n <= f.hi; ++n) {
          CorpusItem item{"K" + std::to_string(n), make_complete(n), std::nullopt, n, false, std::nullopt, {}};
          if (n == 2) item.row = TableRow::K2;
          if (n == 3) item.row = TableRow::K3;
          if (n >= 4) item.row = TableRow::Kn;
          if (c.extra_groups && n >= 4) {
            item.extra_groups.emplace_back("A" + std::to_string(n), alternating_group(n));
          }
          if (c.extra_groups && n == 9) {
            item.extra_groups.emplace_back("PGL(2,8)", pgl_2_8());
            item.extra_groups.emplace_back("PGammaL(2,8)", pgammal_2_8());
          }
          items.push_back(std::move(item));
        }
        break;
      case FamilyName::CompleteBipartite:
        for (std::size_t n = f.lo; n <= f.hi; ++n) {
          CorpusItem item{"K" + std::to_string(n) + "," + std::to_string(n), make_complete_bipartite(n, n),
                          std::nullopt, n, false, n, {}};
          if (n >= 2) item.row = TableRow::Knn;
          if (c.extra_groups) {
            item.extra_groups.emplace_back("S" + std::to_string(n) + "xS" + std::to_string(n),
                                           direct_product_symmetric(n));
          }
          items.push_back(std::move(item));
        }
        break;
      case FamilyName::Cycle:
        for (std::size_t n = f.lo; n <= f.hi; ++n) {
          CorpusItem item{"C" + std::to_string(n), make_cycle(n), std::nullopt, n, false, std::nullopt, {}};
          if (n == 5) item.row = TableRow::C5;
          if (c.extra_groups) {
            item.extra_groups.emplace_back("rotations", cyclic_rotation_group(n));
            if (n % 2 == 0 && n >= 4) item.extra_groups.emplace_back("half-dihedral", half_dihedral_group(n));
          }
          items.push_back(std::move(item));
        }
        break;
      case FamilyName::Petersen:
        items.push_back({"Petersen", make_petersen(), TableRow::Petersen, 0, false, std::nullopt, {}});
        break;
      case FamilyName::HoffmanSingleton:
        items.push_back({"HoffmanSingleton", make_hoffman_singleton(), TableRow::HoffmanSingleton, 0, true,
                         std::nullopt, {}});
        break;
    }
  }
  const auto randoms = random_corpus_graphs(c.random_count, c.random_max_n, c.seed);
  for (std::size_t i = 0; i < randoms.size(); ++i) {
    items.push_back({"random" + std::to_string(i) + "(n=" + std::to_string(randoms[i].order()) +
                         ",m=" + std::to_string(randoms[i].size()) + ")",
                     randoms[i], std::nullopt, 0, false, std::nullopt, {}});
  }
  return items;
}

/// Every check for one (Σ, G) pair, in a fixed order.
inline std::vector<CheckOutcome> checks_for_group(const CorpusItem& item, const PermGroup& group,
                                                  const std::string& group_name, std::size_t s_max) {
  std::vector<CheckOutcome> out;
  const Setting st(item.graph, group, item.name, group_name);
  for (std::size_t s = 1; s <= s_max; ++s) out.push_back(check_arc_equivalence(st, s));
  for (std::size_t s = 1; s <= s_max; ++s) out.push_back(check_distance_equivalence(st, s));
  out.push_back(check_small_s_equivalence(st));
  out.push_back(check_edge_stabilizer(st));
  for (std::size_t s = 2; s <= s_max; s += 2) out.push_back(check_girth_bound(st, s));
  out.push_back(check_girth_five_arc(st));
  if (item.row) out.push_back(check_table_row(*item.row, item.row_n, group, group_name));
  if (item.bipartite_n && *item.bipartite_n >= 2) {
    out.push_back(check_bipartite_conditions(*item.bipartite_n, group, group_name));
  }
  return out;
}

/// |Aut(S(Σ))| equals |Aut(Σ)| off cycles and 4n on C_n; girth doubles.
inline CheckOutcome check_subdivision_structure(const Graph& g, const std::string& graph_name,
                                                const PermGroup& aut, const AutomorphismOptions& options) {
  const std::string name = "subdivision-structure";
  const InstanceLabel label{graph_name, "Aut", std::nullopt};
  if (g.order() < 2 || !is_connected(g)) return detail::skipped(name, label, "needs a connected graph, n >= 2");
  const auto sg = subdivide(g);
  const auto aut_sub = automorphism_group(sg.graph(), options);
  const bool cycle = detail::is_cycle_graph(g);
  const std::uint64_t expected = cycle ? 4 * g.order() : aut.order();
  const auto gb = girth(g);
  const auto gs = girth(sg.graph());
  const bool girth_ok = gb ? (gs && *gs == 2 * *gb) : !gs;
  Json details;
  details["aut_order"] = aut.order();
  details["aut_subdivision_order"] = aut_sub.order();
  details["expected_subdivision_order"] = expected;
  details["girth"] = gb ? Json(*gb) : Json("acyclic");
  details["girth_subdivision"] = gs ? Json(*gs) : Json("acyclic");
  return detail::decided(name, label, aut_sub.order() == expected && girth_ok, std::move(details),
                         "automorphism order or girth relation fails");
}

struct CorpusSummary {
  std::size_t confirmed = 0;
  std::size_t refuted = 0;
  std::size_t skipped = 0;
};

inline CorpusSummary summarize(const std::vector<CheckOutcome>& outcomes) {
  CorpusSummary s;
  for (const auto& o : outcomes) {
    if (o.status == Status::Confirmed) ++s.confirmed;
    else if (o.status == Status::Refuted) ++s.refuted;
    else ++s.skipped;
  }
  return s;
}

inline Json to_json(const CorpusSummary& s) {
  Json j;
  j["confirmed"] = s.confirmed;
  j["refuted"] = s.refuted;
  j["skipped"] = s.skipped;
  return j;
}

/// Runs the whole corpus. Items that start after the wall-clock budget is
/// spent, or whose automorphism search runs out of nodes, produce skipped
/// outcomes. Heavy items are skipped unless `heavy` is set. A sampled subgroup
/// equal to one already listed is dropped. `progress`, if
/// given, is called with each item name before it runs.
inline std::vector<CheckOutcome> run_corpus(const CorpusConfig& c,
                                            const std::function<void(const std::string&)>& progress = {}) {
  const auto start = std::chrono::steady_clock::now();
  auto over_budget = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > c.budget_seconds;
  };
  const AutomorphismOptions options{c.node_budget};
  std::vector<CheckOutcome> outcomes;
  const auto items = corpus_items(c);
  for (std::size_t index = 0; index < items.size(); ++index) {
    const auto& item = items[index];
    const InstanceLabel label{item.name, "*", std::nullopt};
    if (item.heavy && !c.heavy) {
      outcomes.push_back(detail::skipped("item", label, "heavy item; enable heavy"));
      continue;
    }
    if (over_budget()) {
      outcomes.push_back(detail::skipped("item", label, "budget exhausted"));
      continue;
    }
    if (progress) progress(item.name);
    try {
      outcomes.push_back(check_distance_formula(item.graph, item.name));
      outcomes.push_back(check_reconstruction(item.graph, item.name, options));
      const auto aut = automorphism_group(item.graph, options);
      outcomes.push_back(check_subdivision_structure(item.graph, item.name, aut, options));

      std::vector<std::pair<std::string, PermGroup>> groups;
      if (item.heavy) {
        groups.emplace_back("Aut", aut);
        groups.emplace_back("Aut'", derived_subgroup(aut));
      } else {
        const auto sampled = random_subgroups(aut, c.subgroups, c.seed + 7919 * (index + 1));
        groups.emplace_back("trivial", sampled[0]);
        groups.emplace_back("Aut", sampled[1]);
        for (std::size_t k = 2; k < sampled.size(); ++k) {
          const bool repeat = std::any_of(groups.begin(), groups.end(), [&](const auto& named) {
            return same_group(named.second, sampled[k]);
          });
          if (!repeat) groups.emplace_back("sample" + std::to_string(k - 1), sampled[k]);
        }
      }
      for (const auto& extra : item.extra_groups) groups.push_back(extra);
      for (const auto& [group_name, group] : groups) {
        if (over_budget()) {
          outcomes.push_back(detail::skipped("group", {item.name, group_name, std::nullopt}, "budget exhausted"));
          continue;
        }
        for (auto& o : checks_for_group(item, group, group_name, c.s_max)) {
          o.details["group_order"] = group.order();
          outcomes.push_back(std::move(o));
        }
      }
    } catch (const BudgetExceeded& e) {
      outcomes.push_back(detail::skipped("item", label, e.what()));
    }
  }
  for (const auto& [n, s] : c.long_cycles) {
    if (over_budget()) {
      outcomes.push_back(detail::skipped("long-cycle", {"C" + std::to_string(n), "*", s}, "budget exhausted"));
      continue;
    }
    if (progress) progress("C" + std::to_string(n) + " s=" + std::to_string(s));
    outcomes.push_back(check_long_cycle(n, s, c.seed));
  }
  return outcomes;
}

/// The machine-readable report: config, outcomes, summary. No timings, so
/// reruns with the same config produce identical bytes.
inline Json corpus_report(const CorpusConfig& c, const std::vector<CheckOutcome>& outcomes) {
  Json j;
  j["tool"] = "subdivsym";
  j["format"] = 1;
  j["config"] = to_json(c);
  Json list = Json::array();
  for (const auto& o : outcomes) list.push_back(to_json(o));
  j["outcomes"] = std::move(list);
  j["summary"] = to_json(summarize(outcomes));
  return j;
}

}  // namespace subdivsym

#endif  // SUBDIVSYM_CORPUS_HPP
