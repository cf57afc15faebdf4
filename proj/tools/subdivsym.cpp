// subdivsym: build graphs, transform them, analyze (local) (G,s)-transitivity
// and run the check corpus.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subdivsym/automorphism.hpp"
#include "subdivsym/constructions.hpp"
#include "subdivsym/corpus.hpp"
#include "subdivsym/induced_action.hpp"
#include "subdivsym/io.hpp"
#include "subdivsym/report.hpp"
#include "subdivsym/symmetry.hpp"
#include "subdivsym/transforms.hpp"

namespace fs = std::filesystem;
using namespace subdivsym;

namespace {

constexpr int kExitRefuted = 1;
constexpr int kExitError = 2;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed: " + path.string());
}

EdgeListFile load_graph(const fs::path& path) {
  std::istringstream in(slurp(path));
  try {
    return read_edge_list_file(in);
  } catch (const ParseError& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

std::string graph_text(const Graph& g, const std::string& comment) {
  std::ostringstream out;
  write_edge_list(out, g, comment);
  return out.str();
}

struct BuildOptions {
  std::string family;
  std::vector<std::size_t> params;
  std::string out;
};

struct TransformOptions {
  std::string op;
  std::string in;
  std::string out;
};

struct AnalyzeOptions {
  std::string graph;
  std::string group = "aut";
  std::string property = "local-s-distance";
  std::string s_range = "1";
  bool on_subdivision = false;
  std::uint64_t seed = 1;
  std::size_t node_budget = AutomorphismOptions{}.node_budget;
  std::string out;
};

struct VerifyOptions {
  std::string config;
  bool heavy = false;
  std::optional<double> budget;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool quiet = false;
};

Graph build_family(const BuildOptions& o) {
  auto need = [&](std::size_t count) {
    if (o.params.size() != count) {
      throw InvalidArgument(o.family + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (o.family == "complete") {
    need(1);
    if (o.params[0] < 1) throw InvalidArgument("complete needs n >= 1");
    return make_complete(o.params[0]);
  }
  if (o.family == "complete-bipartite") {
    if (o.params.size() == 1) return make_complete_bipartite(o.params[0], o.params[0]);
    need(2);
    return make_complete_bipartite(o.params[0], o.params[1]);
  }
  if (o.family == "cycle") {
    need(1);
    return make_cycle(o.params[0]);
  }
  if (o.family == "petersen") {
    need(0);
    return make_petersen();
  }
  if (o.family == "hoffman-singleton") {
    need(0);
    return make_hoffman_singleton();
  }
  throw InvalidArgument("unknown family " + o.family);
}

int run_build(const BuildOptions& o) {
  std::cout << "effective config: build " << o.family;
  for (auto p : o.params) std::cout << ' ' << p;
  std::cout << (o.out.empty() ? "" : " --out " + o.out) << '\n';
  const auto g = build_family(o);
  std::string label = o.family;
  for (auto p : o.params) label += " " + std::to_string(p);
  const auto text = graph_text(g, label);
  if (o.out.empty()) std::cout << text;
  else write_file(o.out, text);
  std::cerr << "built " << label << ": " << g.order() << " vertices, " << g.size() << " edges\n";
  return 0;
}

int run_transform(const TransformOptions& o) {
  std::cout << "effective config: transform " << o.op << " --in " << o.in
            << (o.out.empty() ? "" : " --out " + o.out) << '\n';
  const auto file = load_graph(o.in);
  const std::string source = fs::path(o.in).filename().string();
  auto emit = [&](const std::string& path, const std::string& text) {
    if (path.empty()) std::cout << text;
    else write_file(path, text);
  };
  if (o.op == "subdivide") {
    std::ostringstream out;
    write_subdivision(out, subdivide(file.graph), "subdivision of " + source);
    emit(o.out, out.str());
  } else if (o.op == "line") {
    emit(o.out, graph_text(line_graph(file.graph), "line graph of " + source));
  } else if (o.op == "reconstruct") {
    const auto base = file.parts ? reconstruct_tagged(file.graph, file.parts->first)
                                 : reconstruct_from_ambient(file.graph);
    emit(o.out, graph_text(base, "reconstructed from " + source));
  } else if (o.op == "dist2") {
    const auto components = distance_two_graph(file.graph);
    for (std::size_t c = 0; c < components.size(); ++c) {
      const auto& comp = components[c];
      std::ostringstream out;
      out << "# component " << c << " of the distance-2 graph of " << source << "\n# original ids:";
      for (Vertex v : comp.vertices) out << ' ' << v;
      out << '\n';
      write_edge_list(out, comp.graph);
      if (o.out.empty()) {
        std::cout << out.str();
      } else {
        write_file(o.out + "." + std::to_string(c), out.str());
      }
    }
    std::cerr << components.size() << " component(s)\n";
  } else {
    throw InvalidArgument("unknown transform " + o.op);
  }
  return 0;
}

/// Aut(g), cached as "<graph file>.aut.<content hash>.gens".
PermGroup cached_automorphism_group(const fs::path& graph_path, const Graph& g,
                                    const AutomorphismOptions& options) {
  const auto hash = hex64(fnv1a(to_edge_list(g)));
  const fs::path cache = graph_path.string() + ".aut." + hash + ".gens";
  if (fs::exists(cache)) {
    try {
      auto group = parse_generators(slurp(cache));
      validate_automorphisms(g, group);
      std::cerr << "using cached automorphism group " << cache.string() << '\n';
      return group;
    } catch (const Error& e) {
      std::cerr << "ignoring stale cache " << cache.string() << ": " << e.what() << '\n';
    }
  }
  auto group = automorphism_group(g, options);
  std::ostringstream out;
  write_generators(out, group, "automorphism group, order " + std::to_string(group.order()));
  try {
    write_file(cache, out.str());
  } catch (const Error& e) {
    std::cerr << "cannot cache automorphism group: " << e.what() << '\n';
  }
  return group;
}

int run_analyze(const AnalyzeOptions& o) {
  std::cout << "effective config: analyze --graph " << o.graph << " --group " << o.group << " --property "
            << o.property << " --s " << o.s_range << (o.on_subdivision ? " --on-subdivision" : "")
            << " --seed " << o.seed << " --node-budget " << o.node_budget
            << (o.out.empty() ? "" : " --out " + o.out) << '\n';
  const auto started = std::chrono::steady_clock::now();
  const auto span = detail::parse_span(o.s_range);
  if (!span || span->first == 0) throw InvalidArgument("--s expects A or A..B with 1 <= A <= B");
  const auto probe = PropertyKind::parse(o.property);
  if (!probe) throw InvalidArgument("unknown property " + o.property);

  const auto file = load_graph(o.graph);
  const Graph& base = file.graph;
  const AutomorphismOptions options{o.node_budget};
  PermGroup group = o.group == "aut" ? cached_automorphism_group(o.graph, base, options)
                                     : parse_generators(slurp(o.group));
  validate_automorphisms(base, group);

  Graph target = base;
  if (o.on_subdivision) {
    const auto sg = subdivide(base);
    group = induced_subdivision_action(group, sg);
    target = sg.graph();
  }
  const ActionContext ctx(target, group);

  std::vector<std::size_t> s_values;
  if (probe->takes_s()) {
    for (std::size_t s = span->first; s <= span->second; ++s) s_values.push_back(s);
  } else {
    s_values.push_back(probe->s);
  }

  Json report;
  report["tool"] = "subdivsym";
  report["format"] = 1;
  report["graph"] = fs::path(o.graph).filename().string();
  report["graph_hash"] = hex64(fnv1a(to_edge_list(base)));
  report["group"] = o.group == "aut" ? "aut" : fs::path(o.group).filename().string();
  report["group_order"] = group.order();
  report["on_subdivision"] = o.on_subdivision;
  report["order"] = target.order();
  report["size"] = target.size();
  Json reports = Json::array();
  for (auto s : s_values) {
    const auto kind = PropertyKind::parse(o.property, s);
    const auto r = evaluate(ctx, *kind);
    std::cout << r.kind.name() << " s=" << r.kind.s << ": " << (r.verdict ? "true" : "false");
    if (r.witness) {
      std::cout << "  (" << r.witness->reason << " at level " << r.witness->level;
      if (r.witness->vertex) std::cout << ", vertex " << *r.witness->vertex;
      std::cout << ')';
    }
    std::cout << '\n';
    reports.push_back(to_json(r));
  }
  report["reports"] = std::move(reports);
  const auto text = report.dump(2) + "\n";
  if (!o.out.empty()) write_file(o.out, text);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::cout << "|G| = " << group.order() << ", elapsed " << seconds << " s\n";
  return 0;
}

int run_verify(const VerifyOptions& o) {
  CorpusConfig config;
  try {
    config = parse_config(slurp(o.config));
  } catch (const ParseError& e) {
    throw Error(o.config + ": " + e.what());
  }
  if (o.heavy) config.heavy = true;
  if (o.budget) config.budget_seconds = *o.budget;
  if (o.seed) config.seed = *o.seed;
  std::cout << "effective config: " << effective_config_line(config) << '\n';
  const auto started = std::chrono::steady_clock::now();
  const auto outcomes = run_corpus(config, [&](const std::string& item) {
    if (!o.quiet) std::cerr << "  running " << item << '\n';
  });
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  const auto summary = summarize(outcomes);
  for (const auto& outcome : outcomes) {
    if (outcome.status != Status::Refuted) continue;
    std::cout << "REFUTED " << outcome.name << " [" << outcome.instance.graph << ", " << outcome.instance.group;
    if (outcome.instance.s) std::cout << ", s=" << *outcome.instance.s;
    std::cout << "]: " << outcome.reason << '\n';
  }
  std::cout << "confirmed " << summary.confirmed << ", refuted " << summary.refuted << ", skipped "
            << summary.skipped << " in " << seconds << " s\n";
  if (!o.out.empty()) write_file(o.out, corpus_report(config, outcomes).dump(2) + "\n");
  return summary.refuted == 0 ? 0 : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subdivision graphs and their (local) (G,s)-transitivity"};
  app.require_subcommand(1);

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Write the edge list of a named graph");
  build_cmd->add_option("family", build.family, "complete | complete-bipartite | cycle | petersen | hoffman-singleton")
      ->required()
      ->check(CLI::IsMember({"complete", "complete-bipartite", "cycle", "petersen", "hoffman-singleton"}));
  build_cmd->add_option("params", build.params, "Family parameters (n, or m n for complete-bipartite)");
  build_cmd->add_option("--out", build.out, "Output file (default: stdout)");

  TransformOptions transform;
  auto* transform_cmd = app.add_subcommand("transform", "Subdivide, line graph, distance-2 components, reconstruct");
  transform_cmd->add_option("op", transform.op, "subdivide | line | dist2 | reconstruct")
      ->required()
      ->check(CLI::IsMember({"subdivide", "line", "dist2", "reconstruct"}));
  transform_cmd->add_option("--in", transform.in, "Input edge list")->required();
  transform_cmd->add_option("--out", transform.out, "Output file; dist2 appends .0, .1, ...");

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Decide a transitivity property for a graph and group");
  analyze_cmd->add_option("--graph", analyze.graph, "Edge-list file")->required();
  analyze_cmd->add_option("--group", analyze.group, "Generator file, or 'aut' for the full automorphism group")
      ->capture_default_str();
  analyze_cmd->add_option("--property", analyze.property,
                          "[local-]arc | [local-]s-arc | [local-]s-distance | [local-]distance")
      ->capture_default_str();
  analyze_cmd->add_option("--s", analyze.s_range, "s or a range A..B")->capture_default_str();
  analyze_cmd->add_flag("--on-subdivision", analyze.on_subdivision,
                        "Analyze S(graph) with the induced action of the group");
  analyze_cmd->add_option("--seed", analyze.seed, "Recorded for reproducibility; the analysis is deterministic")
      ->capture_default_str();
  analyze_cmd->add_option("--node-budget", analyze.node_budget, "Search-node limit for the automorphism search")
      ->capture_default_str();
  analyze_cmd->add_option("--out", analyze.out, "JSON report file");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the check corpus described by a config file");
  verify_cmd->add_option("--config", verify.config, "Config file")->required();
  verify_cmd->add_flag("--heavy", verify.heavy, "Include the heavy items");
  verify_cmd->add_option("--budget", verify.budget, "Wall-clock budget in seconds");
  verify_cmd->add_option("--seed", verify.seed, "Override the config seed");
  verify_cmd->add_option("--out", verify.out, "JSON report file");
  verify_cmd->add_flag("--quiet", verify.quiet, "No progress lines on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (*build_cmd) return run_build(build);
    if (*transform_cmd) return run_transform(transform);
    if (*analyze_cmd) return run_analyze(analyze);
    if (*verify_cmd) return run_verify(verify);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
