#ifndef SUBDIVSYM_IO_HPP
#define SUBDIVSYM_IO_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "subdivsym/error.hpp"
#include "subdivsym/graph.hpp"
#include "subdivsym/perm.hpp"
#include "subdivsym/permgroup.hpp"
#include "subdivsym/transforms.hpp"

namespace subdivsym {

namespace detail {

/// Yields (line number, content) for non-blank lines with '#' comments
/// stripped.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = raw.find_last_not_of(" \t\r");
      out = raw.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

/// Parses all whitespace-separated tokens of `text` as unsigned integers;
/// nullopt on anything else.
inline std::optional<std::vector<std::uint64_t>> parse_numbers(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::uint64_t> out;
  std::string token;
  while (in >> token) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos ||
        token.size() > 18) {
      return std::nullopt;
    }
    out.push_back(std::stoull(token));
  }
  return out;
}

/// "V=a..b" or "E=a..b" into (a, b); b may be a-1 for an empty range.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_range(std::string_view text,
                                                                         char tag) {
  if (text.size() < 3 || text[0] != tag || text[1] != '=') return std::nullopt;
  text.remove_prefix(2);
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) return std::nullopt;
  const auto lo = parse_numbers(std::string(text.substr(0, dots)));
  const auto hi = parse_numbers(std::string(text.substr(dots + 2)));
  if (!lo || !hi || lo->size() != 1 || hi->size() != 1) return std::nullopt;
  return std::make_pair(lo->front(), hi->front());
}

}  // namespace detail

/// An edge-list file: the graph and, when a "parts:" line is present, the
/// sizes of the V- and E-parts it declares.
struct EdgeListFile {
  Graph graph;
  std::optional<std::pair<std::size_t, std::size_t>> parts;
};

/// Format: "n m", then m lines "u v" with 0 <= u < v < n. '#' starts a
/// comment. An optional line "parts: V=0..a E=a+1..n-1" tags a subdivision.
inline EdgeListFile read_edge_list_file(std::istream& in) {
  detail::LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line(), "missing \"n m\" header");
  const auto header = detail::parse_numbers(line);
  if (!header || header->size() != 2) throw ParseError(reader.line(), "expected \"n m\"");
  const auto n = static_cast<std::size_t>((*header)[0]);
  const auto m = static_cast<std::size_t>((*header)[1]);
  if (n > (1u << 24)) throw ParseError(reader.line(), "vertex count too large");

  EdgeListFile file;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (reader.next(line)) {
    if (line.starts_with("parts:")) {
      std::istringstream fields(line.substr(6));
      std::string vtext, etext, extra;
      fields >> vtext >> etext;
      const auto vr = detail::parse_range(vtext, 'V');
      const auto er = detail::parse_range(etext, 'E');
      if (!vr || !er || (fields >> extra) || vr->first != 0 || er->first != vr->second + 1 ||
          er->second + 1 != n) {
        throw ParseError(reader.line(), "malformed parts line");
      }
      file.parts = std::make_pair(static_cast<std::size_t>(vr->second + 1),
                                  static_cast<std::size_t>(er->second - er->first + 1));
      continue;
    }
    const auto pair = detail::parse_numbers(line);
    if (!pair || pair->size() != 2) throw ParseError(reader.line(), "expected \"u v\"");
    const auto u = (*pair)[0];
    const auto v = (*pair)[1];
    if (u >= v) throw ParseError(reader.line(), "edge must satisfy u < v");
    if (v >= n) throw ParseError(reader.line(), "vertex " + std::to_string(v) + " out of range");
    const Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(e).second) throw ParseError(reader.line(), "duplicate edge");
    edges.push_back(e);
  }
  if (edges.size() != m) {
    throw ParseError(reader.line(), "header announces " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
  }
  file.graph = Graph::from_edges(n, std::move(edges));
  return file;
}

inline Graph read_edge_list(std::istream& in) { return read_edge_list_file(in).graph; }

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g, std::string_view comment = {}) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

/// Edge list of S(g) with the part-tag line.
inline void write_subdivision(std::ostream& out, const SubdivisionGraph& sg,
                              std::string_view comment = {}) {
  if (!comment.empty()) out << "# " << comment << '\n';
  const auto n = sg.vertex_part_size();
  const auto total = sg.graph().order();
  out << total << ' ' << sg.graph().size() << '\n';
  out << "parts: V=0.." << (n == 0 ? 0 : n - 1) << " E=" << n << ".." << (total - 1) << '\n';
  for (const auto& [u, v] : sg.graph().edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

/// Format: "degree k", then k lines each holding the image list of one
/// generator. '#' starts a comment.
inline PermGroup read_generators(std::istream& in) {
  detail::LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line(), "missing \"degree k\" header");
  std::istringstream head(line);
  std::string word;
  head >> word;
  if (word != "degree") throw ParseError(reader.line(), "expected \"degree k\"");
  std::string rest;
  std::getline(head, rest);
  const auto numbers = detail::parse_numbers(rest);
  if (!numbers || numbers->size() != 2) throw ParseError(reader.line(), "expected \"degree k\"");
  const auto degree = static_cast<std::size_t>((*numbers)[0]);
  const auto count = static_cast<std::size_t>((*numbers)[1]);
  std::vector<Permutation> gens;
  while (reader.next(line)) {
    const auto images = detail::parse_numbers(line);
    if (!images || images->size() != degree) {
      throw ParseError(reader.line(), "expected " + std::to_string(degree) + " images");
    }
    std::vector<Point> points(images->begin(), images->end());
    try {
      gens.push_back(Permutation::from_images(std::move(points)));
    } catch (const InvalidArgument& e) {
      throw ParseError(reader.line(), e.what());
    }
  }
  if (gens.size() != count) {
    throw ParseError(reader.line(), "header announces " + std::to_string(count) +
                                        " generators, found " + std::to_string(gens.size()));
  }
  return PermGroup(degree, std::move(gens));
}

inline PermGroup parse_generators(const std::string& text) {
  std::istringstream in(text);
  return read_generators(in);
}

inline void write_generators(std::ostream& out, const PermGroup& group, std::string_view comment = {}) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "degree " << group.degree() << ' ' << group.generators().size() << '\n';
  for (const auto& g : group.generators()) {
    for (std::size_t i = 0; i < g.degree(); ++i) out << (i ? " " : "") << g[static_cast<Point>(i)];
    out << '\n';
  }
}

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 15];
  return out;
}

}  // namespace subdivsym

#endif  // SUBDIVSYM_IO_HPP
