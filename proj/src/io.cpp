#include "addspan/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace addspan {

namespace {

bool read_uint(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Vertex to_vertex(std::size_t lineno, std::string_view tok) {
  std::uint64_t v = 0;
  if (!read_uint(tok, v) || v >= UINT32_MAX) {
    throw ParseError(lineno, "bad vertex '" + std::string(tok) + "'");
  }
  return static_cast<Vertex>(v);
}

Graph assemble(std::size_t n, const std::vector<Edge>& edges,
               const std::vector<std::size_t>& lines) {
  try {
    return Graph(n, edges);
  } catch (const GraphError& err) {
    std::vector<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      Vertex a = std::min(edges[i].u, edges[i].v);
      Vertex b = std::max(edges[i].u, edges[i].v);
      if (a == b || b >= n) throw ParseError(lines[i], err.what());
      seen.emplace_back(a, b);
    }
    std::vector<std::size_t> order(seen.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return seen[x] < seen[y]; });
    std::size_t worst = lines.empty() ? 0 : lines.back();
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (seen[order[i]] == seen[order[i - 1]]) worst = std::min(worst, lines[order[i]]);
    }
    throw ParseError(worst, err.what());
  }
}

Graph read_edgelist(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  std::size_t n = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body(line);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    auto toks = split_ws(body);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw ParseError(lineno, "expected 'u v'");
    Vertex a = to_vertex(lineno, toks[0]);
    Vertex b = to_vertex(lineno, toks[1]);
    n = std::max<std::size_t>(n, std::max(a, b) + 1);
    edges.push_back({a, b});
    lines.push_back(lineno);
  }
  return assemble(n, edges, lines);
}

Graph read_dimacs(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n) throw ParseError(lineno, "second 'p' line");
      std::uint64_t nn = 0, mm = 0;
      if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col") || !read_uint(toks[2], nn) ||
          !read_uint(toks[3], mm) || nn >= UINT32_MAX) {
        throw ParseError(lineno, "expected 'p edge n m'");
      }
      n = nn;
      declared_m = mm;
    } else if (toks[0] == "e") {
      if (!n) throw ParseError(lineno, "'e' line before 'p' line");
      if (toks.size() != 3) throw ParseError(lineno, "expected 'e u v'");
      Vertex a = to_vertex(lineno, toks[1]);
      Vertex b = to_vertex(lineno, toks[2]);
      if (a == 0 || b == 0 || a > *n || b > *n) {
        throw ParseError(lineno, "vertex out of range 1.." + std::to_string(*n));
      }
      edges.push_back({a - 1, b - 1});
      lines.push_back(lineno);
    } else {
      throw ParseError(lineno, "unknown line type '" + std::string(toks[0]) + "'");
    }
  }
  if (!n) throw ParseError(lineno, "missing 'p' line");
  if (edges.size() != declared_m) {
    throw ParseError(lineno, "header declares " + std::to_string(declared_m) + " edges, found " +
                                 std::to_string(edges.size()));
  }
  return assemble(*n, edges, lines);
}

}  // namespace

Graph read_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::Dimacs ? read_dimacs(in) : read_edgelist(in);
}

Graph parse_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_graph(in, format);
}

GraphFormat parse_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::Edgelist;
  if (name == "dimacs") return GraphFormat::Dimacs;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

void write_edgelist(std::ostream& out, const Graph& g) {
  out << "# n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

EdgeMask parse_removal(const Graph& g, std::string_view text) {
  EdgeMask mask = g.empty_mask();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) {
      auto comma = item.find(',');
      std::uint64_t a = 0, b = 0;
      if (comma == std::string_view::npos || !read_uint(item.substr(0, comma), a) ||
          !read_uint(item.substr(comma + 1), b)) {
        throw std::invalid_argument("bad edge '" + std::string(item) + "', expected u,v");
      }
      auto e = (a < g.num_vertices() && b < g.num_vertices())
                   ? g.find_edge(static_cast<Vertex>(a), static_cast<Vertex>(b))
                   : std::nullopt;
      if (!e) throw std::invalid_argument("(" + std::string(item) + ") is not an edge");
      mask.insert(*e);
    }
    pos = end + 1;
  }
  return mask;
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g, const EdgeMask& mask) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (EdgeId e : mask.indices()) {
    const Edge& ed = g.edge(e);
    out.emplace_back(std::min(ed.u, ed.v), std::max(ed.u, ed.v));
  }
  return out;
}

namespace {

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_result(std::ostream& out, const ResultDoc& doc) {
  out << "{\n";
  out << "  \"command\": " << json_string(doc.command) << ",\n";
  out << "  \"verdict\": " << json_string(doc.verdict) << ",\n";
  out << "  \"params\": " << json_string(doc.params) << ",\n";
  out << "  \"k\": " << doc.k << ",\n";
  out << "  \"removed\": [";
  for (std::size_t i = 0; i < doc.removed.size(); ++i) {
    out << (i ? ", " : "") << '[' << doc.removed[i].first << ", " << doc.removed[i].second << ']';
  }
  out << "],\n";
  if (doc.violation) {
    const Violation& v = *doc.violation;
    out << "  \"violation\": {\"x\": " << v.x << ", \"y\": " << v.y
        << ", \"dist_g\": " << v.dist_in_g << ", \"dist_h\": ";
    if (finite(v.dist_in_h)) {
      out << v.dist_in_h;
    } else {
      out << "null";
    }
    out << "},\n";
  }
  if (doc.has_stats) {
    out << "  \"branch\": " << json_string(doc.branch) << ",\n";
    out << "  \"candidate_edges\": " << doc.stats.candidate_edges << ",\n";
    out << "  \"cycles_found\": " << doc.stats.cycles_found << ",\n";
    out << "  \"subsets_examined\": " << doc.stats.subsets_examined << ",\n";
    out << "  \"fell_back\": " << (doc.stats.fell_back ? "true" : "false") << ",\n";
  }
  out << "  \"rechecked\": " << (doc.rechecked ? "true" : "false") << "\n";
  out << "}\n";
}

}  // namespace addspan
