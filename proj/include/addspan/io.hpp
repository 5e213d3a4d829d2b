#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "addspan/graph.hpp"
#include "addspan/solver.hpp"
#include "addspan/verify.hpp"

namespace addspan {

enum class GraphFormat { Edgelist, Dimacs };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Edgelist: "u v" per line, 0-indexed, '#' starts a comment, n is one past
/// the largest label. DIMACS: "p edge n m" then "e u v", 1-indexed, 'c'
/// comment lines. Simplicity violations come back as ParseError too.
Graph read_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::filesystem::path& path, GraphFormat format);
GraphFormat parse_format(std::string_view name);

void write_edgelist(std::ostream& out, const Graph& g);
void write_dimacs(std::ostream& out, const Graph& g);

/// "u,v;u,v;..." -> removal mask. Throws std::invalid_argument for malformed
/// text or pairs that are not edges of g.
EdgeMask parse_removal(const Graph& g, std::string_view text);

/// Flat result document printed by the command-line tool, one field per line
/// in a fixed order.
struct ResultDoc {
  std::string command;
  std::string verdict;
  std::string params;
  std::size_t k = 0;
  std::vector<std::pair<Vertex, Vertex>> removed;
  std::string branch;
  SolveStats stats;
  bool has_stats = false;
  bool rechecked = false;
  std::optional<Violation> violation;
};

void write_result(std::ostream& out, const ResultDoc& doc);

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g, const EdgeMask& mask);

}  // namespace addspan
