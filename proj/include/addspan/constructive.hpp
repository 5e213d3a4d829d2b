#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "addspan/cycles.hpp"
#include "addspan/graph.hpp"
#include "addspan/thresholds.hpp"

namespace addspan {

class ConstructiveError : public std::runtime_error {
 public:
  enum class Kind {
    InsufficientPaths,
    PreconditionUnmet,
    /// Best-effort run below the guaranteed threshold came up empty.
    Failed,
    /// A guaranteed construction produced a wrong answer. Always a bug.
    InternalAssertionFailed,
  };

  ConstructiveError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

using VertexPath = std::vector<Vertex>;

/// u-v paths of length at most `bound`, each a vertex sequence from u to v.
struct PathFamily {
  Vertex u = 0;
  Vertex v = 0;
  int bound = 0;
  std::vector<VertexPath> paths;
};

struct DisjointPathsResult {
  bool success = false;
  Vertex u_prime = 0;
  Vertex v_prime = 0;
  /// Pairwise edge-disjoint u'-v' paths.
  std::vector<VertexPath> paths;
  /// bound - dist(u, u') - dist(v, v').
  int residual_bound = 0;
  /// Heavy-edge splits taken before the greedy step.
  int splits = 0;
};

/// k edge-disjoint paths between a pair (u', v') near (u, v), following the
/// recursive heavy-edge argument. Throws InsufficientPaths when the family is
/// smaller than f1(k, bound), unless best_effort is set; a best-effort run that
/// comes up short returns success == false.
DisjointPathsResult find_disjoint_paths(const Graph& g, const PathFamily& family,
                                        std::size_t k, bool best_effort = false);

struct MiddleEdgeResult {
  EdgeMask removed;
  std::vector<EdgeId> edges;
  Vertex u_prime = 0;
  Vertex v_prime = 0;
  int t_prime = 0;
};

/// Removes the middle edge of k detours around e. Requires at least
/// f1(k+t+1, t+1) cycles through e of length <= t+2 (unless best_effort).
/// The result is always checked to be an additive t-spanner.
MiddleEdgeResult middle_edge_removal(const Graph& g, EdgeId e,
                                     std::span<const Cycle> cycles_through_e, std::size_t k,
                                     int t, bool best_effort = false);

/// Multi-source BFS tree rooted at the vertices of one cycle. The tree path of
/// v is its chosen shortest path P(v, C) to the cycle.
struct SPForest {
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  std::vector<Vertex> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<Dist> depth;
  /// Reachable vertices in BFS order.
  std::vector<Vertex> order;

  bool reachable(Vertex v) const { return finite(depth[v]); }
  /// Edges of P(v, C) from v towards the cycle; empty on the cycle or when
  /// unreachable.
  std::vector<EdgeId> path_edges(Vertex v) const;
  /// Union of all chosen paths.
  EdgeMask edge_union(std::size_t num_edges) const;
};

SPForest sp_forest(const Graph& g, const Cycle& c);

enum class SequenceCase { Given, Trivial, LongPath, Forbidden };

/// Ordered edge-disjoint short cycles with their shortest-path forests.
struct CycleSeq {
  int t = 0;
  std::vector<Cycle> cycles;
  std::vector<SPForest> forests;

  SequenceCase how = SequenceCase::Given;
  /// LongPath case: positions of the chosen edges along the long path.
  std::vector<std::size_t> anchors;
  /// Forbidden case: sizes of the forbidden single and pair families.
  std::size_t forbidden_singles = 0;
  std::size_t forbidden_pairs = 0;
};

/// Wraps a caller-chosen order. Throws std::invalid_argument when cycles
/// overlap in an edge or exceed length t+2.
CycleSeq make_sequence(const Graph& g, std::vector<Cycle> cycles, int t);

/// (h, i, j, v) with h < i < j and v on cycle h whose chosen path to cycle i
/// uses an edge of cycle j. Indices are 0-based positions in the sequence.
struct StarWitness {
  std::size_t h;
  std::size_t i;
  std::size_t j;
  Vertex v;
  friend bool operator==(const StarWitness&, const StarWitness&) = default;
};

/// Lexicographically smallest witness, or nullopt when the ordering is good.
/// Vertices unreachable from a cycle impose nothing.
std::optional<StarWitness> check_star(const Graph& g, const CycleSeq& seq);

/// Picks and orders p of the given edge-disjoint cycles so that check_star
/// passes. Requires f2(t, p) cycles unless best_effort.
CycleSeq build_sequence(const Graph& g, std::span<const Cycle> disjoint, int t, std::size_t p,
                        bool best_effort = false);

struct SequenceRemovalResult {
  EdgeMask removed;
  std::vector<EdgeId> edges;
  /// Sequence position of the cycle each edge was taken from.
  std::vector<std::size_t> taken_from;
  /// |I_0|, |I_1|, ..., |I_k|.
  std::vector<std::size_t> live_sizes;
};

/// Chooses one edge from each of k cycles of a good sequence, keeping alive
/// the later cycles whose forests avoid every edge chosen so far. Requires
/// p >= f3(t, k) unless best_effort. The result is always checked to be an
/// additive t-spanner.
SequenceRemovalResult sequence_removal(const Graph& g, const CycleSeq& seq, int t, std::size_t k,
                                       bool best_effort = false);

}  // namespace addspan
