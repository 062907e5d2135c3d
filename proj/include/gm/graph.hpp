#ifndef GM_GRAPH_HPP
#define GM_GRAPH_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gm/monomial.hpp"

namespace gm {

// Unvalidated graph description, as read from a file.
struct RawGraph {
  std::string name;
  std::vector<std::string> left;
  std::vector<std::string> right;
  std::vector<std::pair<std::string, std::string>> edges;
};

// A validated connected simple bipartite graph. Vertices carry their file
// labels; all internal identity is positional. Edge i (1-based, in file
// order) corresponds to the variable x_i throughout the system.
class BipartiteGraph {
 public:
  const std::string& name() const { return name_; }
  const std::vector<std::string>& left() const { return left_; }
  const std::vector<std::string>& right() const { return right_; }

  int vertex_count() const {
    return static_cast<int>(left_.size() + right_.size());
  }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Edge endpoints as global vertex ids. Left vertex i has id i; right
  // vertex j has id left().size() + j.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool is_left(int vertex) const {
    return vertex < static_cast<int>(left_.size());
  }
  const std::string& label(int vertex) const {
    return is_left(vertex) ? left_[vertex] : right_[vertex - left_.size()];
  }

  // Neighbors of a vertex as (neighbor id, 1-based edge index).
  const std::vector<std::pair<int, int>>& adjacency(int vertex) const {
    return adjacency_[vertex];
  }

  bool has_edge(int a, int b) const;
  // 1-based edge index between two vertices, 0 if absent.
  int edge_index(int a, int b) const;

 private:
  friend BipartiteGraph validate_graph(const RawGraph& raw);

  std::string name_;
  std::vector<std::string> left_;
  std::vector<std::string> right_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// One primitive 4-cycle, canonically oriented: edges[0] is the smallest edge
// index on the cycle and edges[1] < edges[3]. The two opposite-edge products
// are the diagonal monomial candidates; diag_a holds the smallest index.
struct FourCycle {
  std::array<int, 4> edges;  // 1-based edge indices in traversal order
  Monomial diag_a;           // x_{edges[0]} * x_{edges[2]}
  Monomial diag_b;           // x_{edges[1]} * x_{edges[3]}
};

// Outcome of the quadratic-generation gate. On failure, `witness` holds one
// chordless cycle of length >= 6 as vertex ids in cycle order, and
// `witness_edges` the matching 1-based edge indices.
struct QuadraticGenerationResult {
  bool pass = false;
  std::vector<int> witness;
  std::vector<int> witness_edges;
};

// Checks all type invariants: bipartition respected, simple, connected,
// nonempty. Throws GraphError naming the offending element otherwise.
// Edges listed as (right,left) are normalized to (left,right).
BipartiteGraph validate_graph(const RawGraph& raw);

// All distinct 4-cycles in canonical form, sorted by their edge quadruple.
// In a bipartite graph every 4-cycle is chordless, hence primitive.
std::vector<FourCycle> enumerate_four_cycles(const BipartiteGraph& g);

// Pass iff g has no chordless cycle of length >= 6. For bipartite input this
// is exactly the quadratic-generation condition: every chord of an even
// cycle splits it into two even cycles, and odd cycles do not occur.
// Throws GraphError{GraphTooLarge} when edge_count exceeds `edge_cap`.
QuadraticGenerationResult check_quadratic_generation(const BipartiteGraph& g,
                                                     int edge_cap = 64);

// n_edges - m + 1 for a connected graph; the dimension of the cycle space.
int cyclomatic_number(const BipartiteGraph& g);

// The ladder with N squares: vertices u1..u_{N+1}, v1..v_{N+1}, rungs
// (u_i,v_i), rails (u_i,u_{i+1}) and (v_i,v_{i+1}). Rungs come first in the
// edge order, then all u-rails, then all v-rails. 2N+2 vertices, 3N+1 edges,
// exactly N four-cycles.
BipartiteGraph generate_ladder(int N);

}  // namespace gm

#endif  // GM_GRAPH_HPP
