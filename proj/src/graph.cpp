#include "gm/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gm/errors.hpp"

namespace gm {

bool BipartiteGraph::has_edge(int a, int b) const { return edge_index(a, b) != 0; }

int BipartiteGraph::edge_index(int a, int b) const {
  for (const auto& [nbr, idx] : adjacency_[a]) {
    if (nbr == b) return idx;
  }
  return 0;
}

BipartiteGraph validate_graph(const RawGraph& raw) {
  if (raw.left.empty() && raw.right.empty())
    throw GraphError(GraphError::Kind::EmptyGraph, "graph has no vertices");
  if (raw.edges.empty())
    throw GraphError(GraphError::Kind::EmptyGraph, "graph has no edges");

  std::map<std::string, int> left_ids, right_ids;
  for (size_t i = 0; i < raw.left.size(); ++i) {
    if (!left_ids.emplace(raw.left[i], static_cast<int>(i)).second)
      throw GraphError(GraphError::Kind::DuplicateLabel,
                       "label '" + raw.left[i] + "' repeated in left side");
  }
  for (size_t j = 0; j < raw.right.size(); ++j) {
    if (right_ids.count(raw.right[j]) || left_ids.count(raw.right[j]))
      throw GraphError(GraphError::Kind::DuplicateLabel,
                       "label '" + raw.right[j] +
                           "' appears more than once across the two sides");
    right_ids.emplace(raw.right[j], static_cast<int>(j));
  }

  BipartiteGraph g;
  g.name_ = raw.name;
  g.left_ = raw.left;
  g.right_ = raw.right;

  const int L = static_cast<int>(raw.left.size());
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : raw.edges) {
    const bool a_left = left_ids.count(a) > 0;
    const bool a_right = right_ids.count(a) > 0;
    const bool b_left = left_ids.count(b) > 0;
    const bool b_right = right_ids.count(b) > 0;
    if (!(a_left || a_right))
      throw GraphError(GraphError::Kind::UnknownVertex,
                       "edge (" + a + "," + b + ") names unknown vertex '" + a + "'");
    if (!(b_left || b_right))
      throw GraphError(GraphError::Kind::UnknownVertex,
                       "edge (" + a + "," + b + ") names unknown vertex '" + b + "'");
    if (a_left == b_left)
      throw GraphError(GraphError::Kind::NotBipartite,
                       "edge (" + a + "," + b + ") joins two " +
                           (a_left ? "left" : "right") + "-side vertices");
    const int li = a_left ? left_ids[a] : left_ids[b];
    const int rj = a_left ? right_ids[b] : right_ids[a];
    if (!seen.emplace(li, rj).second)
      throw GraphError(GraphError::Kind::DuplicateEdge,
                       "edge (" + a + "," + b + ") listed more than once");
    g.edges_.emplace_back(li, L + rj);
  }

  const int V = g.vertex_count();
  g.adjacency_.assign(V, {});
  for (size_t e = 0; e < g.edges_.size(); ++e) {
    const auto [u, v] = g.edges_[e];
    const int idx = static_cast<int>(e) + 1;
    g.adjacency_[u].emplace_back(v, idx);
    g.adjacency_[v].emplace_back(u, idx);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());

  // Connectivity by BFS from vertex 0.
  std::vector<bool> visited(V, false);
  std::vector<int> queue{0};
  visited[0] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const auto& [nbr, idx] : g.adjacency_[queue[head]]) {
      if (!visited[nbr]) {
        visited[nbr] = true;
        queue.push_back(nbr);
      }
    }
  }
  for (int v = 0; v < V; ++v) {
    if (!visited[v])
      throw GraphError(GraphError::Kind::Disconnected,
                       "vertex '" + g.label(v) +
                           "' is not reachable from '" + g.label(0) + "'");
  }
  return g;
}

namespace {

FourCycle make_canonical_cycle(std::array<int, 4> cyclic) {
  // Rotate the smallest edge index to the front, then pick the direction
  // that makes the second entry smaller than the fourth.
  int min_pos = 0;
  for (int i = 1; i < 4; ++i) {
    if (cyclic[i] < cyclic[min_pos]) min_pos = i;
  }
  std::array<int, 4> fwd{cyclic[min_pos], cyclic[(min_pos + 1) % 4],
                         cyclic[(min_pos + 2) % 4], cyclic[(min_pos + 3) % 4]};
  if (fwd[1] > fwd[3]) std::swap(fwd[1], fwd[3]);
  FourCycle c;
  c.edges = fwd;
  c.diag_a = Monomial::from_indices({static_cast<uint32_t>(fwd[0]),
                                     static_cast<uint32_t>(fwd[2])});
  c.diag_b = Monomial::from_indices({static_cast<uint32_t>(fwd[1]),
                                     static_cast<uint32_t>(fwd[3])});
  return c;
}

}  // namespace

std::vector<FourCycle> enumerate_four_cycles(const BipartiteGraph& g) {
  const int L = static_cast<int>(g.left().size());
  const int V = g.vertex_count();
  std::vector<FourCycle> cycles;
  // A 4-cycle in a bipartite graph is a pair of left vertices joined to a
  // common pair of right vertices.
  for (int l1 = 0; l1 < L; ++l1) {
    for (int l2 = l1 + 1; l2 < L; ++l2) {
      for (int r1 = L; r1 < V; ++r1) {
        if (!g.has_edge(l1, r1) || !g.has_edge(l2, r1)) continue;
        for (int r2 = r1 + 1; r2 < V; ++r2) {
          if (!g.has_edge(l1, r2) || !g.has_edge(l2, r2)) continue;
          cycles.push_back(make_canonical_cycle(
              {g.edge_index(l1, r1), g.edge_index(r1, l2),
               g.edge_index(l2, r2), g.edge_index(r2, l1)}));
        }
      }
    }
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const FourCycle& a, const FourCycle& b) { return a.edges < b.edges; });
  return cycles;
}

namespace {

// DFS over induced paths. Path vertices other than path[0] are all greater
// than path[0], so each chordless cycle is searched from its minimum vertex
// only. Returns true when a chordless cycle with >= 6 vertices is found.
bool extend_induced_path(const BipartiteGraph& g,
                         const std::vector<std::vector<bool>>& adj,
                         std::vector<int>& path, std::vector<bool>& in_path,
                         std::vector<int>& out) {
  const int v0 = path[0];
  const int last = path.back();
  for (const auto& [w, idx] : g.adjacency(last)) {
    if (w <= v0 || in_path[w]) continue;
    // Any edge from w into the interior of the path would be a chord.
    bool chord = false;
    for (size_t i = 1; i + 1 < path.size(); ++i) {
      if (adj[w][path[i]]) {
        chord = true;
        break;
      }
    }
    if (chord) continue;
    if (adj[w][v0]) {
      // Closing edge: path + w is a chordless cycle.
      if (path.size() + 1 >= 6) {
        out = path;
        out.push_back(w);
        return true;
      }
      // A 4-cycle; w cannot extend the path either, since the edge to v0
      // would become a chord.
      continue;
    }
    path.push_back(w);
    in_path[w] = true;
    if (extend_induced_path(g, adj, path, in_path, out)) return true;
    in_path[w] = false;
    path.pop_back();
  }
  return false;
}

}  // namespace

QuadraticGenerationResult check_quadratic_generation(const BipartiteGraph& g,
                                                     int edge_cap) {
  if (g.edge_count() > edge_cap)
    throw GraphError(GraphError::Kind::GraphTooLarge,
                     "graph has " + std::to_string(g.edge_count()) +
                         " edges; chordless-cycle search capped at " +
                         std::to_string(edge_cap));
  const int V = g.vertex_count();
  std::vector<std::vector<bool>> adj(V, std::vector<bool>(V, false));
  for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;

  std::vector<int> witness;
  for (int v0 = 0; v0 < V && witness.empty(); ++v0) {
    for (const auto& [v1, idx] : g.adjacency(v0)) {
      if (v1 <= v0) continue;
      std::vector<int> path{v0, v1};
      std::vector<bool> in_path(V, false);
      in_path[v0] = in_path[v1] = true;
      if (extend_induced_path(g, adj, path, in_path, witness)) break;
    }
  }

  QuadraticGenerationResult res;
  res.pass = witness.empty();
  if (!res.pass) {
    res.witness = witness;
    for (size_t i = 0; i < witness.size(); ++i) {
      res.witness_edges.push_back(
          g.edge_index(witness[i], witness[(i + 1) % witness.size()]));
    }
  }
  return res;
}

int cyclomatic_number(const BipartiteGraph& g) {
  return g.edge_count() - g.vertex_count() + 1;
}

BipartiteGraph generate_ladder(int N) {
  if (N < 1) throw std::invalid_argument("ladder size must be >= 1");
  RawGraph raw;
  raw.name = "ladder" + std::to_string(N);
  // 2-coloring of the 2 x (N+1) grid: u_i is left for odd i, v_i for even i.
  auto u = [](int i) { return "u" + std::to_string(i); };
  auto v = [](int i) { return "v" + std::to_string(i); };
  for (int i = 1; i <= N + 1; ++i) {
    (i % 2 == 1 ? raw.left : raw.right).push_back(u(i));
  }
  for (int i = 1; i <= N + 1; ++i) {
    (i % 2 == 0 ? raw.left : raw.right).push_back(v(i));
  }
  // Rungs, then u-rails, then v-rails; left endpoint written first.
  for (int i = 1; i <= N + 1; ++i) {
    if (i % 2 == 1)
      raw.edges.emplace_back(u(i), v(i));
    else
      raw.edges.emplace_back(v(i), u(i));
  }
  for (int i = 1; i <= N; ++i) {
    if (i % 2 == 1)
      raw.edges.emplace_back(u(i), u(i + 1));
    else
      raw.edges.emplace_back(u(i + 1), u(i));
  }
  for (int i = 1; i <= N; ++i) {
    if (i % 2 == 0)
      raw.edges.emplace_back(v(i), v(i + 1));
    else
      raw.edges.emplace_back(v(i + 1), v(i));
  }
  return validate_graph(raw);
}

}  // namespace gm
