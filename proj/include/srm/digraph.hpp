#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "srm/core.hpp"
#include "srm/matrix.hpp"

namespace srm {

/// Simple digraph on vertices 0..n-1 plus a loop set; loops contribute unit
/// columns to the generalized incidence matrix and do not count as edges.
struct LoopedDigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> loop;

  LoopedDigraph(int n, std::vector<std::pair<int, int>> edge_list, std::vector<int> loop_set,
                bool allow_parallel = false)
      : vertex_count(n), edges(std::move(edge_list)), loop(n, false) {
    if (n < 1) throw std::invalid_argument("LoopedDigraph: need at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("LoopedDigraph: edge endpoint out of range");
      if (u == v) throw std::invalid_argument("LoopedDigraph: self-pairs are not allowed");
      if (!allow_parallel && !seen.insert({u, v}).second)
        throw std::invalid_argument("LoopedDigraph: duplicate edge");
    }
    for (int v : loop_set) {
      if (v < 0 || v >= n) throw std::invalid_argument("LoopedDigraph: loop vertex out of range");
      loop[v] = true;
    }
  }

  int out_degree(int v) const {
    int d = 0;
    for (auto& e : edges) d += e.first == v;
    return d;
  }
  int in_degree(int v) const {
    int d = 0;
    for (auto& e : edges) d += e.second == v;
    return d;
  }

  /// Topological order by repeated minimum-index source removal; empty when
  /// the digraph has a cycle.
  std::optional<std::vector<int>> topological_order() const {
    std::vector<int> indeg(vertex_count, 0);
    for (auto& e : edges) ++indeg[e.second];
    std::vector<bool> done(vertex_count, false);
    std::vector<int> order;
    for (int step = 0; step < vertex_count; ++step) {
      int pick = -1;
      for (int v = 0; v < vertex_count; ++v)
        if (!done[v] && indeg[v] == 0) {
          pick = v;
          break;
        }
      if (pick < 0) return std::nullopt;
      done[pick] = true;
      order.push_back(pick);
      for (auto& e : edges)
        if (e.first == pick) --indeg[e.second];
    }
    return order;
  }

  bool acyclic() const { return topological_order().has_value(); }
};

/// Columns: unit columns for the loop set first (in vertex_order), then one
/// column per edge (in edge_order) with +1 at the tail row and -1 at the head
/// row.
inline SignMatrix generalized_incidence(const LoopedDigraph& d, const std::vector<int>& vertex_order,
                                        const std::vector<int>& edge_order) {
  const int n = d.vertex_count;
  auto is_perm = [](const std::vector<int>& p, int size) {
    if (static_cast<int>(p.size()) != size) return false;
    std::vector<bool> seen(size, false);
    for (int x : p) {
      if (x < 0 || x >= size || seen[x]) return false;
      seen[x] = true;
    }
    return true;
  };
  if (!is_perm(vertex_order, n))
    throw std::invalid_argument("generalized_incidence: bad vertex order");
  if (!is_perm(edge_order, static_cast<int>(d.edges.size())))
    throw std::invalid_argument("generalized_incidence: bad edge order");

  std::vector<int> row_of(n);
  for (int k = 0; k < n; ++k) row_of[vertex_order[k]] = k;
  std::vector<int> loop_cols;
  for (int v : vertex_order)
    if (d.loop[v]) loop_cols.push_back(v);

  const int cols = static_cast<int>(loop_cols.size() + d.edges.size());
  if (cols == 0) throw std::invalid_argument("generalized_incidence: no columns");
  SignMatrix a(n, cols);
  int j = 0;
  for (int v : loop_cols) a.set(row_of[v], j++, 1);
  for (int e : edge_order) {
    a.set(row_of[d.edges[e].first], j, 1);
    a.set(row_of[d.edges[e].second], j, -1);
    ++j;
  }
  return a;
}

/// Rows and columns of the generalized incidence matrix can be ordered into
/// an SRM iff the digraph is acyclic, no vertex has in-degree exceeding
/// out-degree by more than one, and every vertex with the excess carries a
/// loop.
inline bool srm_orderable(const LoopedDigraph& d) {
  if (d.edges.empty()) throw std::invalid_argument("srm_orderable: digraph has no edges");
  if (!d.acyclic()) return false;
  for (int v = 0; v < d.vertex_count; ++v) {
    const int excess = d.in_degree(v) - d.out_degree(v);
    if (excess > 1) return false;
    if (excess == 1 && !d.loop[v]) return false;
  }
  return true;
}

struct SrmOrdering {
  std::vector<int> vertex_order;
  std::vector<int> edge_order;
  Srm matrix;
};

/// Constructive ordering: vertices topologically, edges by repeated path
/// peeling.  Pick the topologically last vertex with out-degree 0 and
/// in-degree 1, take a longest path into it (ties resolved toward the
/// lexicographically smallest vertex sequence), and emit that path's columns
/// starting from the edge entering the terminal vertex, walking backward.
inline SrmOrdering srm_ordering(const LoopedDigraph& d) {
  if (!srm_orderable(d)) throw std::invalid_argument("srm_ordering: digraph is not orderable");
  const std::vector<int> vorder = *d.topological_order();
  std::vector<int> pos(d.vertex_count);
  for (int k = 0; k < d.vertex_count; ++k) pos[vorder[k]] = k;

  std::vector<bool> removed(d.edges.size(), false);
  std::size_t remaining = d.edges.size();
  std::vector<int> eorder;

  while (remaining > 0) {
    std::vector<int> din(d.vertex_count, 0), dout(d.vertex_count, 0);
    for (std::size_t e = 0; e < d.edges.size(); ++e)
      if (!removed[e]) {
        ++dout[d.edges[e].first];
        ++din[d.edges[e].second];
      }
    int terminal = -1;
    for (int v = 0; v < d.vertex_count; ++v)
      if (dout[v] == 0 && din[v] == 1 && (terminal < 0 || pos[v] > pos[terminal])) terminal = v;
    if (terminal < 0) throw std::logic_error("srm_ordering: no terminal vertex");

    // longest remaining path into the terminal: L[v] = edge count of the
    // longest path from v, walking only edges that still reach the terminal
    std::vector<int> len(d.vertex_count, -1);
    len[terminal] = 0;
    for (int k = d.vertex_count - 1; k >= 0; --k) {
      const int v = vorder[k];
      for (std::size_t e = 0; e < d.edges.size(); ++e)
        if (!removed[e] && d.edges[e].first == v && len[d.edges[e].second] >= 0)
          len[v] = std::max(len[v], len[d.edges[e].second] + 1);
    }
    int start = -1;
    for (int v = 0; v < d.vertex_count; ++v)
      if (len[v] >= 0 && (start < 0 || len[v] > len[start])) start = v;
    std::vector<int> path_edges;
    int cur = start;
    while (cur != terminal) {
      int chosen = -1;
      for (std::size_t e = 0; e < d.edges.size(); ++e)
        if (!removed[e] && d.edges[e].first == cur && len[d.edges[e].second] == len[cur] - 1 &&
            (chosen < 0 || d.edges[e].second < d.edges[chosen].second))
          chosen = static_cast<int>(e);
      if (chosen < 0) throw std::logic_error("srm_ordering: broken path chain");
      path_edges.push_back(chosen);
      cur = d.edges[chosen].second;
    }
    for (auto it = path_edges.rbegin(); it != path_edges.rend(); ++it) {
      eorder.push_back(*it);
      removed[*it] = true;
      --remaining;
    }
  }

  SignMatrix m = generalized_incidence(d, vorder, eorder);
  return {vorder, eorder, require_srm(m)};
}

}  // namespace srm
