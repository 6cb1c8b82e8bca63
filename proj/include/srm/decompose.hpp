#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "srm/core.hpp"
#include "srm/enumerate.hpp"
#include "srm/interchange.hpp"
#include "srm/matrix.hpp"

namespace srm {

/// Unique split A = A1 - A2 into (0,1)-matrices with disjoint supports:
/// entrywise positive and negative parts.
inline std::pair<SignMatrix, SignMatrix> split_pm(const SignMatrix& a) {
  SignMatrix pos(a.rows(), a.cols()), neg(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 1) pos.set(i, j, 1);
      if (a(i, j) == -1) neg.set(i, j, 1);
    }
  return {pos, neg};
}

inline bool is_subpermutation(const SignMatrix& a) {
  std::vector<int> row(a.rows(), 0), col(a.cols(), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) < 0) return false;
      if (a(i, j) == 1 && (++row[i] > 1 || ++col[j] > 1)) return false;
    }
  return true;
}

struct SignedTerm {
  int sign;      // +1 or -1
  SignMatrix p;  // subpermutation matrix
};

struct SignedDecomposition {
  std::vector<SignedTerm> terms;

  IntMatrix reconstruct(int rows, int cols) const {
    IntMatrix out(rows, cols);
    for (const SignedTerm& t : terms)
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.set(i, j, out(i, j) + t.sign * t.p(i, j));
    return out;
  }

  bool supports_disjoint() const {
    if (terms.empty()) return true;
    IntMatrix used(terms[0].p.rows(), terms[0].p.cols());
    for (const SignedTerm& t : terms)
      for (int i = 0; i < used.rows(); ++i)
        for (int j = 0; j < used.cols(); ++j)
          if (t.p(i, j) == 1) {
            if (used(i, j)) return false;
            used.set(i, j, 1);
          }
    return true;
  }
};

namespace detail {

/// Augmenting-path search used by the matching peeler; smallest-index order
/// keeps the output deterministic.
inline bool augment(int u, const std::vector<std::vector<int>>& adj, std::vector<int>& match_col,
                    std::vector<int>& match_row, std::vector<bool>& seen) {
  for (int v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = true;
    if (match_col[v] < 0 || augment(match_col[v], adj, match_col, match_row, seen)) {
      match_col[v] = u;
      match_row[u] = v;
      return true;
    }
  }
  return false;
}

inline std::optional<std::vector<int>> perfect_matching(const std::vector<std::vector<int>>& adj,
                                                        int n_right) {
  const int n_left = static_cast<int>(adj.size());
  std::vector<int> match_col(n_right, -1), match_row(n_left, -1);
  for (int u = 0; u < n_left; ++u) {
    std::vector<bool> seen(n_right, false);
    if (!augment(u, adj, match_col, match_row, seen)) return std::nullopt;
  }
  return match_row;
}

/// Partitions the 1's of a (0,1)-matrix into Delta disjoint subpermutation
/// matrices, Delta = max line sum: embed into the Delta-regular bipartite
/// multigraph [[X, diag(Delta-r)], [diag(Delta-c), X^T]] and peel perfect
/// matchings.
inline std::vector<SignMatrix> decompose_01_disjoint(const SignMatrix& x) {
  const int m = x.rows(), n = x.cols();
  const MarginPair mp = margins(x);
  int delta = 0;
  for (int v : mp.row_sums) delta = std::max(delta, v);
  for (int v : mp.col_sums) delta = std::max(delta, v);
  if (delta == 0) return {};

  const int big = std::max(m, n);
  const int size = 2 * big;
  std::vector<std::vector<int>> weight(size, std::vector<int>(size, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) weight[i][j] = x(i, j) == 1;
  for (int i = 0; i < big; ++i)
    weight[i][big + i] = delta - (i < m ? mp.row_sums[i] : 0);
  for (int j = 0; j < big; ++j)
    weight[big + j][j] = delta - (j < n ? mp.col_sums[j] : 0);
  for (int j = 0; j < big; ++j)
    for (int i = 0; i < big; ++i) weight[big + j][big + i] = (i < m && j < n) ? (x(i, j) == 1) : 0;

  std::vector<SignMatrix> parts;
  for (int round = 0; round < delta; ++round) {
    std::vector<std::vector<int>> adj(size);
    for (int u = 0; u < size; ++u)
      for (int v = 0; v < size; ++v)
        if (weight[u][v] > 0) adj[u].push_back(v);
    std::optional<std::vector<int>> match = perfect_matching(adj, size);
    if (!match) throw std::logic_error("decompose_01_disjoint: regular graph has no perfect matching");
    SignMatrix part(m, n);
    bool nonempty = false;
    for (int u = 0; u < size; ++u) {
      const int v = (*match)[u];
      --weight[u][v];
      if (u < m && v < n && x(u, v) == 1) {
        part.set(u, v, 1);
        nonempty = true;
      }
    }
    if (nonempty) parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace detail

/// Writes an SRM as a signed sum of pairwise disjoint subpermutation
/// matrices: the positive and negative parts are each partitioned by
/// matching peeling.
inline SignedDecomposition signed_subperm_decomposition(const Srm& a) {
  auto [pos, neg] = split_pm(a.matrix());
  SignedDecomposition d;
  for (SignMatrix& p : detail::decompose_01_disjoint(pos)) d.terms.push_back({+1, std::move(p)});
  for (SignMatrix& p : detail::decompose_01_disjoint(neg)) d.terms.push_back({-1, std::move(p)});
  if (d.reconstruct(a.rows(), a.cols()) != to_int_matrix(a.matrix()))
    throw std::logic_error("signed_subperm_decomposition: reconstruction mismatch");
  if (!d.supports_disjoint()) throw std::logic_error("signed_subperm_decomposition: overlapping terms");
  for (const SignedTerm& t : d.terms)
    if (!is_subpermutation(t.p)) throw std::logic_error("signed_subperm_decomposition: bad term");
  return d;
}

/// Disjoint pair B1 in A(R1,S1), B2 in A(R2,S2); B1 + B2 is a (0,1)-matrix.
struct JointRealization {
  SignMatrix b1;
  SignMatrix b2;
};

namespace detail {

/// Is there a matrix of A(R,S) supported on the allowed cells?  Max-flow
/// with unit cell capacities (Edmonds-Karp; the graphs here are tiny).
inline std::optional<SignMatrix> degree_constrained_fill(const std::vector<int>& r,
                                                         const std::vector<int>& s,
                                                         const std::vector<std::vector<bool>>& allowed) {
  const int m = static_cast<int>(r.size()), n = static_cast<int>(s.size());
  long long need = std::accumulate(r.begin(), r.end(), 0ll);
  if (need != std::accumulate(s.begin(), s.end(), 0ll)) return std::nullopt;
  for (int x : r)
    if (x < 0) return std::nullopt;
  for (int x : s)
    if (x < 0) return std::nullopt;

  const int source = 0, sink = m + n + 1, nodes = m + n + 2;
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  for (int i = 0; i < m; ++i) cap[source][1 + i] = r[i];
  for (int j = 0; j < n; ++j) cap[1 + m + j][sink] = s[j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (allowed[i][j]) cap[1 + i][1 + m + j] = 1;

  long long flow = 0;
  for (;;) {
    std::vector<int> parent(nodes, -1);
    parent[source] = source;
    std::vector<int> queue{source};
    for (std::size_t qi = 0; qi < queue.size() && parent[sink] < 0; ++qi) {
      const int u = queue[qi];
      for (int v = 0; v < nodes; ++v)
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
    }
    if (parent[sink] < 0) break;
    for (int v = sink; v != source; v = parent[v]) {
      --cap[parent[v]][v];
      ++cap[v][parent[v]];
    }
    ++flow;
  }
  if (flow != need) return std::nullopt;
  SignMatrix b(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (allowed[i][j] && cap[1 + i][1 + m + j] == 0) b.set(i, j, 1);
  return b;
}

}  // namespace detail

/// Exhaustive joint-realization search: enumerate the smaller class, complete
/// each candidate on the complement support by bipartite flow.
inline std::optional<JointRealization> find_joint_realization(
    const std::vector<int>& r1, const std::vector<int>& s1, const std::vector<int>& r2,
    const std::vector<int>& s2, int max_cells = kDefaultMaxCells) {
  if (r1.size() != r2.size() || s1.size() != s2.size())
    throw std::invalid_argument("find_joint_realization: margin size mismatch");
  const int m = static_cast<int>(r1.size()), n = static_cast<int>(s1.size());
  if (!gale_ryser_nonempty(r1, s1) || !gale_ryser_nonempty(r2, s2)) return std::nullopt;

  const long long count1 = [&] {
    long long c = 0;
    for_each_01_matrix(MarginPair{r1, s1}, [&](const SignMatrix&) { ++c; }, max_cells);
    return c;
  }();
  const long long count2 = [&] {
    long long c = 0;
    for_each_01_matrix(MarginPair{r2, s2}, [&](const SignMatrix&) { ++c; }, max_cells);
    return c;
  }();
  const bool first_smaller = count1 <= count2;
  const auto& ro = first_smaller ? r1 : r2;
  const auto& so = first_smaller ? s1 : s2;
  const auto& rc = first_smaller ? r2 : r1;
  const auto& sc = first_smaller ? s2 : s1;

  std::optional<JointRealization> found;
  for_each_01_matrix(
      MarginPair{ro, so},
      [&](const SignMatrix& b) {
        if (found) return;
        std::vector<std::vector<bool>> allowed(m, std::vector<bool>(n, false));
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < n; ++j) allowed[i][j] = b(i, j) == 0;
        if (std::optional<SignMatrix> other = detail::degree_constrained_fill(rc, sc, allowed)) {
          if (first_smaller)
            found = JointRealization{b, *other};
          else
            found = JointRealization{*other, b};
        }
      },
      max_cells);
  return found;
}

/// Raised when the near-constant hypothesis on R1 (or nonnegativity of the
/// complementary margins) fails, so the joint-realization criterion does not
/// apply.
struct HypothesisError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Joint realizability under the near-constant hypothesis: R1 must take only
/// the values {k, k+1}; then a realization exists iff A(R,S) and A(R-R1,S-S1)
/// are both nonempty.
inline bool check_anstee_condition(const std::vector<int>& r, const std::vector<int>& r1,
                                   const std::vector<int>& s, const std::vector<int>& s1) {
  if (r.size() != r1.size() || s.size() != s1.size())
    throw std::invalid_argument("check_anstee_condition: size mismatch");
  if (r1.empty()) throw std::invalid_argument("check_anstee_condition: empty margins");
  const auto [lo, hi] = std::minmax_element(r1.begin(), r1.end());
  if (*lo < 0 || *hi - *lo > 1)
    throw HypothesisError("check_anstee_condition: R1 entries must lie in {k, k+1}");
  std::vector<int> r2(r.size()), s2(s.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r2[i] = r[i] - r1[i];
    if (r2[i] < 0) throw HypothesisError("check_anstee_condition: R - R1 has a negative entry");
  }
  for (std::size_t j = 0; j < s.size(); ++j) {
    s2[j] = s[j] - s1[j];
    if (s1[j] < 0 || s2[j] < 0)
      throw HypothesisError("check_anstee_condition: S - S1 has a negative entry");
  }
  return gale_ryser_nonempty(r, s) && gale_ryser_nonempty(r2, s2);
}

}  // namespace srm
