#pragma once

#include <algorithm>
#include <atomic>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "srm/core.hpp"
#include "srm/enumerate.hpp"
#include "srm/matrix.hpp"

namespace srm {

/// A <=_B B iff Sigma(A) >= Sigma(B) entrywise.
inline bool bruhat_leq(const Srm& a, const Srm& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("bruhat_leq: dimension mismatch");
  const SumMatrix sa = sum_matrix(a), sb = sum_matrix(b);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (sa(i, j) < sb(i, j)) return false;
  return true;
}

inline bool bruhat_lt(const Srm& a, const Srm& b) { return a != b && bruhat_leq(a, b); }

/// Counts activations of the join poset-search fallback; stays at zero unless
/// the entrywise-min reconstruction ever fails to validate.
inline std::atomic<long long>& join_fallback_count() {
  static std::atomic<long long> count{0};
  return count;
}

/// Greatest lower bound: reconstruct from the entrywise max of the two
/// sum-matrices.  The result always validates; this is asserted.
inline Srm bruhat_meet(const Srm& a, const Srm& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("bruhat_meet: dimension mismatch");
  SumMatrix t(a.rows(), a.cols());
  const SumMatrix sa = sum_matrix(a), sb = sum_matrix(b);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t.set(i, j, std::max(sa(i, j), sb(i, j)));
  std::optional<SignMatrix> c = to_sign_matrix(inverse_sum_matrix(t));
  if (!c) throw std::logic_error("bruhat_meet: reconstruction left {-1,0,1}");
  ValidationResult v = validate_srm(*c);
  if (!v.ok()) throw std::logic_error("bruhat_meet: reconstruction is not an SRM");
  return *v.srm;
}

/// Least upper bound via the entrywise min of sum-matrices.  Should the
/// reconstruction ever fail to validate, falls back to a poset search over
/// the enumerated class and bumps join_fallback_count().
inline Srm bruhat_join(const Srm& a, const Srm& b, int max_cells = kDefaultMaxCells) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("bruhat_join: dimension mismatch");
  SumMatrix t(a.rows(), a.cols());
  const SumMatrix sa = sum_matrix(a), sb = sum_matrix(b);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t.set(i, j, std::min(sa(i, j), sb(i, j)));
  if (std::optional<SignMatrix> c = to_sign_matrix(inverse_sum_matrix(t))) {
    ValidationResult v = validate_srm(*c);
    if (v.ok()) return *v.srm;
  }
  ++join_fallback_count();
  std::optional<Srm> best;
  for_each_srm(a.rows(), a.cols(), ClassFilter::all(),
               [&](const Srm& x) {
                 if (!bruhat_leq(a, x) || !bruhat_leq(b, x)) return;
                 best = best ? bruhat_meet(*best, x) : x;
               },
               max_cells);
  if (!best) throw std::logic_error("bruhat_join: no upper bound found");
  return *best;
}

inline Srm bruhat_meet_all(const std::vector<Srm>& xs) {
  if (xs.empty()) throw std::invalid_argument("bruhat_meet_all: empty list");
  Srm acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = bruhat_meet(acc, xs[i]);
  return acc;
}

/// The m single-nonzero-row matrices A^{(i)} whose meet is A: row i of
/// A^{(i)} marks the columns where row i of Sigma(A) increases.
inline std::vector<Srm> meet_irreducible_decomposition(const Srm& a) {
  const SumMatrix s = sum_matrix(a);
  std::vector<Srm> out;
  out.reserve(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    SignMatrix part(a.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
      const int prev = j > 0 ? s(i, j - 1) : 0;
      if (s(i, j) > prev) part.set(i, j, 1);
    }
    out.push_back(require_srm(part));
  }
  return out;
}

/// Is S the sum-matrix of some matrix in S+?  Exactly the system
///   s_{i,j-1} + s_{i-1,j} - s_{i-1,j-1} <= s_{ij}   (all i, j)
///   s_{mj} <= s_{m,j-1} + 1                          (all j)
/// with a phantom zero row and column.
inline bool is_plus_sum_matrix(const IntMatrix& s) {
  const int m = s.rows(), n = s.cols();
  auto at = [&](int i, int j) { return (i < 0 || j < 0) ? 0 : s(i, j); };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j - 1) + at(i - 1, j) - at(i - 1, j - 1) > s(i, j)) return false;
  for (int j = 0; j < n; ++j)
    if (s(m - 1, j) > at(m - 1, j - 1) + 1) return false;
  return true;
}

/// Replacing a submatrix [[0,1],[1,0]] on rows {r1,r2}, columns {c1,c2} by
/// the 2x2 identity.
struct BruhatInterchange {
  int r1, r2;  // r1 < r2
  int c1, c2;  // c1 < c2

  friend bool operator==(const BruhatInterchange&, const BruhatInterchange&) = default;
};

inline SignMatrix apply_bruhat_interchange(const SignMatrix& a, const BruhatInterchange& s) {
  if (!(0 <= s.r1 && s.r1 < s.r2 && s.r2 < a.rows() && 0 <= s.c1 && s.c1 < s.c2 &&
        s.c2 < a.cols()))
    throw std::invalid_argument("bruhat interchange: indices out of range");
  if (!(a(s.r1, s.c1) == 0 && a(s.r1, s.c2) == 1 && a(s.r2, s.c1) == 1 && a(s.r2, s.c2) == 0))
    throw std::invalid_argument("bruhat interchange: site is not an anti-diagonal pattern");
  SignMatrix b = a;
  b.set(s.r1, s.c1, 1);
  b.set(s.r1, s.c2, 0);
  b.set(s.r2, s.c1, 0);
  b.set(s.r2, s.c2, 1);
  return b;
}

/// Bruhat interchanges transforming C into A, for (0,1)-matrices with all
/// column sums 1, equal row sums and Sigma(A) >= Sigma(C).  Follows the
/// descent construction: walk A down to C by column swaps (each undoing one
/// Bruhat interchange), then replay in reverse.
inline std::vector<BruhatInterchange> bruhat_interchange_sequence(const SignMatrix& c,
                                                                  const SignMatrix& a) {
  const int m = a.rows(), n = a.cols();
  if (c.rows() != m || c.cols() != n)
    throw std::invalid_argument("bruhat_interchange_sequence: dimension mismatch");
  const MarginPair ma = margins(a), mc = margins(c);
  for (int j = 0; j < n; ++j)
    if (ma.col_sums[j] != 1 || mc.col_sums[j] != 1)
      throw std::invalid_argument("bruhat_interchange_sequence: column sums must all be 1");
  if (ma.row_sums != mc.row_sums)
    throw std::invalid_argument("bruhat_interchange_sequence: row sum mismatch");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j) < 0 || c(i, j) < 0)
        throw std::invalid_argument("bruhat_interchange_sequence: inputs must be (0,1)-matrices");

  SignMatrix w = a;
  std::vector<BruhatInterchange> steps;
  long long guard = static_cast<long long>(m) * n * n + 4;
  while (w != c) {
    if (--guard < 0) throw std::logic_error("bruhat_interchange_sequence: no progress");
    const SumMatrix sw = sum_matrix(w), sc = sum_matrix(c);
    int k = -1, l = -1;
    for (int i = 0; i < m && k < 0; ++i)
      for (int j = 0; j < n; ++j)
        if (sw(i, j) != sc(i, j)) {
          if (sw(i, j) < sc(i, j))
            throw std::invalid_argument("bruhat_interchange_sequence: Sigma(A) >= Sigma(C) fails");
          k = i;
          l = j;
          break;
        }
    if (k < 0) throw std::logic_error("bruhat_interchange_sequence: sums equal but matrices differ");
    int t = -1;
    for (int j = l + 1; j < n; ++j)
      if (w(k, j) == 0 && c(k, j) == 1) {
        t = j;
        break;
      }
    if (t < 0) throw std::logic_error("bruhat_interchange_sequence: no swap target in row");
    // uppermost 1 of W in rows k+1..m-1, columns l+1..t; ties to the left
    int k2 = -1, l2 = -1;
    for (int i = k + 1; i < m && k2 < 0; ++i)
      for (int j = l + 1; j <= t; ++j)
        if (w(i, j) == 1) {
          k2 = i;
          l2 = j;
          break;
        }
    if (k2 < 0) throw std::logic_error("bruhat_interchange_sequence: empty search region");
    // swap columns l and l2 of w (inverse Bruhat interchange)
    for (int i = 0; i < m; ++i) {
      const int tmp = w(i, l);
      w.set(i, l, w(i, l2));
      w.set(i, l2, tmp);
    }
    steps.push_back({k, k2, l, l2});
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

enum class BruhatOpKind {
  BruhatInterchange,          // anti-diagonal [[0,1],[1,0]] -> identity
  ZeroColumnToUnit,           // a zero column becomes a coordinate vector
  RaiseUnitColumn,            // e_k -> e_i in one column, i < k
  SwapWithEarlierZeroColumn,  // nonzero column moves into an earlier zero column
};

/// One of the four elementary transformations on S+ matrices.
struct BruhatOp {
  BruhatOpKind kind;
  int r1 = 0, r2 = 0;  // Interchange rows; RaiseUnitColumn: r1 = target row, r2 = source row
  int c1 = 0, c2 = 0;  // Interchange cols; unit/swap ops use c1 (and c2 for the swap)

  std::string to_string() const {
    switch (kind) {
      case BruhatOpKind::BruhatInterchange:
        return "interchange rows(" + std::to_string(r1 + 1) + "," + std::to_string(r2 + 1) +
               ") cols(" + std::to_string(c1 + 1) + "," + std::to_string(c2 + 1) + ")";
      case BruhatOpKind::ZeroColumnToUnit:
        return "zero column " + std::to_string(c1 + 1) + " -> unit at row " + std::to_string(r1 + 1);
      case BruhatOpKind::RaiseUnitColumn:
        return "column " + std::to_string(c1 + 1) + ": unit row " + std::to_string(r2 + 1) +
               " -> row " + std::to_string(r1 + 1);
      case BruhatOpKind::SwapWithEarlierZeroColumn:
        return "swap nonzero column " + std::to_string(c2 + 1) + " with zero column " +
               std::to_string(c1 + 1);
    }
    return {};
  }

  friend bool operator==(const BruhatOp&, const BruhatOp&) = default;
};

inline SignMatrix apply_bruhat_op(const SignMatrix& a, const BruhatOp& op) {
  SignMatrix b = a;
  auto column_is_zero = [&](int j) {
    for (int i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0) return false;
    return true;
  };
  switch (op.kind) {
    case BruhatOpKind::BruhatInterchange:
      return apply_bruhat_interchange(a, {op.r1, op.r2, op.c1, op.c2});
    case BruhatOpKind::ZeroColumnToUnit:
      if (!column_is_zero(op.c1)) throw std::invalid_argument("bruhat op: column not zero");
      b.set(op.r1, op.c1, 1);
      return b;
    case BruhatOpKind::RaiseUnitColumn: {
      if (op.r1 >= op.r2) throw std::invalid_argument("bruhat op: raise must move up");
      if (a(op.r2, op.c1) != 1) throw std::invalid_argument("bruhat op: source cell not 1");
      for (int i = 0; i < a.rows(); ++i)
        if (a(i, op.c1) != (i == op.r2 ? 1 : 0))
          throw std::invalid_argument("bruhat op: column is not a unit column");
      b.set(op.r2, op.c1, 0);
      b.set(op.r1, op.c1, 1);
      return b;
    }
    case BruhatOpKind::SwapWithEarlierZeroColumn: {
      if (op.c1 >= op.c2) throw std::invalid_argument("bruhat op: zero column must be earlier");
      if (!column_is_zero(op.c1)) throw std::invalid_argument("bruhat op: earlier column not zero");
      if (column_is_zero(op.c2)) throw std::invalid_argument("bruhat op: later column is zero");
      for (int i = 0; i < a.rows(); ++i) {
        b.set(i, op.c1, a(i, op.c2));
        b.set(i, op.c2, 0);
      }
      return b;
    }
  }
  throw std::logic_error("apply_bruhat_op: unknown kind");
}

/// Sequence of the four elementary operations transforming C into A, defined
/// for A, C in S+ with A <=_B C.  Both matrices are extended by a row making
/// every column sum 1 and by unit columns equalizing the row sums (earliest
/// free column as we go down the rows); the interchange sequence on the
/// extension is then classified by which blocks each step touches.
inline std::vector<BruhatOp> bruhat_op_sequence(const Srm& c, const Srm& a) {
  const int m = a.rows(), n = a.cols();
  if (c.rows() != m || c.cols() != n)
    throw std::invalid_argument("bruhat_op_sequence: dimension mismatch");
  if (!a.is_plus() || !c.is_plus())
    throw std::invalid_argument("bruhat_op_sequence: inputs must lie in S+");
  if (!bruhat_leq(a, c)) throw std::invalid_argument("bruhat_op_sequence: A <=_B C fails");

  const MarginPair ma = margins(a), mc = margins(c);
  std::vector<int> pa(m + 1, 0), qc(m + 1, 0);
  for (int i = 0; i < m; ++i) {
    pa[i] = ma.row_sums[i];
    qc[i] = mc.row_sums[i];
  }
  for (int j = 0; j < n; ++j) {
    pa[m] += ma.col_sums[j] == 0;
    qc[m] += mc.col_sums[j] == 0;
  }
  int t = 0;
  std::vector<int> target(m + 1);
  for (int i = 0; i <= m; ++i) {
    target[i] = std::max(pa[i], qc[i]);
    t += target[i] - pa[i];
  }

  auto extend = [&](const SignMatrix& x, const std::vector<int>& rowsums) {
    SignMatrix y(m + 1, n + t);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) y.set(i, j, x(i, j));
    const MarginPair mx = margins(x);
    for (int j = 0; j < n; ++j)
      if (mx.col_sums[j] == 0) y.set(m, j, 1);
    int next = n;
    for (int i = 0; i <= m; ++i)
      for (int k = rowsums[i]; k < target[i]; ++k) y.set(i, next++, 1);
    return y;
  };
  const SignMatrix ax = extend(a.matrix(), pa);
  const SignMatrix cx = extend(c.matrix(), qc);

  std::vector<BruhatOp> ops;
  SignMatrix check = c.matrix();
  for (const BruhatInterchange& s : bruhat_interchange_sequence(cx, ax)) {
    if (s.c1 >= n) continue;  // touches only appended columns; no effect on the real matrix
    BruhatOp op;
    if (s.c2 < n) {
      if (s.r2 < m)
        op = {BruhatOpKind::BruhatInterchange, s.r1, s.r2, s.c1, s.c2};
      else
        op = {BruhatOpKind::SwapWithEarlierZeroColumn, 0, 0, s.c1, s.c2};
    } else {
      if (s.r2 < m)
        op = {BruhatOpKind::RaiseUnitColumn, s.r1, s.r2, s.c1, 0};
      else
        op = {BruhatOpKind::ZeroColumnToUnit, s.r1, 0, s.c1, 0};
    }
    check = apply_bruhat_op(check, op);
    if (!validate_srm(check).ok()) throw std::logic_error("bruhat_op_sequence: left the SRM class");
    ops.push_back(op);
  }
  if (check != a.matrix()) throw std::logic_error("bruhat_op_sequence: replay mismatch");
  return ops;
}

inline SignMatrix replay_bruhat_ops(const SignMatrix& c, const std::vector<BruhatOp>& ops) {
  SignMatrix cur = c;
  for (const BruhatOp& op : ops) cur = apply_bruhat_op(cur, op);
  return cur;
}

/// Nodes in enumeration order, edges as (lower, upper) cover pairs.
struct HasseDiagram {
  std::vector<Srm> nodes;
  std::vector<std::pair<int, int>> edges;

  int index_of(const Srm& x) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i] == x) return static_cast<int>(i);
    return -1;
  }
};

/// Cover relation by transitive reduction of the full Bruhat comparison.
inline HasseDiagram hasse_diagram(int m, int n, bool plus_only,
                                  int max_cells = kDefaultMaxCells) {
  HasseDiagram d;
  d.nodes = enumerate_srms(m, n, plus_only ? ClassFilter::plus() : ClassFilter::all(), max_cells);
  const int count = static_cast<int>(d.nodes.size());
  std::vector<std::vector<bool>> lt(count, std::vector<bool>(count, false));
  for (int x = 0; x < count; ++x)
    for (int y = 0; y < count; ++y)
      if (x != y) lt[x][y] = bruhat_leq(d.nodes[x], d.nodes[y]);
  for (int x = 0; x < count; ++x)
    for (int y = 0; y < count; ++y) {
      if (!lt[x][y]) continue;
      bool cover = true;
      for (int z = 0; z < count && cover; ++z)
        if (lt[x][z] && lt[z][y]) cover = false;
      if (cover) d.edges.emplace_back(x, y);
    }
  return d;
}

/// Does B cover A in (S+_{m,n}, <=_B)?  (Or in the full lattice with
/// plus_only = false.)
inline bool covers(const Srm& a, const Srm& b, bool plus_only = true,
                   int max_cells = kDefaultMaxCells) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (!bruhat_lt(a, b)) return false;
  bool intermediate = false;
  for_each_srm(a.rows(), a.cols(), plus_only ? ClassFilter::plus() : ClassFilter::all(),
               [&](const Srm& z) {
                 if (!intermediate && bruhat_lt(a, z) && bruhat_lt(z, b)) intermediate = true;
               },
               max_cells);
  return !intermediate;
}

inline std::vector<int> down_degree(const HasseDiagram& d) {
  std::vector<int> deg(d.nodes.size(), 0);
  for (auto& [lo, hi] : d.edges) ++deg[hi];
  return deg;
}

inline std::vector<int> up_degree(const HasseDiagram& d) {
  std::vector<int> deg(d.nodes.size(), 0);
  for (auto& [lo, hi] : d.edges) ++deg[lo];
  return deg;
}

/// Nonzero elements covering exactly one element, in canonical node order.
inline std::vector<int> join_irreducible_indices(const HasseDiagram& d) {
  std::vector<int> out;
  const std::vector<int> deg = down_degree(d);
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (deg[i] == 1) out.push_back(static_cast<int>(i));
  return out;
}

/// Elements covered by exactly one element, in canonical node order.
inline std::vector<int> meet_irreducible_indices(const HasseDiagram& d) {
  std::vector<int> out;
  const std::vector<int> deg = up_degree(d);
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (deg[i] == 1) out.push_back(static_cast<int>(i));
  return out;
}

/// One row of the two Birkhoff representation tables.
struct IrreducibleProfile {
  std::vector<bool> join_below;  // over join_irreducible_indices
  std::vector<bool> meet_above;  // over meet_irreducible_indices
};

inline IrreducibleProfile irreducible_profile(const HasseDiagram& d, const Srm& a) {
  IrreducibleProfile p;
  for (int u : join_irreducible_indices(d)) p.join_below.push_back(bruhat_leq(d.nodes[u], a));
  for (int u : meet_irreducible_indices(d)) p.meet_above.push_back(bruhat_leq(a, d.nodes[u]));
  return p;
}

inline IrreducibleProfile irreducible_profile(const Srm& a, int m, int n,
                                              int max_cells = kDefaultMaxCells) {
  return irreducible_profile(hasse_diagram(m, n, /*plus_only=*/false, max_cells), a);
}

/// The three local cover operations on S+ matrices; each application lowers
/// the argument by exactly one cover step.  Returned with a description of
/// the site.
inline std::vector<std::pair<SignMatrix, std::string>> cor20_covered(const SignMatrix& a) {
  std::vector<std::pair<SignMatrix, std::string>> out;
  const int m = a.rows(), n = a.cols();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j) < 0) throw std::invalid_argument("cor20_covered: input must lie in S+");
  // (i) Bruhat interchange on consecutive rows and columns
  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j + 1 < n; ++j)
      if (a(i, j) == 0 && a(i, j + 1) == 1 && a(i + 1, j) == 1 && a(i + 1, j + 1) == 0)
        out.emplace_back(apply_bruhat_interchange(a, {i, i + 1, j, j + 1}),
                         "interchange at rows(" + std::to_string(i + 1) + "," +
                             std::to_string(i + 2) + ") cols(" + std::to_string(j + 1) + "," +
                             std::to_string(j + 2) + ")");
  // (ii) last column: zero -> e_m, or its unit raised one row
  {
    const int j = n - 1;
    int ones = 0, where = -1;
    for (int i = 0; i < m; ++i)
      if (a(i, j) == 1) {
        ++ones;
        where = i;
      }
    if (ones == 0) {
      SignMatrix b = a;
      b.set(m - 1, j, 1);
      out.emplace_back(std::move(b), "zero last column -> unit at last row");
    } else if (ones == 1 && where > 0) {
      SignMatrix b = a;
      b.set(where, j, 0);
      b.set(where - 1, j, 1);
      out.emplace_back(std::move(b), "last column unit raised from row " +
                                         std::to_string(where + 1) + " to row " +
                                         std::to_string(where));
    }
  }
  // (iii) unit column with the 1 in the last row swapped with the zero column before it
  for (int j = 1; j < n; ++j) {
    int ones = 0, where = -1;
    bool prev_zero = true;
    for (int i = 0; i < m; ++i) {
      if (a(i, j) == 1) {
        ++ones;
        where = i;
      }
      if (a(i, j - 1) != 0) prev_zero = false;
    }
    if (ones == 1 && where == m - 1 && prev_zero) {
      SignMatrix b = a;
      b.set(m - 1, j, 0);
      b.set(m - 1, j - 1, 1);
      out.emplace_back(std::move(b), "swap unit column " + std::to_string(j + 1) +
                                         " with zero column " + std::to_string(j));
    }
  }
  return out;
}

inline long long sum_matrix_total(const Srm& a) {
  const SumMatrix s = sum_matrix(a);
  long long total = 0;
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) total += s(i, j);
  return total;
}

}  // namespace srm
