#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "srm/core.hpp"
#include "srm/enumerate.hpp"
#include "srm/matrix.hpp"

namespace srm {

/// Adding (sign=+1) or subtracting (sign=-1) the matrix E = [[1,-1],[-1,1]]
/// on rows {r1,r2} and columns {c1,c2}; changes exactly four entries and
/// never the margins.
struct InterchangeStep {
  int r1, r2;  // r1 < r2
  int c1, c2;  // c1 < c2
  int sign;    // +1 or -1

  InterchangeStep inverted() const { return {r1, r2, c1, c2, -sign}; }

  std::string to_string() const {
    return "(" + std::to_string(r1 + 1) + "," + std::to_string(r2 + 1) + ")x(" +
           std::to_string(c1 + 1) + "," + std::to_string(c2 + 1) + ") " +
           (sign > 0 ? "+" : "-");
  }

  friend bool operator==(const InterchangeStep&, const InterchangeStep&) = default;
};

enum class TraceClass { Srm, PmClass, ZeroOne };

/// A start matrix plus interchange steps whose replay stays inside
/// certified_class with constant margins.
struct InterchangeTrace {
  SignMatrix start;
  std::vector<InterchangeStep> steps;
  TraceClass certified_class = TraceClass::Srm;
};

inline SignMatrix apply_interchange(const SignMatrix& a, const InterchangeStep& s) {
  if (!(0 <= s.r1 && s.r1 < s.r2 && s.r2 < a.rows() && 0 <= s.c1 && s.c1 < s.c2 &&
        s.c2 < a.cols()))
    throw std::invalid_argument("apply_interchange: indices out of range");
  if (s.sign != 1 && s.sign != -1) throw std::invalid_argument("apply_interchange: bad sign");
  const int v11 = a(s.r1, s.c1) + s.sign;
  const int v12 = a(s.r1, s.c2) - s.sign;
  const int v21 = a(s.r2, s.c1) - s.sign;
  const int v22 = a(s.r2, s.c2) + s.sign;
  for (int v : {v11, v12, v21, v22})
    if (v < -1 || v > 1)
      throw std::invalid_argument("apply_interchange: entry would leave {-1,0,1}");
  SignMatrix b = a;
  b.set(s.r1, s.c1, v11);
  b.set(s.r1, s.c2, v12);
  b.set(s.r2, s.c1, v21);
  b.set(s.r2, s.c2, v22);
  return b;
}

/// Replays a trace, checking every intermediate against the certified class;
/// returns all matrices from start to final.
inline std::vector<SignMatrix> replay_trace(const InterchangeTrace& t) {
  std::vector<SignMatrix> out{t.start};
  const MarginPair base = margins(t.start);
  for (const InterchangeStep& s : t.steps) {
    SignMatrix next = apply_interchange(out.back(), s);
    switch (t.certified_class) {
      case TraceClass::Srm:
        if (!validate_srm(next).ok()) throw std::logic_error("trace leaves the SRM class");
        break;
      case TraceClass::ZeroOne:
        for (int i = 0; i < next.rows(); ++i)
          for (int j = 0; j < next.cols(); ++j)
            if (next(i, j) < 0) throw std::logic_error("trace leaves the (0,1) class");
        break;
      case TraceClass::PmClass:
        break;  // entry range enforced by apply_interchange
    }
    if (margins(next) != base) throw std::logic_error("trace changed the margins");
    out.push_back(std::move(next));
  }
  return out;
}

inline SignMatrix trace_final(const InterchangeTrace& t) { return replay_trace(t).back(); }

struct EliminationResult {
  Srm result;
  InterchangeTrace trace;
};

/// Removes the -1 entries of an SRM one interchange at a time: pick a -1 at
/// (i,j) with i+j minimal (ties: smallest i), pivot on the nearest 1 above in
/// column j and the nearest 1 to the left in row i, and add E there.  The
/// trace has exactly one step per -1 of the input and every intermediate is an
/// SRM with the same margins.
inline EliminationResult eliminate_minus_ones(const Srm& a) {
  SignMatrix cur = a.matrix();
  InterchangeTrace trace{cur, {}, TraceClass::Srm};
  for (;;) {
    int bi = -1, bj = -1;
    for (int i = 0; i < cur.rows(); ++i)
      for (int j = 0; j < cur.cols(); ++j)
        if (cur(i, j) == -1 && (bi < 0 || i + j < bi + bj)) {
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    int k = -1, l = -1;
    for (int t = bi - 1; t >= 0; --t)
      if (cur(t, bj) == 1) {
        k = t;
        break;
      }
    for (int t = bj - 1; t >= 0; --t)
      if (cur(bi, t) == 1) {
        l = t;
        break;
      }
    if (k < 0 || l < 0 || cur(k, l) != 0)
      throw std::logic_error("eliminate_minus_ones: pivot structure broken");
    InterchangeStep step{k, bi, l, bj, +1};
    cur = apply_interchange(cur, step);
    if (!validate_srm(cur).ok()) throw std::logic_error("eliminate_minus_ones: left SRM class");
    trace.steps.push_back(step);
  }
  return {require_srm(cur), std::move(trace)};
}

namespace detail {

/// Connects two (0,1)-SRMs with equal margins by interchanges; every column
/// holds at most one 1, so a 2x2 swap along a difference cycle is always legal
/// and each step settles at least two disagreeing cells.
inline std::vector<InterchangeStep> connect_01_srms(const SignMatrix& from, const SignMatrix& to) {
  std::vector<InterchangeStep> steps;
  SignMatrix cur = from;
  while (cur != to) {
    int pi = -1, pj = -1;
    for (int i = 0; i < cur.rows() && pi < 0; ++i)
      for (int j = 0; j < cur.cols(); ++j)
        if (cur(i, j) == 1 && to(i, j) == 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) throw std::logic_error("connect_01_srms: no surplus cell despite difference");
    int j2 = -1;
    for (int j = 0; j < cur.cols(); ++j)
      if (cur(pi, j) == 0 && to(pi, j) == 1) {
        j2 = j;
        break;
      }
    int i2 = -1;
    for (int i = 0; i < cur.rows(); ++i)
      if (cur(i, j2) == 1 && to(i, j2) == 0) {
        i2 = i;
        break;
      }
    if (j2 < 0 || i2 < 0) throw std::logic_error("connect_01_srms: difference cycle broken");
    InterchangeStep s{std::min(pi, i2), std::max(pi, i2), std::min(pj, j2), std::max(pj, j2),
                      ((pi < i2) == (pj < j2)) ? -1 : +1};
    cur = apply_interchange(cur, s);
    steps.push_back(s);
  }
  return steps;
}

}  // namespace detail

/// Interchange path between SRMs with equal margins, all intermediates SRMs:
/// strips the -1's off both ends, then connects the two (0,1)-matrices.
inline InterchangeTrace srm_interchange_path(const Srm& a, const Srm& b) {
  if (margins(a) != margins(b)) throw std::invalid_argument("srm_interchange_path: margin mismatch");
  EliminationResult ea = eliminate_minus_ones(a);
  EliminationResult eb = eliminate_minus_ones(b);
  InterchangeTrace trace{a.matrix(), ea.trace.steps, TraceClass::Srm};
  for (const InterchangeStep& s :
       detail::connect_01_srms(ea.result.matrix(), eb.result.matrix()))
    trace.steps.push_back(s);
  for (auto it = eb.trace.steps.rbegin(); it != eb.trace.steps.rend(); ++it)
    trace.steps.push_back(it->inverted());
  if (trace_final(trace) != b.matrix()) throw std::logic_error("srm_interchange_path: replay mismatch");
  return trace;
}

/// Nonemptiness of the (0,1,2)-matrix class with margins (R,S):
/// sum_{j<=k} s_j <= sum_i min{r_i, 2k} for k = 1..n, S sorted nonincreasing.
inline bool a012_nonempty(std::vector<int> r, std::vector<int> s) {
  long long rs = 0, cs = 0;
  for (int x : r) {
    if (x < 0) throw std::invalid_argument("a012_nonempty: negative row sum");
    rs += x;
  }
  for (int x : s) {
    if (x < 0) throw std::invalid_argument("a012_nonempty: negative column sum");
    cs += x;
  }
  if (rs != cs) throw std::invalid_argument("a012_nonempty: sum mismatch");
  std::sort(s.begin(), s.end(), std::greater<int>());
  long long lhs = 0;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    lhs += s[k - 1];
    long long rhs = 0;
    for (int x : r) rhs += std::min<long long>(x, 2 * static_cast<long long>(k));
    if (lhs > rhs) return false;
  }
  return true;
}

/// Nonemptiness of A^{+-}(R,S): sum_{j<=k} s_j <= sum_i min{r_i+n, 2k} - km,
/// k = 1..n, S sorted nonincreasing.  Equivalent, via A -> A+J, to the
/// (0,1,2)-test on the shifted margins (R + n, S + m).
inline bool pm_nonempty(std::vector<int> r, std::vector<int> s) {
  const int m = static_cast<int>(r.size());
  const int n = static_cast<int>(s.size());
  long long rs = std::accumulate(r.begin(), r.end(), 0ll);
  long long cs = std::accumulate(s.begin(), s.end(), 0ll);
  if (rs != cs) throw std::invalid_argument("pm_nonempty: sum mismatch");
  for (int x : r)
    if (std::abs(x) > n) return false;
  for (int x : s)
    if (std::abs(x) > m) return false;
  std::sort(s.begin(), s.end(), std::greater<int>());
  long long lhs = 0;
  for (int k = 1; k <= n; ++k) {
    lhs += s[k - 1];
    long long rhs = -static_cast<long long>(k) * m;
    for (int x : r) rhs += std::min<long long>(x + n, 2 * static_cast<long long>(k));
    if (lhs > rhs) return false;
  }
  return true;
}

/// Gale-Ryser: A(R,S) is nonempty iff, with R sorted nonincreasing,
/// sum_{i<=k} r_i <= sum_j min{s_j, k} for every k and the totals agree.
inline bool gale_ryser_nonempty(std::vector<int> r, const std::vector<int>& s) {
  long long rs = 0, cs = 0;
  for (int x : r) {
    if (x < 0 || x > static_cast<int>(s.size())) return false;
    rs += x;
  }
  for (int x : s) {
    if (x < 0 || x > static_cast<int>(r.size())) return false;
    cs += x;
  }
  if (rs != cs) return false;
  std::sort(r.begin(), r.end(), std::greater<int>());
  long long lhs = 0;
  for (std::size_t k = 1; k <= r.size(); ++k) {
    lhs += r[k - 1];
    long long rhs = 0;
    for (int x : s) rhs += std::min<long long>(x, k);
    if (lhs > rhs) return false;
  }
  return true;
}

/// One member of A(R,S): columns processed by decreasing sum, each assigning
/// its 1's to the rows with the largest remaining demand.
inline std::optional<SignMatrix> gale_ryser_realization(const std::vector<int>& r,
                                                        const std::vector<int>& s) {
  if (!gale_ryser_nonempty(r, s)) return std::nullopt;
  const int m = static_cast<int>(r.size());
  const int n = static_cast<int>(s.size());
  std::vector<int> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  std::stable_sort(cols.begin(), cols.end(), [&](int x, int y) { return s[x] > s[y]; });
  std::vector<int> residual = r;
  SignMatrix a(m, n);
  for (int j : cols) {
    std::vector<int> rows(m);
    std::iota(rows.begin(), rows.end(), 0);
    std::stable_sort(rows.begin(), rows.end(),
                     [&](int x, int y) { return residual[x] > residual[y]; });
    for (int t = 0; t < s[j]; ++t) {
      a.set(rows[t], j, 1);
      --residual[rows[t]];
    }
  }
  if (margins(a) != MarginPair{r, s}) throw std::logic_error("gale_ryser_realization: margins off");
  return a;
}

/// Does A(R,S) = A^{+-}(R,S)?  Holds exactly when, in a realization, every 0
/// is the only 0 of its row or the only 0 of its column; otherwise some 2x2
/// submatrix with at most one 1 admits an interchange that introduces a -1.
inline bool class_equality(const std::vector<int>& r, const std::vector<int>& s) {
  std::optional<SignMatrix> a = gale_ryser_realization(r, s);
  if (!a) throw std::invalid_argument("class_equality: A(R,S) is empty");
  const int m = a->rows(), n = a->cols();
  std::vector<int> row_zeros(m, 0), col_zeros(n, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if ((*a)(i, j) == 0) {
        ++row_zeros[i];
        ++col_zeros[j];
      }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if ((*a)(i, j) == 0 && row_zeros[i] > 1 && col_zeros[j] > 1) return false;
  return true;
}

/// All matrices reachable from a by one legal interchange.
inline std::vector<std::pair<InterchangeStep, SignMatrix>> pm_interchange_neighbors(
    const SignMatrix& a) {
  std::vector<std::pair<InterchangeStep, SignMatrix>> out;
  for (int r1 = 0; r1 < a.rows(); ++r1)
    for (int r2 = r1 + 1; r2 < a.rows(); ++r2)
      for (int c1 = 0; c1 < a.cols(); ++c1)
        for (int c2 = c1 + 1; c2 < a.cols(); ++c2)
          for (int sign : {+1, -1}) {
            const InterchangeStep s{r1, r2, c1, c2, sign};
            const int v11 = a(r1, c1) + sign, v12 = a(r1, c2) - sign;
            const int v21 = a(r2, c1) - sign, v22 = a(r2, c2) + sign;
            if (v11 < -1 || v11 > 1 || v12 < -1 || v12 > 1 || v21 < -1 || v21 > 1 || v22 < -1 ||
                v22 > 1)
              continue;
            out.emplace_back(s, apply_interchange(a, s));
          }
  return out;
}

/// Shortest interchange path inside A^{+-}(R,S), found by breadth-first
/// search from both endpoints.
inline InterchangeTrace pm_interchange_path(const SignMatrix& a, const SignMatrix& b,
                                            int max_cells = kDefaultMaxCells,
                                            long long node_budget = 2'000'000) {
  if (margins(a) != margins(b)) throw std::invalid_argument("pm_interchange_path: margin mismatch");
  if (static_cast<long long>(a.rows()) * a.cols() > max_cells)
    throw CapExceeded("pm_interchange_path: matrix exceeds cell cap");
  InterchangeTrace trace{a, {}, TraceClass::PmClass};
  if (a == b) return trace;

  using Visited = std::map<SignMatrix, std::pair<SignMatrix, InterchangeStep>>;
  Visited fwd, bwd;  // node -> (parent, step with apply(parent, step) == node)
  const InterchangeStep dummy{0, 1, 0, 1, 1};
  fwd.emplace(a, std::make_pair(a, dummy));
  bwd.emplace(b, std::make_pair(b, dummy));
  std::vector<SignMatrix> frontier_f{a}, frontier_b{b};
  long long visited = 2;
  std::optional<SignMatrix> meet;

  while (!meet && !frontier_f.empty() && !frontier_b.empty()) {
    const bool expand_fwd = frontier_f.size() <= frontier_b.size();
    Visited& own = expand_fwd ? fwd : bwd;
    Visited& other = expand_fwd ? bwd : fwd;
    std::vector<SignMatrix>& frontier = expand_fwd ? frontier_f : frontier_b;
    std::vector<SignMatrix> next;
    for (const SignMatrix& cur : frontier) {
      for (auto& [step, nb] : pm_interchange_neighbors(cur)) {
        if (own.contains(nb)) continue;
        own.emplace(nb, std::make_pair(cur, step));
        next.push_back(nb);
        if (++visited > node_budget)
          throw std::runtime_error("pm_interchange_path: search budget exceeded");
        if (other.contains(nb)) {
          meet = nb;
          break;
        }
      }
      if (meet) break;
    }
    frontier = std::move(next);
  }
  if (!meet) throw std::logic_error("pm_interchange_path: class not connected");

  std::vector<InterchangeStep> head;  // a -> meet
  for (SignMatrix v = *meet; v != a;) {
    auto& [parent, step] = fwd.at(v);
    head.push_back(step);
    v = parent;
  }
  std::reverse(head.begin(), head.end());
  trace.steps = std::move(head);
  for (SignMatrix v = *meet; v != b;) {  // meet -> b by inverting the bwd tree
    auto& [parent, step] = bwd.at(v);
    trace.steps.push_back(step.inverted());
    v = parent;
  }
  if (trace_final(trace) != b) throw std::logic_error("pm_interchange_path: replay mismatch");
  return trace;
}

}  // namespace srm
