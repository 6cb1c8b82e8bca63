#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "srm/bruhat.hpp"
#include "srm/core.hpp"
#include "srm/decompose.hpp"
#include "srm/digraph.hpp"
#include "srm/enumerate.hpp"
#include "srm/interchange.hpp"
#include "srm/matrix.hpp"
#include "srm/polytope.hpp"

namespace srm::verify {

struct SuiteResult {
  std::string key;
  bool pass = true;
  std::string detail;
};

namespace detail {

class Check {
 public:
  void require(bool cond, const std::string& what) {
    ++checked_;
    if (!cond && first_failure_.empty()) first_failure_ = what;
    pass_ &= cond;
  }
  SuiteResult result(std::string key) const {
    std::string detail = pass_ ? std::to_string(checked_) + " checks" : first_failure_;
    return {std::move(key), pass_, std::move(detail)};
  }

 private:
  bool pass_ = true;
  long long checked_ = 0;
  std::string first_failure_;
};

/// All (R,S) margin pairs with entries in [lo,hi] and equal totals.
inline std::vector<MarginPair> margin_pairs(int m, int n, int rlo, int rhi, int slo, int shi) {
  std::vector<std::vector<int>> rs, ss;
  std::vector<int> cur;
  std::function<void(int, int, int, std::vector<std::vector<int>>&)> gen =
      [&](int len, int lo, int hi, std::vector<std::vector<int>>& out) {
        if (static_cast<int>(cur.size()) == len) {
          out.push_back(cur);
          return;
        }
        for (int v = lo; v <= hi; ++v) {
          cur.push_back(v);
          gen(len, lo, hi, out);
          cur.pop_back();
        }
      };
  gen(m, rlo, rhi, rs);
  cur.clear();
  gen(n, slo, shi, ss);
  std::vector<MarginPair> out;
  for (const auto& r : rs)
    for (const auto& s : ss)
      if (std::accumulate(r.begin(), r.end(), 0) == std::accumulate(s.begin(), s.end(), 0))
        out.push_back({r, s});
  return out;
}

/// Exact test for x in conv(others): by Caratheodory it suffices to scan
/// affinely independent subsets of size at most n+1 and solve the barycentric
/// system over the rationals.
inline bool in_convex_hull(const std::vector<int>& x, const std::vector<std::vector<int>>& others) {
  const int n = static_cast<int>(x.size());
  const int count = static_cast<int>(others.size());
  std::vector<int> pick;
  std::function<bool(int, int)> scan = [&](int start, int want) -> bool {
    if (want == 0) {
      const int k = static_cast<int>(pick.size());
      // rows: n coordinate equations plus the affine one; columns: lambdas | rhs
      std::vector<std::vector<Rational>> aug(n + 1, std::vector<Rational>(k + 1, 0));
      for (int e = 0; e < n; ++e) {
        for (int t = 0; t < k; ++t) aug[e][t] = others[pick[t]][e];
        aug[e][k] = x[e];
      }
      for (int t = 0; t < k; ++t) aug[n][t] = 1;
      aug[n][k] = 1;
      // eliminate
      std::vector<int> pivot_of_col(k, -1);
      int row = 0;
      for (int col = 0; col < k && row <= n; ++col) {
        int pr = -1;
        for (int r = row; r <= n; ++r)
          if (aug[r][col] != 0) {
            pr = r;
            break;
          }
        if (pr < 0) continue;
        std::swap(aug[row], aug[pr]);
        for (int r = 0; r <= n; ++r) {
          if (r == row || aug[r][col] == 0) continue;
          const Rational f = aug[r][col] / aug[row][col];
          for (int cc = col; cc <= k; ++cc) aug[r][cc] -= f * aug[row][cc];
        }
        pivot_of_col[col] = row;
        ++row;
      }
      if (row < k) return false;  // affinely dependent subset; a smaller one will cover it
      for (int r = row; r <= n; ++r)
        if (aug[r][k] != 0) return false;  // inconsistent
      for (int col = 0; col < k; ++col) {
        const Rational lambda = aug[pivot_of_col[col]][k] / aug[pivot_of_col[col]][col];
        if (lambda < 0) return false;
      }
      return true;
    }
    for (int i = start; i + want <= count; ++i) {
      pick.push_back(i);
      if (scan(i + 1, want - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= n + 1 && k <= count; ++k)
    if (scan(0, k)) return true;
  return false;
}

/// Digraph edge-set sweep: all simple digraphs on n vertices with at most
/// max_edges edges, together with every loop set.
template <typename F>
void for_each_digraph(int n, int max_edges, F&& visit) {
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) all.emplace_back(u, v);
  const int total = static_cast<int>(all.size());
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int start) {
    if (!chosen.empty()) {
      std::vector<std::pair<int, int>> edges;
      for (int e : chosen) edges.push_back(all[e]);
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> loops;
        for (int v = 0; v < n; ++v)
          if (mask >> v & 1) loops.push_back(v);
        visit(LoopedDigraph(n, edges, loops));
      }
    }
    if (static_cast<int>(chosen.size()) == max_edges) return;
    for (int e = start; e < total; ++e) {
      chosen.push_back(e);
      rec(e + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

inline bool some_order_is_srm(const LoopedDigraph& d) {
  std::vector<int> vperm(d.vertex_count), eperm(d.edges.size());
  std::iota(vperm.begin(), vperm.end(), 0);
  std::vector<int> ebase(d.edges.size());
  std::iota(ebase.begin(), ebase.end(), 0);
  do {
    eperm = ebase;
    do {
      if (validate_srm(generalized_incidence(d, vperm, eperm)).ok()) return true;
    } while (std::next_permutation(eperm.begin(), eperm.end()));
  } while (std::next_permutation(vperm.begin(), vperm.end()));
  return false;
}

}  // namespace detail

inline SuiteResult prop1_margins() {
  detail::Check ck;
  for (const MarginPair& p : detail::margin_pairs(2, 3, 0, 3, 0, 1)) {
    if (!realizable_margins(p)) continue;
    const Srm a = canonical_staircase(p);
    ck.require(margins(a) == p, "staircase margins mismatch");
  }
  for_each_srm(2, 3, ClassFilter::all(), [&](const Srm& a) {
    ck.require(realizable_margins(margins(a)), "enumerated SRM margins fail Prop 1");
  });
  ck.require(realizable_margins({{2, 0, 0, 1}, {1, 1, 1}}), "known realizable pair rejected");
  ck.require(!realizable_margins({{1}, {2}}), "S=(2) accepted");
  return ck.result("Prop 1 (row/column sum vectors)");
}

inline SuiteResult thm3_max_nonzeros() {
  detail::Check ck;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      ck.require(brute_force_max_nonzeros(m, n) == max_nonzeros(m, n),
                 "zeta mismatch at " + std::to_string(m) + "x" + std::to_string(n));
  ck.require(max_nonzeros(6, 8) == 37, "zeta(6,8) != 37");
  ck.require(max_nonzeros(9, 11) == 76, "zeta(9,11) != 76");
  for (auto [m, n] : {std::pair{6, 8}, {9, 11}, {7, 7}})
    ck.require(nonzero_count(extremal_srm(m, n).matrix()) == max_nonzeros(m, n),
               "extremal matrix misses the maximum");
  return ck.result("Thm 3 (maximum nonzeros)");
}

inline SuiteResult thm5_incidence() {
  detail::Check ck;
  LoopedDigraph ex4(4, {{0, 1}, {1, 2}, {1, 3}}, {2, 3});
  ck.require(srm_orderable(ex4), "worked digraph not orderable");
  ck.require(validate_srm(srm_ordering(ex4).matrix.matrix()).ok(), "ordering output invalid");
  detail::for_each_digraph(3, 3, [&](const LoopedDigraph& d) {
    if (d.edges.empty()) return;
    ck.require(srm_orderable(d) == detail::some_order_is_srm(d),
               "conditions disagree with exhaustive order search");
  });
  return ck.result("Thm 5 (incidence orderability)");
}

inline SuiteResult thm6_elimination() {
  detail::Check ck;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for_each_srm(m, n, ClassFilter::all(), [&](const Srm& a) {
        int minus = 0;
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < n; ++j) minus += a(i, j) == -1;
        const EliminationResult r = eliminate_minus_ones(a);
        ck.require(static_cast<int>(r.trace.steps.size()) == minus, "trace length != #(-1)");
        ck.require(r.result.is_plus(), "residual -1 after elimination");
        ck.require(margins(r.result) == margins(a), "elimination changed margins");
        ck.require(replay_trace(r.trace).back() == r.result.matrix(), "trace replay mismatch");
      });
  return ck.result("Thm 6 (interchange elimination)");
}

inline SuiteResult lemma8_cor9_nonempty() {
  detail::Check ck;
  for (const MarginPair& p : detail::margin_pairs(2, 2, -2, 2, -2, 2)) {
    const bool empty = enumerate_pm_class(p).empty();
    ck.require(pm_nonempty(p.row_sums, p.col_sums) == !empty, "Cor 9 disagrees with enumeration");
    std::vector<int> rshift = p.row_sums, sshift = p.col_sums;
    for (int& v : rshift) v += 2;
    for (int& v : sshift) v += 2;
    ck.require(a012_nonempty(rshift, sshift) == !empty, "Lemma 8 via A -> A+J disagrees");
  }
  ck.require(pm_nonempty({2, 0}, {2, 0}), "worked instance R=S=(2,0) rejected");
  return ck.result("Lemma 8 / Cor 9 (class nonemptiness)");
}

inline SuiteResult cor11_connectivity() {
  detail::Check ck;
  for (const MarginPair& p : detail::margin_pairs(2, 2, -2, 2, -2, 2)) {
    const std::vector<SignMatrix> cls = enumerate_pm_class(p);
    if (cls.size() < 2) continue;
    std::set<SignMatrix> seen{cls[0]};
    std::vector<SignMatrix> frontier{cls[0]};
    while (!frontier.empty()) {
      std::vector<SignMatrix> next;
      for (const SignMatrix& cur : frontier)
        for (auto& [step, nb] : pm_interchange_neighbors(cur))
          if (seen.insert(nb).second) next.push_back(nb);
      frontier = std::move(next);
    }
    ck.require(seen.size() == cls.size(), "interchange graph disconnected");
  }
  return ck.result("Cor 11 (interchange connectivity)");
}

inline SuiteResult thm12_class_equality() {
  detail::Check ck;
  for (int m = 2; m <= 3; ++m) {
    const int n = m;
    for (const MarginPair& p : detail::margin_pairs(m, n, 0, n, 0, m)) {
      if (!gale_ryser_nonempty(p.row_sums, p.col_sums)) continue;
      bool any_minus = false;
      for_each_pm_matrix(p, [&](const SignMatrix& x) {
        for (int i = 0; i < m && !any_minus; ++i)
          for (int j = 0; j < n; ++j)
            if (x(i, j) == -1) {
              any_minus = true;
              break;
            }
      });
      ck.require(class_equality(p.row_sums, p.col_sums) == !any_minus,
                 "structural test disagrees with brute force");
    }
  }
  ck.require(class_equality({8, 7, 7, 5, 7, 7}, {6, 6, 5, 5, 5, 5, 5, 4}), "worked 6x8 instance");
  ck.require(!class_equality({1, 1, 2}, {2, 1, 1}), "worked 3x3 counterexample");
  return ck.result("Thm 12 (A(R,S) = A^{+-}(R,S))");
}

inline SuiteResult thm13_pm_hull() {
  detail::Check ck;
  for (const MarginPair& p : detail::margin_pairs(2, 2, -2, 2, -2, 2)) {
    const std::vector<SignMatrix> cls = enumerate_pm_class(p);
    long long integral = 0;
    ClassFilter unfiltered;
    auto probe = [&](const SignMatrix& x) {
      if (polytope_contains(RationalMatrix(x), PolytopeSpec::pm_hull(p.row_sums, p.col_sums)).ok)
        ++integral;
    };
    srm::detail::Backtracker<decltype(probe)> bt(2, 2, false, unfiltered, probe);
    bt.run();
    ck.require(integral == static_cast<long long>(cls.size()),
               "integral points differ from the class");
    for (const SignMatrix& x : cls)
      ck.require(is_vertex(RationalMatrix(x), PolytopeSpec::pm_hull(p.row_sums, p.col_sums)),
                 "class member is not a vertex of its hull");
  }
  return ck.result("Thm 13 (A^{+-} convex hull)");
}

inline SuiteResult thm15_lattice() {
  detail::Check ck;
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}}) {
    const std::vector<Srm> cls = enumerate_srms(m, n);
    for (const Srm& a : cls)
      for (const Srm& b : cls) {
        const Srm meet = bruhat_meet(a, b), join = bruhat_join(a, b);
        ck.require(bruhat_leq(meet, a) && bruhat_leq(meet, b), "meet not a lower bound");
        ck.require(bruhat_leq(a, join) && bruhat_leq(b, join), "join not an upper bound");
        ck.require(bruhat_meet(a, a) == a && bruhat_join(a, a) == a, "idempotence");
        ck.require(meet == bruhat_meet(b, a) && join == bruhat_join(b, a), "commutativity");
        ck.require(bruhat_join(a, meet) == a && bruhat_meet(a, join) == a, "absorption");
      }
    for (const Srm& a : cls)
      for (const Srm& b : cls)
        for (const Srm& c : cls) {
          ck.require(bruhat_meet(a, bruhat_join(b, c)) ==
                         bruhat_join(bruhat_meet(a, b), bruhat_meet(a, c)),
                     "distributivity fails");
          ck.require(bruhat_meet(bruhat_meet(a, b), c) == bruhat_meet(a, bruhat_meet(b, c)),
                     "meet associativity fails");
        }
    for (const Srm& a : cls) {
      const std::vector<Srm> dec = meet_irreducible_decomposition(a);
      for (const Srm& t : dec) ck.require(t.is_plus(), "decomposition factor has a -1");
      ck.require(bruhat_meet_all(dec) == a, "Dedekind-MacNeille witness fails");
    }
  }
  ck.require(join_fallback_count() == 0, "join fallback activated");
  return ck.result("Thm 15 (distributive lattice / D-M completion)");
}

inline SuiteResult lemma17_sum_matrices() {
  detail::Check ck;
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    std::set<IntMatrix> sums;
    for_each_srm(m, n, ClassFilter::plus(),
                 [&](const Srm& a) { sums.insert(sum_matrix(a.matrix())); });
    // every Eq.(5)-true matrix reconstructs into S+, so entries stay <= n
    IntMatrix s(m, n);
    std::function<void(int)> sweep = [&](int cell) {
      if (cell == m * n) {
        ck.require(is_plus_sum_matrix(s) == sums.contains(s), "Eq.(5) disagrees with enumeration");
        return;
      }
      for (int v = 0; v <= n; ++v) {
        s.set(cell / n, cell % n, v);
        sweep(cell + 1);
      }
    };
    sweep(0);
  }
  return ck.result("Lemma 17 (S+ sum-matrix characterization)");
}

inline SuiteResult lemma18_bruhat_interchanges() {
  detail::Check ck;
  std::vector<std::vector<int>> row_sum_choices = {{1, 1, 1}, {2, 1, 0}, {0, 1, 2}, {3, 0, 0},
                                                   {0, 3, 0}, {1, 0, 2}};
  for (const std::vector<int>& r : row_sum_choices) {
    const std::vector<SignMatrix> cls = enumerate_01_class({r, {1, 1, 1}});
    for (const SignMatrix& a : cls)
      for (const SignMatrix& c : cls) {
        const SumMatrix sa = sum_matrix(a), sc = sum_matrix(c);
        bool dom = true;
        for (int i = 0; i < 3 && dom; ++i)
          for (int j = 0; j < 3; ++j)
            if (sa(i, j) < sc(i, j)) {
              dom = false;
              break;
            }
        if (!dom) continue;
        SignMatrix w = c;
        for (const BruhatInterchange& s : bruhat_interchange_sequence(c, a))
          w = apply_bruhat_interchange(w, s);
        ck.require(w == a, "interchange sequence does not reach the target");
      }
  }
  return ck.result("Lemma 18 (Bruhat interchange reachability)");
}

inline SuiteResult thm19_four_operations() {
  detail::Check ck;
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}}) {
    const std::vector<Srm> cls = enumerate_srms(m, n, ClassFilter::plus());
    for (const Srm& c : cls)
      for (const Srm& a : cls) {
        if (bruhat_leq(a, c)) {
          const std::vector<BruhatOp> ops = bruhat_op_sequence(c, a);
          ck.require(replay_bruhat_ops(c.matrix(), ops) == a.matrix(), "op replay mismatch");
        } else {
          bool threw = false;
          try {
            bruhat_op_sequence(c, a);
          } catch (const std::invalid_argument&) {
            threw = true;
          }
          ck.require(threw, "op sequence built for an incomparable pair");
        }
      }
  }
  return ck.result("Thm 19 (four-operation transformation)");
}

inline SuiteResult cor20_cover_operations() {
  detail::Check ck;
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    for_each_srm(m, n, ClassFilter::plus(), [&](const Srm& x) {
      for (auto& [y, site] : cor20_covered(x.matrix())) {
        const Srm ys = require_srm(y);
        ck.require(sum_matrix_total(ys) == sum_matrix_total(x) + 1,
                   "operation does not raise total Sigma by 1 (" + site + ")");
        ck.require(covers(ys, x, /*plus_only=*/true), "operation result is not covered (" + site + ")");
      }
    });
  }
  return ck.result("Cor 20 (local cover operations)");
}

inline SuiteResult thm23_lemma24_extreme_points() {
  detail::Check ck;
  for (int n = 2; n <= 4; ++n) {
    const std::vector<std::vector<int>> xn = enumerate_alternating_vectors(n);
    for (const std::vector<int>& x : xn) ck.require(alternating_extreme_check(x), "X_n member rejected");
    ck.require(!alternating_extreme_check(std::vector<int>(n, 0)), "zero vector accepted");
    for (std::size_t i = 0; i < xn.size(); ++i) {
      std::vector<std::vector<int>> others;
      for (std::size_t j = 0; j < xn.size(); ++j)
        if (j != i) others.push_back(xn[j]);
      ck.require(!detail::in_convex_hull(xn[i], others), "X_n member is a convex combination");
    }
  }
  const PolytopeSpec spec = PolytopeSpec::c_srm(2, 2, 2);
  for_each_srm(2, 2, ClassFilter::all(), [&](const Srm& a) {
    ck.require(is_vertex(RationalMatrix(a.matrix()), spec), "SRM is not a polytope vertex");
  });
  return ck.result("Thm 23 / Lemma 24 (extreme points)");
}

inline SuiteResult thm26_c_srm_polytope() {
  detail::Check ck;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int c : std::set<int>{1, 2, n}) {
        const PolytopeReport rep = verify_polytope(m, n, c);
        ck.require(rep.ok(), "verify_polytope(" + std::to_string(m) + "," + std::to_string(n) +
                                 "," + std::to_string(c) + "): " + rep.first_discrepancy);
      }
  return ck.result("Thm 26 (c-SRM polytope description)");
}

inline SuiteResult thm27_decomposition() {
  detail::Check ck;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for_each_srm(m, n, ClassFilter::all(), [&](const Srm& a) {
        const SignedDecomposition d = signed_subperm_decomposition(a);
        ck.require(d.reconstruct(m, n) == to_int_matrix(a.matrix()), "reconstruction mismatch");
        ck.require(d.supports_disjoint(), "terms overlap");
        for (const SignedTerm& t : d.terms)
          ck.require(is_subpermutation(t.p), "term is not a subpermutation");
      });
  return ck.result("Thm 27 (signed subpermutation decomposition)");
}

inline SuiteResult thm28_cor29_joint() {
  detail::Check ck;
  // all near-constant R1 tuples on 2x2 margins
  for (const MarginPair& p : detail::margin_pairs(2, 2, 0, 2, 0, 2)) {
    std::vector<std::vector<int>> r1s, s1s;
    for (int a = 0; a <= p.row_sums[0]; ++a)
      for (int b = 0; b <= p.row_sums[1]; ++b)
        if (std::abs(a - b) <= 1) r1s.push_back({a, b});
    for (int a = 0; a <= p.col_sums[0]; ++a)
      for (int b = 0; b <= p.col_sums[1]; ++b) s1s.push_back({a, b});
    for (const auto& r1 : r1s)
      for (const auto& s1 : s1s) {
        std::vector<int> r2{p.row_sums[0] - r1[0], p.row_sums[1] - r1[1]};
        std::vector<int> s2{p.col_sums[0] - s1[0], p.col_sums[1] - s1[1]};
        if (std::accumulate(r1.begin(), r1.end(), 0) != std::accumulate(s1.begin(), s1.end(), 0))
          continue;
        const bool predicted = check_anstee_condition(p.row_sums, r1, p.col_sums, s1);
        const bool found = find_joint_realization(r1, s1, r2, s2).has_value();
        ck.require(predicted == found, "Thm 28 criterion disagrees with search");
      }
  }
  // Cor 29 shape: R1 = S1 = e on 2x2
  for (const MarginPair& p : detail::margin_pairs(2, 2, 0, 2, 0, 2)) {
    const std::vector<int> e{1, 1};
    std::vector<int> rp{p.row_sums[0] - 1, p.row_sums[1] - 1}, sp{p.col_sums[0] - 1,
                                                                 p.col_sums[1] - 1};
    if (rp[0] < 0 || rp[1] < 0 || sp[0] < 0 || sp[1] < 0) continue;
    const bool lhs = gale_ryser_nonempty(p.row_sums, p.col_sums) && gale_ryser_nonempty(rp, sp);
    const bool rhs = find_joint_realization(e, e, rp, sp).has_value();
    ck.require(lhs == rhs, "Cor 29 instance disagrees with search");
  }
  return ck.result("Thm 28 / Cor 29 (joint realization)");
}

inline std::vector<SuiteResult> run_all() {
  return {prop1_margins(),
          thm3_max_nonzeros(),
          thm5_incidence(),
          thm6_elimination(),
          lemma8_cor9_nonempty(),
          cor11_connectivity(),
          thm12_class_equality(),
          thm13_pm_hull(),
          thm15_lattice(),
          lemma17_sum_matrices(),
          lemma18_bruhat_interchanges(),
          thm19_four_operations(),
          cor20_cover_operations(),
          thm23_lemma24_extreme_points(),
          thm26_c_srm_polytope(),
          thm27_decomposition(),
          thm28_cor29_joint()};
}

}  // namespace srm::verify
