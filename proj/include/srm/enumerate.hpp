#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "srm/core.hpp"
#include "srm/matrix.hpp"

namespace srm {

/// Thrown when an exhaustive operation would exceed its configured cell cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kDefaultMaxCells = 20;

/// Restriction of an enumerated matrix class.
struct ClassFilter {
  bool plus_only = false;                    // no -1 entries
  std::optional<MarginPair> margin_constraint;  // exact row and column sums
  std::optional<int> c_bound;                // every row sum at most c

  ClassFilter() = default;

  static ClassFilter all() { return {}; }
  static ClassFilter plus() {
    ClassFilter f;
    f.plus_only = true;
    return f;
  }
  static ClassFilter with_margins(MarginPair p) {
    ClassFilter f;
    f.margin_constraint = std::move(p);
    return f;
  }
  static ClassFilter with_c(int c) {
    if (c < 0) throw std::invalid_argument("ClassFilter: c bound must be >= 0");
    ClassFilter f;
    f.c_bound = c;
    return f;
  }
};

namespace detail {

/// Column-major backtracker over (0,+-1)-matrices.  Cells are assigned one
/// column at a time, top to bottom, trying entry values -1 < 0 < 1, so
/// emission order is column-major lexicographic.  Prefix state is maintained
/// incrementally; a branch dies as soon as a column prefix leaves {0,1}, a row
/// prefix goes negative, or a margin/c bound becomes unreachable.
template <typename F>
class Backtracker {
 public:
  Backtracker(int m, int n, bool srm_constraints, const ClassFilter& filter, F& visit)
      : m_(m), n_(n), srm_(srm_constraints), filter_(filter), visit_(visit), work_(m, n),
        col_prefix_(0), row_prefix_(m, 0) {}

  void run() { descend(0, 0); }

 private:
  bool margin_feasible_after(int i, int j) const {
    const auto& mp = *filter_.margin_constraint;
    // column sum is pinned once the column is complete
    if (i == m_ - 1 && col_prefix_ != mp.col_sums[j]) return false;
    // row i: remaining columns change its sum by at most 1 each
    const int remaining = n_ - 1 - j;
    if (std::abs(mp.row_sums[i] - row_prefix_[i]) > remaining) return false;
    if (j == n_ - 1 && row_prefix_[i] != mp.row_sums[i]) return false;
    return true;
  }

  void descend(int i, int j) {
    if (j == n_) {
      visit_(work_);
      return;
    }
    for (int v = -1; v <= 1; ++v) {
      if (v == -1 && (filter_.plus_only || (srm_ && i == 0))) continue;
      col_prefix_ += v;
      row_prefix_[i] += v;
      bool ok = true;
      if (srm_) {
        if (col_prefix_ < 0 || col_prefix_ > 1 || row_prefix_[i] < 0) ok = false;
      }
      if (ok && filter_.margin_constraint) ok = margin_feasible_after(i, j);
      if (ok && filter_.c_bound) {
        const int remaining = n_ - 1 - j;
        if (row_prefix_[i] - remaining > *filter_.c_bound) ok = false;
        if (j == n_ - 1 && row_prefix_[i] > *filter_.c_bound) ok = false;
      }
      if (ok) {
        work_.set(i, j, v);
        if (i + 1 < m_) {
          descend(i + 1, j);
        } else {
          const int saved = col_prefix_;
          col_prefix_ = 0;
          descend(0, j + 1);
          col_prefix_ = saved;
        }
        work_.set(i, j, 0);
      }
      col_prefix_ -= v;
      row_prefix_[i] -= v;
    }
  }

  int m_, n_;
  bool srm_;
  const ClassFilter& filter_;
  F& visit_;
  SignMatrix work_;
  int col_prefix_;
  std::vector<int> row_prefix_;
};

inline void check_cap(int m, int n, int max_cells) {
  if (m < 1 || n < 1) throw std::invalid_argument("enumeration: dimensions must be >= 1");
  if (static_cast<long long>(m) * n > max_cells)
    throw CapExceeded("enumeration cap exceeded: " + std::to_string(m) + "x" + std::to_string(n) +
                      " > " + std::to_string(max_cells) + " cells");
}

}  // namespace detail

/// Streams every m x n SRM passing the filter, each exactly once, in
/// column-major lexicographic order (entries ordered -1 < 0 < 1).
template <typename F>
void for_each_srm(int m, int n, const ClassFilter& filter, F&& visit,
                  int max_cells = kDefaultMaxCells) {
  detail::check_cap(m, n, max_cells);
  if (filter.margin_constraint) {
    const auto& mp = *filter.margin_constraint;
    if (static_cast<int>(mp.row_sums.size()) != m || static_cast<int>(mp.col_sums.size()) != n)
      throw std::invalid_argument("enumeration: margin size mismatch");
  }
  auto wrap = [&](const SignMatrix& a) { visit(require_srm(a)); };
  detail::Backtracker<decltype(wrap)> bt(m, n, /*srm=*/true, filter, wrap);
  bt.run();
}

inline std::vector<Srm> enumerate_srms(int m, int n, const ClassFilter& filter = {},
                                       int max_cells = kDefaultMaxCells) {
  std::vector<Srm> out;
  for_each_srm(m, n, filter, [&](const Srm& a) { out.push_back(a); }, max_cells);
  return out;
}

inline long long count_srms(int m, int n, const ClassFilter& filter = {},
                            int max_cells = kDefaultMaxCells) {
  long long c = 0;
  for_each_srm(m, n, filter, [&](const Srm&) { ++c; }, max_cells);
  return c;
}

/// Streams all (0,+-1)-matrices with the exact margins (R,S); no sign
/// restriction.  Same deterministic order as for_each_srm.
template <typename F>
void for_each_pm_matrix(const MarginPair& p, F&& visit, int max_cells = kDefaultMaxCells) {
  const int m = static_cast<int>(p.row_sums.size());
  const int n = static_cast<int>(p.col_sums.size());
  detail::check_cap(m, n, max_cells);
  ClassFilter f = ClassFilter::with_margins(p);
  detail::Backtracker<F> bt(m, n, /*srm=*/false, f, visit);
  bt.run();
}

inline std::vector<SignMatrix> enumerate_pm_class(const MarginPair& p,
                                                  int max_cells = kDefaultMaxCells) {
  std::vector<SignMatrix> out;
  for_each_pm_matrix(p, [&](const SignMatrix& a) { out.push_back(a); }, max_cells);
  return out;
}

/// Streams all (0,1)-matrices with the exact margins (R,S) (the class A(R,S)).
template <typename F>
void for_each_01_matrix(const MarginPair& p, F&& visit, int max_cells = kDefaultMaxCells) {
  const int m = static_cast<int>(p.row_sums.size());
  const int n = static_cast<int>(p.col_sums.size());
  detail::check_cap(m, n, max_cells);
  ClassFilter f = ClassFilter::with_margins(p);
  f.plus_only = true;
  detail::Backtracker<F> bt(m, n, /*srm=*/false, f, visit);
  bt.run();
}

inline std::vector<SignMatrix> enumerate_01_class(const MarginPair& p,
                                                  int max_cells = kDefaultMaxCells) {
  std::vector<SignMatrix> out;
  for_each_01_matrix(p, [&](const SignMatrix& a) { out.push_back(a); }, max_cells);
  return out;
}

/// Exhaustive maximum of the nonzero count; oracle for the closed formula.
inline int brute_force_max_nonzeros(int m, int n, int max_cells = kDefaultMaxCells) {
  int best = 0;
  for_each_srm(m, n, ClassFilter::all(),
               [&](const Srm& a) { best = std::max(best, nonzero_count(a.matrix())); }, max_cells);
  return best;
}

}  // namespace srm
