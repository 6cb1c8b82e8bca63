#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srm/core.hpp"
#include "srm/enumerate.hpp"
#include "srm/matrix.hpp"

namespace srm {

using Rational = mpq_class;

/// Dense m x n matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("RationalMatrix: dimensions must be >= 1");
    entries_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
  }

  explicit RationalMatrix(const SignMatrix& a) : RationalMatrix(a.rows(), a.cols()) {
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) set(i, j, Rational(a(i, j)));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& operator()(int i, int j) const { return entries_[idx(i, j)]; }
  void set(int i, int j, Rational v) {
    v.canonicalize();
    entries_[idx(i, j)] = std::move(v);
  }

  bool is_integral() const {
    for (const Rational& v : entries_)
      if (v.get_den() != 1) return false;
    return true;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("RationalMatrix: index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_, cols_;
  std::vector<Rational> entries_;
};

/// Linear system selector: the c-SRM polytope (prefix system with a row-sum
/// cap) or the convex hull of A^{+-}(R,S) (margin equalities with unit entry
/// bounds, square matrices).
struct PolytopeSpec {
  enum class Kind { CSrm, PmHull };
  Kind kind = Kind::CSrm;
  int m = 0, n = 0;
  int c = 0;                       // CSrm only
  std::vector<int> row_sums, col_sums;  // PmHull only

  static PolytopeSpec c_srm(int m, int n, int c) {
    if (c < 0) throw std::invalid_argument("PolytopeSpec: c must be >= 0");
    PolytopeSpec s;
    s.kind = Kind::CSrm;
    s.m = m;
    s.n = n;
    s.c = c;
    return s;
  }

  static PolytopeSpec pm_hull(std::vector<int> r, std::vector<int> s) {
    if (r.size() != s.size())
      throw std::invalid_argument("PolytopeSpec: A^{+-} hull is defined for square matrices");
    PolytopeSpec spec;
    spec.kind = Kind::PmHull;
    spec.m = spec.n = static_cast<int>(r.size());
    spec.row_sums = std::move(r);
    spec.col_sums = std::move(s);
    return spec;
  }
};

struct ContainsResult {
  bool ok = true;
  std::string first_violation;
};

/// Exact evaluation of every inequality/equality of the spec's system, in a
/// fixed order (cells row-major, column prefix before row prefix, then row
/// caps resp. margin equalities first).
inline ContainsResult polytope_contains(const RationalMatrix& x, const PolytopeSpec& spec) {
  if (x.rows() != spec.m || x.cols() != spec.n)
    throw std::invalid_argument("polytope_contains: dimension mismatch");
  auto fail = [](std::string s) { return ContainsResult{false, std::move(s)}; };

  if (spec.kind == PolytopeSpec::Kind::CSrm) {
    std::vector<Rational> colp(spec.n, 0);
    for (int i = 0; i < spec.m; ++i) {
      Rational rowp = 0;
      for (int j = 0; j < spec.n; ++j) {
        colp[j] += x(i, j);
        rowp += x(i, j);
        if (colp[j] < 0)
          return fail("column " + std::to_string(j + 1) + " prefix sum " + colp[j].get_str() +
                      " < 0 at row " + std::to_string(i + 1));
        if (colp[j] > 1)
          return fail("column " + std::to_string(j + 1) + " prefix sum " + colp[j].get_str() +
                      " > 1 at row " + std::to_string(i + 1));
        if (rowp < 0)
          return fail("row " + std::to_string(i + 1) + " prefix sum " + rowp.get_str() +
                      " < 0 at column " + std::to_string(j + 1));
      }
      if (rowp > spec.c)
        return fail("row " + std::to_string(i + 1) + " sum " + rowp.get_str() + " > c = " +
                    std::to_string(spec.c));
    }
    return {};
  }

  for (int i = 0; i < spec.n; ++i) {
    Rational s = 0;
    for (int j = 0; j < spec.n; ++j) s += x(i, j);
    if (s != spec.row_sums[i])
      return fail("row " + std::to_string(i + 1) + " sum " + s.get_str() +
                  " != " + std::to_string(spec.row_sums[i]));
  }
  for (int j = 0; j < spec.n; ++j) {
    Rational s = 0;
    for (int i = 0; i < spec.n; ++i) s += x(i, j);
    if (s != spec.col_sums[j])
      return fail("column " + std::to_string(j + 1) + " sum " + s.get_str() +
                  " != " + std::to_string(spec.col_sums[j]));
  }
  for (int i = 0; i < spec.n; ++i)
    for (int j = 0; j < spec.n; ++j) {
      if (x(i, j) < -1 || x(i, j) > 1)
        return fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                    x(i, j).get_str() + " outside [-1,1]");
    }
  return {};
}

inline ContainsResult pm_hull_contains(const RationalMatrix& x, const std::vector<int>& r,
                                       const std::vector<int>& s) {
  return polytope_contains(x, PolytopeSpec::pm_hull(r, s));
}

namespace detail {

/// Rank of a rational matrix by Gaussian elimination with exact pivoting.
inline int rational_rank(std::vector<std::vector<Rational>> rows) {
  const int nrows = static_cast<int>(rows.size());
  if (nrows == 0) return 0;
  const int ncols = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (int j = col; j < ncols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// A member is a vertex iff its tight constraints pin it uniquely, i.e. the
/// tight-constraint system has full rank m*n over the rationals.
inline bool is_vertex(const RationalMatrix& x, const PolytopeSpec& spec) {
  const ContainsResult inside = polytope_contains(x, spec);
  if (!inside.ok) throw std::invalid_argument("is_vertex: not a member (" + inside.first_violation + ")");
  const int m = spec.m, n = spec.n, cells = m * n;
  std::vector<std::vector<Rational>> tight;
  auto cell = [n](int i, int j) { return i * n + j; };

  if (spec.kind == PolytopeSpec::Kind::CSrm) {
    for (int j = 0; j < n; ++j) {
      Rational prefix = 0;
      for (int i = 0; i < m; ++i) {
        prefix += x(i, j);
        if (prefix == 0 || prefix == 1) {
          std::vector<Rational> row(cells, 0);
          for (int k = 0; k <= i; ++k) row[cell(k, j)] = 1;
          tight.push_back(std::move(row));
        }
      }
    }
    for (int i = 0; i < m; ++i) {
      Rational prefix = 0;
      for (int j = 0; j < n; ++j) {
        prefix += x(i, j);
        if (prefix == 0) {
          std::vector<Rational> row(cells, 0);
          for (int k = 0; k <= j; ++k) row[cell(i, k)] = 1;
          tight.push_back(std::move(row));
        }
      }
      if (prefix == spec.c) {
        std::vector<Rational> row(cells, 0);
        for (int k = 0; k < n; ++k) row[cell(i, k)] = 1;
        tight.push_back(std::move(row));
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> row(cells, 0);
      for (int k = 0; k < n; ++k) row[cell(i, k)] = 1;
      tight.push_back(std::move(row));
    }
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> row(cells, 0);
      for (int k = 0; k < n; ++k) row[cell(k, j)] = 1;
      tight.push_back(std::move(row));
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (x(i, j) == 1 || x(i, j) == -1) {
          std::vector<Rational> row(cells, 0);
          row[cell(i, j)] = 1;
          tight.push_back(std::move(row));
        }
  }
  return detail::rational_rank(std::move(tight)) == cells;
}

/// Direct integer check of the c-SRM system; kept separate from the
/// enumeration path so the two can cross-validate each other.
inline bool integral_csrm_check(const SignMatrix& a, int c) {
  std::vector<int> colp(a.cols(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    int rowp = 0;
    for (int j = 0; j < a.cols(); ++j) {
      colp[j] += a(i, j);
      rowp += a(i, j);
      if (colp[j] < 0 || colp[j] > 1 || rowp < 0) return false;
    }
    if (rowp > c) return false;
  }
  return true;
}

struct PolytopeReport {
  int m = 0, n = 0, c = 0;
  long long integral_point_count = 0;
  bool integral_points_match_class = false;  // raw sweep == enumerated c-SRM class
  bool all_integral_points_vertices = false;
  bool c_covers_all_rows = false;        // c >= n, where the c cap is vacuous
  bool class_equals_unrestricted = true;  // only meaningful when c_covers_all_rows
  std::string first_discrepancy;

  bool ok() const {
    return integral_points_match_class && all_integral_points_vertices &&
           (!c_covers_all_rows || class_equals_unrestricted);
  }
};

/// Verifies, at desk scale, that the integral points of the c-SRM system are
/// exactly the enumerated c-SRM class and that each one is a vertex.  The raw
/// sweep walks all 3^(mn) sign matrices, so m*n is capped at 12.
inline PolytopeReport verify_polytope(int m, int n, int c, int max_cells = kDefaultMaxCells) {
  detail::check_cap(m, n, std::min(max_cells, 12));
  PolytopeReport rep;
  rep.m = m;
  rep.n = n;
  rep.c = c;
  rep.c_covers_all_rows = c >= n;

  const std::vector<Srm> cls = enumerate_srms(m, n, ClassFilter::with_c(c), max_cells);

  std::vector<SignMatrix> sweep;
  ClassFilter unfiltered;
  auto keep = [&](const SignMatrix& x) {
    if (integral_csrm_check(x, c)) sweep.push_back(x);
  };
  detail::Backtracker<decltype(keep)> bt(m, n, /*srm=*/false, unfiltered, keep);
  bt.run();

  rep.integral_point_count = static_cast<long long>(sweep.size());
  rep.integral_points_match_class = sweep.size() == cls.size();
  if (rep.integral_points_match_class)
    for (std::size_t i = 0; i < cls.size(); ++i)
      if (sweep[i] != cls[i].matrix()) {
        rep.integral_points_match_class = false;
        break;
      }
  if (!rep.integral_points_match_class)
    rep.first_discrepancy = "integral point sweep disagrees with enumerated class";

  rep.all_integral_points_vertices = true;
  const PolytopeSpec spec = PolytopeSpec::c_srm(m, n, c);
  for (const Srm& a : cls)
    if (!is_vertex(RationalMatrix(a.matrix()), spec)) {
      rep.all_integral_points_vertices = false;
      rep.first_discrepancy = "non-vertex integral point found";
      break;
    }

  if (rep.c_covers_all_rows) {
    const long long all = count_srms(m, n, ClassFilter::all(), max_cells);
    rep.class_equals_unrestricted = all == static_cast<long long>(cls.size());
    if (!rep.class_equals_unrestricted) rep.first_discrepancy = "c >= n class differs from S_{m,n}";
  }
  return rep;
}

/// Membership in X_n: nonzero, first nonzero entry is 1, and the nonzeros
/// alternate in sign.
inline bool alternating_extreme_check(const std::vector<int>& x) {
  int prev = 0;
  bool any = false;
  for (int v : x) {
    if (v < -1 || v > 1) return false;
    if (v == 0) continue;
    if (!any && v != 1) return false;
    if (any && v == prev) return false;
    prev = v;
    any = true;
  }
  return any;
}

/// All vectors of X_n (every nonempty support carries exactly one member).
inline std::vector<std::vector<int>> enumerate_alternating_vectors(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> v(n, 0);
    int sign = 1;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) {
        v[j] = sign;
        sign = -sign;
      }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace srm
