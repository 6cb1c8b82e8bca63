#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srm/matrix.hpp"

namespace srm {

enum class ViolationKind { ColumnPrefix, RowPrefix };

/// Earliest prefix constraint broken by a candidate matrix.
/// Positions are stored 0-based; to_string reports them 1-based.
struct SrmViolation {
  ViolationKind kind;
  int row;
  int col;
  int value;

  std::string to_string() const {
    if (kind == ViolationKind::ColumnPrefix)
      return "column " + std::to_string(col + 1) + " prefix sum " + std::to_string(value) +
             " at (" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
    return "row " + std::to_string(row + 1) + " prefix sum " + std::to_string(value) + " at (" +
           std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
  }
};

struct ValidationResult;
ValidationResult validate_srm(const SignMatrix& a);

/// A SignMatrix certified to satisfy the sign-restriction prefix conditions:
/// every column prefix sum is 0 or 1 and every row prefix sum is nonnegative.
/// Instances can only be produced through validation.
class Srm {
 public:
  const SignMatrix& matrix() const { return mat_; }
  int rows() const { return mat_.rows(); }
  int cols() const { return mat_.cols(); }
  int operator()(int i, int j) const { return mat_(i, j); }

  bool is_plus() const {
    for (int i = 0; i < rows(); ++i)
      for (int j = 0; j < cols(); ++j)
        if (mat_(i, j) < 0) return false;
    return true;
  }

  friend bool operator==(const Srm&, const Srm&) = default;
  friend auto operator<=>(const Srm&, const Srm&) = default;

 private:
  explicit Srm(SignMatrix m) : mat_(std::move(m)) {}
  friend ValidationResult validate_srm(const SignMatrix&);

  SignMatrix mat_;
};

struct ValidationResult {
  std::optional<Srm> srm;
  std::optional<SrmViolation> violation;
  bool ok() const { return srm.has_value(); }
};

/// Scans cells in row-major order; at a cell the column prefix is checked
/// before the row prefix, so the reported violation is deterministic.
inline ValidationResult validate_srm(const SignMatrix& a) {
  std::vector<int> col_prefix(a.cols(), 0);
  std::vector<int> row_prefix(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      col_prefix[j] += a(i, j);
      row_prefix[i] += a(i, j);
      if (col_prefix[j] < 0 || col_prefix[j] > 1)
        return {std::nullopt, SrmViolation{ViolationKind::ColumnPrefix, i, j, col_prefix[j]}};
      if (row_prefix[i] < 0)
        return {std::nullopt, SrmViolation{ViolationKind::RowPrefix, i, j, row_prefix[i]}};
    }
  return {Srm(a), std::nullopt};
}

/// Validating constructor; throws when the matrix is not sign-restricted.
inline Srm require_srm(const SignMatrix& a) {
  ValidationResult r = validate_srm(a);
  if (!r.ok()) throw std::invalid_argument("not an SRM: " + r.violation->to_string());
  return *r.srm;
}

inline SumMatrix sum_matrix(const Srm& a) { return sum_matrix(a.matrix()); }
inline MarginPair margins(const Srm& a) { return margins(a.matrix()); }

/// R and S are realizable by an SRM iff S is a (0,1)-vector, R is nonnegative
/// and the two sums agree.
inline bool realizable_margins(const MarginPair& p) {
  long long rs = 0, cs = 0;
  for (int r : p.row_sums) {
    if (r < 0) return false;
    rs += r;
  }
  for (int s : p.col_sums) {
    if (s != 0 && s != 1) return false;
    cs += s;
  }
  return rs == cs;
}

/// The unique (0,1)-matrix of the class S(R,S): ignoring zero columns, row 1
/// takes the first r_1 ones, row 2 the next r_2, and so on.
inline Srm canonical_staircase(const MarginPair& p) {
  if (!realizable_margins(p)) throw std::invalid_argument("canonical_staircase: unrealizable margins");
  const int m = static_cast<int>(p.row_sums.size());
  const int n = static_cast<int>(p.col_sums.size());
  std::vector<int> live_cols;
  for (int j = 0; j < n; ++j)
    if (p.col_sums[j] == 1) live_cols.push_back(j);
  SignMatrix a(m, n);
  std::size_t next = 0;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < p.row_sums[i]; ++k) a.set(i, live_cols[next++], 1);
  return require_srm(a);
}

namespace detail {
inline int ceil_half(int a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }
}  // namespace detail

/// Maximum number of nonzeros over all m x n SRMs.
///
/// For n >= ceil((m+1)/2) this is the closed formula
///   m even: mn - m^2/4 - ceil((n - m/2 - 1)/2)
///   m odd:  mn - (m^2-1)/4 - ceil((n - (m+1)/2)/2)
/// Shorter matrices truncate the ramp construction, whose column capacities
/// 1, 3, 5, ... sum to n^2; the closed formula undercounts there (already at
/// m=5, n=1 it gives 0 while a single +1 is attainable).  A single row has no
/// room for a -1 at all, so zeta(1,n) = n.
inline int max_nonzeros(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("max_nonzeros: dimensions must be >= 1");
  if (m == 1) return n;
  const int cstar = (m + 2) / 2;  // ceil((m+1)/2)
  if (n < cstar) return n * n;
  if (m % 2 == 0) return m * n - (m * m) / 4 - detail::ceil_half(n - m / 2 - 1);
  return m * n - (m * m - 1) / 4 - detail::ceil_half(n - (m + 1) / 2);
}

/// An SRM attaining max_nonzeros(m,n): column k < ceil((m+1)/2) carries 2k-1
/// alternating nonzeros centered on the diagonal band, later columns alternate
/// between m and m-1 nonzeros.
inline Srm extremal_srm(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("extremal_srm: dimensions must be >= 1");
  SignMatrix a(m, n);
  if (m == 1) {
    for (int j = 0; j < n; ++j) a.set(0, j, 1);
    return require_srm(a);
  }
  const int cstar = (m + 2) / 2;  // 1-based column where full columns start
  for (int k = 1; k <= n; ++k) {
    int top, count;
    if (k < cstar) {
      top = cstar - k;  // 0-based
      count = 2 * k - 1;
    } else if ((k - cstar) % 2 == 0) {
      top = 0;
      count = m;
    } else {
      top = 1;
      count = m - 1;
    }
    for (int t = 0; t < count; ++t) a.set(top + t, k - 1, t % 2 == 0 ? 1 : -1);
  }
  return require_srm(a);
}

/// Weakly increasing sequence X_1 <= ... <= X_m of subsets of {1..n},
/// stored as bitsets (bit j-1 for ground element j).
struct Multichain {
  int ground_size = 0;
  std::vector<std::uint64_t> sets;

  static constexpr int kMaxGround = 63;

  Multichain(int n, std::vector<std::uint64_t> chain) : ground_size(n), sets(std::move(chain)) {
    if (n < 1 || n > kMaxGround) throw std::invalid_argument("Multichain: ground size out of range");
    const std::uint64_t full = (n == 63) ? ~0ull >> 1 : (1ull << n) - 1;
    std::uint64_t prev = 0;
    for (std::uint64_t x : sets) {
      if ((x & ~full) != 0) throw std::invalid_argument("Multichain: element outside ground set");
      if ((prev & ~x) != 0) throw std::invalid_argument("Multichain: sequence not nested");
      prev = x;
    }
  }

  int length() const { return static_cast<int>(sets.size()); }

  friend bool operator==(const Multichain&, const Multichain&) = default;
};

/// X_i collects the columns whose prefix sum down to row i equals 1.
inline Multichain multichain_of(const Srm& a) {
  if (!a.is_plus()) throw std::invalid_argument("multichain_of: matrix contains a -1");
  if (a.cols() > Multichain::kMaxGround)
    throw std::invalid_argument("multichain_of: too many columns for bitset representation");
  std::vector<std::uint64_t> sets(a.rows(), 0);
  std::uint64_t cur = 0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) == 1) cur |= 1ull << j;
    sets[i] = cur;
  }
  return Multichain(a.cols(), std::move(sets));
}

/// Row i is the indicator of X_i \ X_{i-1}; inverse of multichain_of.
inline Srm srm_of_multichain(const Multichain& c) {
  if (c.length() < 1) throw std::invalid_argument("srm_of_multichain: empty chain");
  SignMatrix a(c.length(), c.ground_size);
  std::uint64_t prev = 0;
  for (int i = 0; i < c.length(); ++i) {
    std::uint64_t fresh = c.sets[i] & ~prev;
    for (int j = 0; j < c.ground_size; ++j)
      if (fresh >> j & 1) a.set(i, j, 1);
    prev = c.sets[i];
  }
  return require_srm(a);
}

}  // namespace srm
