#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace srm {

/// Dense m x n matrix with entries restricted to {-1, 0, +1}.
class SignMatrix {
 public:
  SignMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check_dims(rows, cols);
    entries_.assign(static_cast<std::size_t>(rows) * cols, 0);
  }

  SignMatrix(int rows, int cols, std::vector<std::int8_t> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_dims(rows, cols);
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
      throw std::invalid_argument("SignMatrix: entry count mismatch");
    for (std::int8_t v : entries_) check_value(v);
  }

  static SignMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    if (rows.size() == 0) throw std::invalid_argument("SignMatrix: empty row list");
    const int m = static_cast<int>(rows.size());
    const int n = static_cast<int>(rows.begin()->size());
    SignMatrix a(m, n);
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("SignMatrix: ragged rows");
      int j = 0;
      for (int v : row) a.set(i, j++, v);
      ++i;
    }
    return a;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int operator()(int i, int j) const { return entries_[idx(i, j)]; }

  void set(int i, int j, int v) {
    check_value(v);
    entries_[idx(i, j)] = static_cast<std::int8_t>(v);
  }

  /// Adds delta to entry (i,j); throws if the result leaves {-1,0,1}.
  void add(int i, int j, int delta) { set(i, j, (*this)(i, j) + delta); }

  const std::vector<std::int8_t>& raw() const { return entries_; }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;
  friend auto operator<=>(const SignMatrix&, const SignMatrix&) = default;

 private:
  static void check_dims(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("SignMatrix: dimensions must be >= 1");
  }
  static void check_value(int v) {
    if (v < -1 || v > 1)
      throw std::invalid_argument("SignMatrix: entry " + std::to_string(v) + " outside {-1,0,1}");
  }
  std::size_t idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("SignMatrix: index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_;
  int cols_;
  std::vector<std::int8_t> entries_;
};

/// Dense integer matrix; carries leading-submatrix sums and other unrestricted values.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("IntMatrix: dimensions must be >= 1");
    entries_.assign(static_cast<std::size_t>(rows) * cols, 0);
  }

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const int m = static_cast<int>(rows.size());
    if (m == 0) throw std::invalid_argument("IntMatrix: empty row list");
    const int n = static_cast<int>(rows.begin()->size());
    IntMatrix a(m, n);
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n) throw std::invalid_argument("IntMatrix: ragged rows");
      int j = 0;
      for (int v : row) a.set(i, j++, v);
      ++i;
    }
    return a;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int operator()(int i, int j) const { return entries_[idx(i, j)]; }
  void set(int i, int j, int v) { entries_[idx(i, j)] = v; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("IntMatrix: index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_;
  int cols_;
  std::vector<int> entries_;
};

/// The matrix of leading-submatrix entry sums (corner sums).
using SumMatrix = IntMatrix;

/// Row sum vector R and column sum vector S of a matrix class.
struct MarginPair {
  std::vector<int> row_sums;
  std::vector<int> col_sums;

  friend bool operator==(const MarginPair&, const MarginPair&) = default;
};

inline MarginPair margins(const SignMatrix& a) {
  MarginPair p{std::vector<int>(a.rows(), 0), std::vector<int>(a.cols(), 0)};
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      p.row_sums[i] += a(i, j);
      p.col_sums[j] += a(i, j);
    }
  return p;
}

/// sigma_{ij} = sum of entries in the leading (i+1) x (j+1) submatrix.
inline SumMatrix sum_matrix(const SignMatrix& a) {
  SumMatrix s(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      int v = a(i, j);
      if (i > 0) v += s(i - 1, j);
      if (j > 0) v += s(i, j - 1);
      if (i > 0 && j > 0) v -= s(i - 1, j - 1);
      s.set(i, j, v);
    }
  return s;
}

inline SumMatrix sum_matrix(const IntMatrix& a) {
  SumMatrix s(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      int v = a(i, j);
      if (i > 0) v += s(i - 1, j);
      if (j > 0) v += s(i, j - 1);
      if (i > 0 && j > 0) v -= s(i - 1, j - 1);
      s.set(i, j, v);
    }
  return s;
}

/// Finite differences a_{ij} = s_{ij} - s_{i-1,j} - s_{i,j-1} + s_{i-1,j-1};
/// exact inverse of sum_matrix on all integer matrices.
inline IntMatrix inverse_sum_matrix(const SumMatrix& s) {
  IntMatrix a(s.rows(), s.cols());
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) {
      int v = s(i, j);
      if (i > 0) v -= s(i - 1, j);
      if (j > 0) v -= s(i, j - 1);
      if (i > 0 && j > 0) v += s(i - 1, j - 1);
      a.set(i, j, v);
    }
  return a;
}

/// Narrows to a sign matrix when every entry lies in {-1,0,1}.
inline std::optional<SignMatrix> to_sign_matrix(const IntMatrix& a) {
  SignMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const int v = a(i, j);
      if (v < -1 || v > 1) return std::nullopt;
      out.set(i, j, v);
    }
  return out;
}

inline IntMatrix to_int_matrix(const SignMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  return out;
}

inline int nonzero_count(const SignMatrix& a) {
  int c = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c += a(i, j) != 0;
  return c;
}

}  // namespace srm
