// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ractor::zsmith {

using Integer = mpz_class;

class DenseIntMatrix {
 public:
  DenseIntMatrix() = default;
  DenseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static DenseIntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const DenseIntMatrix&, const DenseIntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

DenseIntMatrix operator*(const DenseIntMatrix& a, const DenseIntMatrix& b);
/// Determinant by fraction-free elimination; matrix must be square.
Integer determinant(DenseIntMatrix a);

/// Integer matrix stored by rows, each row sorted by column with no zeros.
class SparseIntMatrix {
 public:
  using Row = std::vector<std::pair<std::uint32_t, Integer>>;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
  static SparseIntMatrix from_dense(const std::vector<std::vector<long>>& rows, std::size_t cols);
  static SparseIntMatrix from_dense(const DenseIntMatrix& m);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  /// Adds v to entry (r, c).
  void add(std::size_t r, std::size_t c, const Integer& v);
  Integer at(std::size_t r, std::size_t c) const;
  const Row& row(std::size_t r) const { return rows_.at(r); }
  /// Replaces row r; duplicate columns are summed and zeros dropped.
  void set_row(std::size_t r, Row entries);
  void append_row(Row entries);

  SparseIntMatrix transpose() const;
  DenseIntMatrix to_dense() const;

  /// Text dump: "rows cols nnz" then one "r c v" line per entry.
  void write_dump(std::ostream& out) const;
  static SparseIntMatrix read_dump(std::istream& in);

 private:
  void normalize(Row& entries) const;

  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);

struct SnfOptions {
  /// Also return U, V with U * A * V = D. Uses the dense path on all of A.
  bool track_transforms = false;
  /// Worker threads for row reductions in the dense phase; never changes results.
  unsigned threads = 1;
};

struct SnfResult {
  /// Positive invariant factors d_1 | d_2 | ... | d_r with r = rank(A).
  std::vector<Integer> diagonal;
  std::optional<DenseIntMatrix> left;
  std::optional<DenseIntMatrix> right;
  /// Size of the residual block handed to the dense phase.
  std::size_t core_rows = 0;
  std::size_t core_cols = 0;
};

SnfResult snf(const SparseIntMatrix& a, const SnfOptions& options = {});

/// rows x cols matrix with the given diagonal.
DenseIntMatrix diagonal_matrix(std::size_t rows, std::size_t cols, const std::vector<Integer>& diag);

/// Finitely generated abelian group Z^betti + sum Z/d_i.
struct TorsionProfile {
  std::size_t betti = 0;
  /// Factors > 1 with d_1 | d_2 | ...
  std::vector<Integer> invariant_factors;

  std::size_t two_rank() const;
  std::size_t log2_torsion_lower_bound() const { return two_rank(); }
  Integer torsion_order() const;
  /// Factors joined by sep, e.g. "2;2;4".
  std::string factors_string(char sep = ';') const;
  /// Human form such as "Z^4 + Z/2 + Z/4".
  std::string to_string() const;

  friend bool operator==(const TorsionProfile&, const TorsionProfile&) = default;
};

/// Cokernel of the row space of A inside Z^ambient_rank.
TorsionProfile torsion_profile(const SparseIntMatrix& a, std::size_t ambient_rank,
                               const SnfOptions& options = {});

std::size_t two_rank(const TorsionProfile& t);

}  // namespace ractor::zsmith
