#pragma once

// Exact rational dense (and sparse) linear algebra.
//
// Every homology dimension in the engine reduces to ranks of matrices
// over Q, so nothing in here ever touches floating point. Entries are
// GMP rationals and are kept canonical (mpq_canonicalize) at all times.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace orbhc {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "3", "-2/4" or "  7 / 3 " into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Floor-free reduction into [0, 1).
Rational mod_one(const Rational& q);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  // Row-major literal, e.g. {{1, 1}, {1, 1}}.
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols,
                                     std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;

  RationalMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  Rational trace() const;

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix operator*(const Rational& s) const;
  RationalMatrix& operator+=(const RationalMatrix& rhs);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Sub-matrix with the given column indices (all rows kept).
  RationalMatrix select_columns(std::span<const std::size_t> cols) const;

  // Block stacking helpers.
  static RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
  static RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form with the first non-zero entry in column order
// as pivot. pivots[i] is the pivot column of row i.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

// Basis of the null space, one vector per free column, in the order of
// the free columns. Each vector has a 1 in its free coordinate.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

// dim ker(d_out) - rank(d_in) for a complex  . --d_in--> V --d_out--> .
// Throws CompositionNotZero unless d_out * d_in == 0.
std::size_t homology_dim(const RationalMatrix& d_in, const RationalMatrix& d_out);

// Trace of (1/|G|) sum_g g, i.e. the dimension of the fixed subspace.
// Throws NonIntegralTrace if the trace is not a non-negative integer.
std::size_t invariant_dimension(std::span<const RationalMatrix> representation);

// (1/|G|) sum_g g.
RationalMatrix averaging_projector(std::span<const RationalMatrix> representation);

// Inverse of a square matrix; throws InvalidArgument if singular.
RationalMatrix inverse(const RationalMatrix& m);

// Column basis of the image, extracted from pivot columns of m.
RationalMatrix column_space(const RationalMatrix& m);

// Solves basis * X = target for X where basis has full column rank and
// the columns of target lie in its span. Throws InvalidArgument otherwise.
RationalMatrix solve_in_span(const RationalMatrix& basis, const RationalMatrix& target);

// k-th exterior power of a square matrix in the lexicographic basis of
// k-subsets; entries are k x k minors.
RationalMatrix exterior_power(const RationalMatrix& m, std::size_t k);

// ---------------------------------------------------------------------------
// Sparse column storage. Used for the large bar complexes of
// finite-dimensional algebras, where a dense matrix would not fit.

struct SparseEntry {
  std::uint32_t index;
  Rational value;
};
using SparseVector = std::vector<SparseEntry>;  // sorted by index

class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  // Accumulates value into (r, c); the column is kept sorted on finalize().
  void add(std::size_t r, std::size_t c, const Rational& value);
  void finalize();

  const SparseVector& column(std::size_t c) const { return columns_[c]; }

  RationalMatrix to_dense() const;
  static SparseMatrix from_dense(const RationalMatrix& m);

  // this * rhs, both sparse.
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  bool is_zero() const;

 private:
  std::size_t rows_;
  std::vector<SparseVector> columns_;
};

// Incremental echelon basis of a subspace of Q^dim. Vectors are reduced
// at their leading index only, which is all rank computations need.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t dim) : pivot_of_(dim) {}

  // Returns true iff v was independent of the vectors inserted so far.
  bool insert(SparseVector v);
  std::size_t rank() const { return rank_; }

 private:
  std::vector<std::optional<SparseVector>> pivot_of_;
  std::size_t rank_ = 0;
};

// Rank of a sparse matrix by column insertion. If stop_at is given the
// scan ends once the rank reaches it; callers pass a proven upper bound.
std::size_t sparse_rank(const SparseMatrix& m,
                        std::optional<std::size_t> stop_at = std::nullopt);

}  // namespace orbhc
