#pragma once

#include "svcoh/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace svcoh {

/// Sparse rational vector, entries sorted by column, no stored zeros.
class SparseVector {
 public:
  struct Entry {
    std::size_t col;
    Rational value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseVector() = default;
  explicit SparseVector(const std::map<std::size_t, Rational>& entries);

  /// Sets entry `col` (zero erases).
  void set(std::size_t col, const Rational& v);
  /// Adds `v` to entry `col`.
  void add(std::size_t col, const Rational& v);
  Rational get(std::size_t col) const;

  /// *this += scale * other
  void axpy(const Rational& scale, const SparseVector& other);
  void scale(const Rational& s);

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  /// Smallest column holding a nonzero; call only when !empty().
  std::size_t leading_col() const { return entries_.front().col; }
  /// Largest column + 1, or 0 when empty.
  std::size_t extent() const { return entries_.empty() ? 0 : entries_.back().col + 1; }

  const std::vector<Entry>& entries() const { return entries_; }

  /// Keeps only the columns accepted by `keep`.
  SparseVector filtered(const std::function<bool(std::size_t)>& keep) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

Rational dot(const SparseVector& a, const SparseVector& b);

class SparseMatrix {
 public:
  explicit SparseMatrix(std::size_t ncols = 0) : ncols_(ncols) {}
  SparseMatrix(std::vector<SparseVector> rows, std::size_t ncols);

  /// Throws std::out_of_range if the row touches a column >= ncols.
  void add_row(SparseVector row);

  std::size_t ncols() const { return ncols_; }
  std::size_t nrows() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }

  /// Matrix-vector product; entry i of the result is row i dotted with v.
  SparseVector apply(const SparseVector& v) const;

 private:
  std::vector<SparseVector> rows_;
  std::size_t ncols_ = 0;
};

struct Pivot {
  std::size_t row;
  std::size_t col;
  friend bool operator==(const Pivot&, const Pivot&) = default;
};

struct EliminationResult {
  std::size_t rank = 0;
  /// (row, column) in pivot order; row indices refer to the matrix after
  /// zero rows are dropped and duplicates removed.
  std::vector<Pivot> pivots;
  /// One vector per free column, with a 1 at that column.
  std::vector<SparseVector> nullspace_basis;
  /// Reduced row echelon rows, one per pivot, in pivot order.
  std::vector<SparseVector> reduced_rows;

  friend bool operator==(const EliminationResult&, const EliminationResult&) = default;
};

/// Gauss-Jordan elimination over Q. Columns are visited left to right and
/// the pivot for each is the lowest-index remaining row with a nonzero there.
EliminationResult eliminate(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

/// Rank of the span of `vectors`.
std::size_t span_rank(const std::vector<SparseVector>& vectors);

bool in_span(const SparseVector& v, const std::vector<SparseVector>& basis);

struct SubspaceNotContained : std::logic_error {
  using std::logic_error::logic_error;
};

/// dim span(space) - dim span(subspace). Throws SubspaceNotContained if some
/// subspace vector is outside span(space).
std::size_t quotient_dim(const std::vector<SparseVector>& space,
                         const std::vector<SparseVector>& subspace);

}  // namespace svcoh
