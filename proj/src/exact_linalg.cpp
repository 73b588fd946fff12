#include "svcoh/exact_linalg.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace svcoh {

SparseVector::SparseVector(const std::map<std::size_t, Rational>& entries) {
  entries_.reserve(entries.size());
  for (const auto& [c, v] : entries)
    if (v != 0) entries_.push_back({c, v});
}

namespace {

auto find_col(std::vector<SparseVector::Entry>& e, std::size_t col) {
  return std::lower_bound(e.begin(), e.end(), col,
                          [](const SparseVector::Entry& x, std::size_t c) { return x.col < c; });
}

}  // namespace

void SparseVector::set(std::size_t col, const Rational& v) {
  auto it = find_col(entries_, col);
  if (it != entries_.end() && it->col == col) {
    if (v == 0)
      entries_.erase(it);
    else
      it->value = v;
  } else if (v != 0) {
    entries_.insert(it, Entry{col, v});
  }
}

void SparseVector::add(std::size_t col, const Rational& v) {
  if (v == 0) return;
  auto it = find_col(entries_, col);
  if (it != entries_.end() && it->col == col) {
    it->value += v;
    if (it->value == 0) entries_.erase(it);
  } else {
    entries_.insert(it, Entry{col, v});
  }
}

Rational SparseVector::get(std::size_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
                             [](const Entry& x, std::size_t c) { return x.col < c; });
  if (it != entries_.end() && it->col == col) return it->value;
  return 0;
}

void SparseVector::axpy(const Rational& scale, const SparseVector& other) {
  if (scale == 0 || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->col < b->col)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->col < a->col) {
      merged.push_back({b->col, scale * b->value});
      ++b;
    } else {
      Rational v = a->value + scale * b->value;
      if (v != 0) merged.push_back({a->col, std::move(v)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& s) {
  if (s == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.value *= s;
}

SparseVector SparseVector::filtered(const std::function<bool(std::size_t)>& keep) const {
  SparseVector out;
  for (const auto& e : entries_)
    if (keep(e.col)) out.entries_.push_back(e);
  return out;
}

Rational dot(const SparseVector& a, const SparseVector& b) {
  Rational s = 0;
  auto x = a.entries().begin();
  auto y = b.entries().begin();
  while (x != a.entries().end() && y != b.entries().end()) {
    if (x->col < y->col)
      ++x;
    else if (y->col < x->col)
      ++y;
    else
      s += (x++)->value * (y++)->value;
  }
  return s;
}

SparseMatrix::SparseMatrix(std::vector<SparseVector> rows, std::size_t ncols) : ncols_(ncols) {
  rows_.reserve(rows.size());
  for (auto& r : rows) add_row(std::move(r));
}

void SparseMatrix::add_row(SparseVector row) {
  if (row.extent() > ncols_)
    throw std::out_of_range("row touches column " + std::to_string(row.extent() - 1) +
                            " but matrix has " + std::to_string(ncols_) + " columns");
  rows_.push_back(std::move(row));
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (std::size_t i = 0; i < rows_.size(); ++i) out.set(i, dot(rows_[i], v));
  return out;
}

namespace {

// Zero rows dropped, each row scaled to leading coefficient 1, exact
// duplicates removed (first occurrence kept).
std::vector<SparseVector> prepare_rows(const std::vector<SparseVector>& rows) {
  std::vector<SparseVector> out;
  std::set<std::vector<std::pair<std::size_t, std::string>>> seen;
  for (const auto& r : rows) {
    if (r.empty()) continue;
    SparseVector s = r;
    s.scale(1 / Rational(s.entries().front().value));
    std::vector<std::pair<std::size_t, std::string>> key;
    key.reserve(s.nnz());
    for (const auto& e : s.entries()) key.emplace_back(e.col, e.value.get_str());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

EliminationResult eliminate(const SparseMatrix& m) {
  std::vector<SparseVector> rows = prepare_rows(m.rows());
  const std::size_t nrows = rows.size();
  std::vector<bool> used(nrows, false);
  std::vector<std::size_t> pivot_rows;  // row index per pivot, in order
  EliminationResult res;

  // Invariant: after pivoting on column c, every row that is not a pivot row
  // has no entries at columns <= c. So the next pivot is the unused nonzero
  // row with the smallest (leading column, row index).
  for (;;) {
    std::size_t best = nrows;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (used[i] || rows[i].empty()) continue;
      if (best == nrows || rows[i].leading_col() < rows[best].leading_col()) best = i;
    }
    if (best == nrows) break;

    const std::size_t col = rows[best].leading_col();
    SparseVector& piv = rows[best];
    piv.scale(1 / Rational(piv.entries().front().value));
    used[best] = true;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == best || rows[i].empty()) continue;
      const Rational f = rows[i].get(col);
      if (f != 0) rows[i].axpy(-f, piv);
    }
    res.pivots.push_back({best, col});
    pivot_rows.push_back(best);
  }

  res.rank = res.pivots.size();
  for (std::size_t r : pivot_rows) res.reduced_rows.push_back(rows[r]);

  std::vector<bool> is_pivot_col(m.ncols(), false);
  for (const auto& p : res.pivots) is_pivot_col[p.col] = true;
  for (std::size_t free = 0; free < m.ncols(); ++free) {
    if (is_pivot_col[free]) continue;
    SparseVector v;
    v.set(free, 1);
    for (std::size_t k = 0; k < res.pivots.size(); ++k) {
      const Rational x = res.reduced_rows[k].get(free);
      if (x != 0) v.set(res.pivots[k].col, -x);
    }
    res.nullspace_basis.push_back(std::move(v));
  }
  return res;
}

std::size_t rank(const SparseMatrix& m) { return eliminate(m).rank; }

namespace {

std::size_t extent_of(const std::vector<SparseVector>& vs) {
  std::size_t n = 0;
  for (const auto& v : vs) n = std::max(n, v.extent());
  return n;
}

// Reduces v against an RREF row set; returns the residual.
SparseVector residual(SparseVector v, const EliminationResult& e) {
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    const Rational f = v.get(e.pivots[k].col);
    if (f != 0) v.axpy(-f, e.reduced_rows[k]);
  }
  return v;
}

}  // namespace

std::size_t span_rank(const std::vector<SparseVector>& vectors) {
  return eliminate(SparseMatrix(vectors, extent_of(vectors))).rank;
}

bool in_span(const SparseVector& v, const std::vector<SparseVector>& basis) {
  if (v.empty()) return true;
  const auto e = eliminate(SparseMatrix(basis, extent_of(basis)));
  return residual(v, e).empty();
}

std::size_t quotient_dim(const std::vector<SparseVector>& space,
                         const std::vector<SparseVector>& subspace) {
  const auto e = eliminate(SparseMatrix(space, extent_of(space)));
  for (std::size_t i = 0; i < subspace.size(); ++i)
    if (!residual(subspace[i], e).empty())
      throw SubspaceNotContained("subspace vector " + std::to_string(i) +
                                 " is not in the span of the space");
  return e.rank - span_rank(subspace);
}

}  // namespace svcoh
