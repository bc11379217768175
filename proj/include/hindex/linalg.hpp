#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hindex/rational.hpp"

namespace hindex {

// Sparse row: (column, nonzero value) pairs with increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Incremental row echelon form over Q. Rows are reduced against the pivots
// seen so far; a row that survives contributes a new pivot.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t ncols) : ncols_(ncols) {}

  // Returns true iff the row was independent of the rows inserted before.
  bool insert(SparseRow row);
  bool insert_dense(const std::vector<Rational>& row);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return ncols_; }

  // Reduces a row against the current pivots.
  SparseRow reduce(SparseRow row) const;

 private:
  std::size_t ncols_;
  std::map<std::size_t, SparseRow> pivots_;  // pivot column -> row with 1 there
};

}  // namespace hindex
