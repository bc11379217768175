#include "hindex/linalg.hpp"

#include "hindex/errors.hpp"

namespace hindex {

namespace {

// a - c * b
SparseRow axpy(const SparseRow& a, const Rational& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -c * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - c * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow RowEchelon::reduce(SparseRow row) const {
  std::size_t pos = 0;
  while (pos < row.size()) {
    auto it = pivots_.find(row[pos].first);
    if (it == pivots_.end()) {
      ++pos;
      continue;
    }
    const std::size_t col = row[pos].first;
    Rational c = row[pos].second;
    row = axpy(row, c, it->second);
    // Entries before col are untouched because pivot rows vanish there.
    pos = 0;
    while (pos < row.size() && row[pos].first <= col) ++pos;
  }
  return row;
}

bool RowEchelon::insert(SparseRow row) {
  for (const auto& [col, v] : row)
    if (col >= ncols_) throw ContextMismatch("row entry outside the matrix");
  row = reduce(std::move(row));
  if (row.empty()) return false;
  Rational inv = Rational(1) / row.front().second;
  for (auto& [col, v] : row) v *= inv;
  const std::size_t col = row.front().first;
  pivots_.emplace(col, std::move(row));
  return true;
}

bool RowEchelon::insert_dense(const std::vector<Rational>& row) {
  SparseRow s;
  for (std::size_t k = 0; k < row.size(); ++k)
    if (row[k] != 0) s.emplace_back(k, row[k]);
  return insert(std::move(s));
}

}  // namespace hindex
