#include "hindex/differentials.hpp"

#include <algorithm>
#include <numeric>

namespace hindex {

void VarietyGerm::validate() const {
  if (!ring) throw PreconditionError("germ without a ring");
  const auto n = static_cast<int>(ring->size());
  if (dimension < 0 || dimension > n) throw PreconditionError("declared dimension out of range");
  if (icis && static_cast<int>(equations.size()) != n - dimension) {
    throw PreconditionError("a complete intersection of dimension " + std::to_string(dimension) + " in C^" +
                            std::to_string(n) + " needs " + std::to_string(n - dimension) + " equations");
  }
  for (const auto& f : equations)
    if (!same_ring(f.ring(), ring) && !f.is_zero()) throw ContextMismatch("equation outside the germ's ring");
  if (weights) {
    if (weights->size() != ring->size()) throw PreconditionError("weight vector length does not match the ring");
    for (int w : *weights)
      if (w <= 0) throw PreconditionError("weights must be positive");
    for (const auto& f : equations)
      if (!f.is_homogeneous(*weights)) {
        throw PreconditionError("equation " + f.to_string() + " is not homogeneous for the declared weights");
      }
  }
}

bool OneForm::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::string OneForm::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    if (coefficients[j].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coefficients[j].to_string() + ")*d" + coefficients[j].ring()->name(j);
  }
  return s.empty() ? "0" : s;
}

OneForm exterior_derivative(const Polynomial& f) {
  OneForm w;
  for (std::size_t j = 0; j < f.nvars(); ++j) w.coefficients.push_back(partial_derivative(f, j));
  return w;
}

std::vector<IndexSet> index_subsets(std::size_t n, std::size_t p) {
  std::vector<IndexSet> out;
  if (p > n) return out;
  IndexSet cur(p);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = p;
    while (i > 0 && cur[i - 1] == n - p + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t k = i; k < p; ++k) cur[k] = cur[k - 1] + 1;
  }
  return out;
}

std::optional<std::pair<IndexSet, int>> wedge_insert(std::size_t j, const IndexSet& J) {
  if (std::find(J.begin(), J.end(), j) != J.end()) return std::nullopt;
  auto pos = static_cast<std::size_t>(std::lower_bound(J.begin(), J.end(), j) - J.begin());
  IndexSet out = J;
  out.insert(out.begin() + static_cast<long>(pos), j);
  return std::make_pair(std::move(out), pos % 2 == 0 ? 1 : -1);
}

namespace {

std::size_t subset_index(const std::vector<IndexSet>& list, const IndexSet& J) {
  auto it = std::lower_bound(list.begin(), list.end(), J);
  return static_cast<std::size_t>(it - list.begin());
}

}  // namespace

std::vector<int> differential_degrees(const std::vector<int>& weights) {
  if (weights.empty()) return {};
  int lo = *std::min_element(weights.begin(), weights.end());
  std::vector<int> d;
  for (int w : weights) d.push_back(w - lo);
  return d;
}

std::vector<int> DifferentialPresentation::generator_degrees(const std::vector<int>& weights) const {
  auto dd = differential_degrees(weights);
  std::vector<int> out;
  for (const auto& J : basis) {
    int s = 0;
    for (auto j : J) s += dd[j];
    out.push_back(s);
  }
  return out;
}

SubmodulePresentation DifferentialPresentation::submodule(const RingPtr& ring, const ModuleOrder& order) const {
  SubmodulePresentation s(ring, rank(), order);
  for (const auto& r : relations) s.add(r);
  return s;
}

DifferentialPresentation kaehler_presentation(const VarietyGerm& V, std::size_t p) {
  const std::size_t n = V.ambient_dim();
  if (p > n) throw PreconditionError("exterior degree exceeds the ambient dimension");
  DifferentialPresentation out;
  out.p = p;
  out.basis = index_subsets(n, p);
  const std::size_t rank = out.basis.size();
  const Polynomial zero(V.ring);

  for (const auto& f : V.equations) {
    for (std::size_t k = 0; k < rank; ++k) {
      FreeElement e(rank, zero);
      e[k] = f;
      out.relations.push_back(std::move(e));
    }
  }
  if (p >= 1) {
    const auto lower = index_subsets(n, p - 1);
    for (const auto& f : V.equations) {
      std::vector<Polynomial> grad;
      for (std::size_t j = 0; j < n; ++j) grad.push_back(partial_derivative(f, j));
      for (const auto& K : lower) {
        FreeElement e(rank, zero);
        for (std::size_t j = 0; j < n; ++j) {
          auto ins = wedge_insert(j, K);
          if (!ins || grad[j].is_zero()) continue;
          auto& slot = e[subset_index(out.basis, ins->first)];
          slot = ins->second > 0 ? slot + grad[j] : slot - grad[j];
        }
        out.relations.push_back(std::move(e));
      }
    }
  }
  return out;
}

std::vector<std::vector<Polynomial>> wedge_matrix(const OneForm& omega, std::size_t p) {
  const std::size_t n = omega.size();
  if (p >= n) throw PreconditionError("wedge matrix needs p < N");
  const RingPtr& ring = omega.coefficients.front().ring();
  const auto cols = index_subsets(n, p);
  const auto rows = index_subsets(n, p + 1);
  std::vector<std::vector<Polynomial>> m(rows.size(), std::vector<Polynomial>(cols.size(), Polynomial(ring)));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t j = 0; j < n; ++j) {
      auto ins = wedge_insert(j, cols[c]);
      if (!ins) continue;
      auto& slot = m[subset_index(rows, ins->first)][c];
      slot = ins->second > 0 ? slot + omega.coefficients[j] : slot - omega.coefficients[j];
    }
  }
  return m;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t k = m.size();
  if (k == 0) throw PreconditionError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != k) throw PreconditionError("determinant of a non-square matrix");
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(m[0][0].ring());
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) inversions += perm[a] > perm[b];
    Polynomial term(det.ring(), Rational(inversions % 2 == 0 ? 1 : -1));
    for (std::size_t r = 0; r < k && !term.is_zero(); ++r) term = term * m[r][perm[r]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<Polynomial> minors_ideal(const VarietyGerm& V, const OneForm& omega) {
  if (!V.icis) throw PreconditionError("the minors formula needs a germ declared as a complete intersection");
  const std::size_t n = V.ambient_dim();
  if (omega.size() != n) throw PreconditionError("form has the wrong number of coefficients");
  const std::size_t k = V.equations.size();

  std::vector<std::vector<Polynomial>> rows;
  for (const auto& f : V.equations) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(partial_derivative(f, j));
    rows.push_back(std::move(row));
  }
  rows.push_back(omega.coefficients);

  std::vector<Polynomial> out = V.equations;
  for (const auto& cols : index_subsets(n, k + 1)) {
    std::vector<std::vector<Polynomial>> sub;
    for (const auto& row : rows) {
      std::vector<Polynomial> r;
      for (auto c : cols) r.push_back(row[c]);
      sub.push_back(std::move(r));
    }
    Polynomial d = determinant(sub);
    if (!d.is_zero()) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace hindex
