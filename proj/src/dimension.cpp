#include "hindex/dimension.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hindex {

namespace {

std::vector<std::vector<Monomial>> leading_by_component(const SubmodulePresentation& basis) {
  std::vector<std::vector<Monomial>> per(basis.rank());
  for (const auto& lt : leading_module(basis)) per[lt.comp].push_back(lt.mon);
  return per;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

bool has_pure_powers(const std::vector<Monomial>& gens, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.is_one()) return true;
  for (std::size_t j = 0; j < nvars; ++j) {
    bool found = false;
    for (const auto& g : gens) {
      if (g[j] == 0) continue;
      bool pure = true;
      for (std::size_t i = 0; i < nvars; ++i)
        if (i != j && g[i] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Visits the monomials outside the monomial ideal generated by `gens`
// (optionally of degree < bound). The visitor returns false to stop.
void visit_standard(const std::vector<Monomial>& gens, std::size_t nvars, std::optional<int> bound,
                    const std::function<bool(const Monomial&)>& visit) {
  Monomial m(nvars);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == nvars) {
      if (!visit(m)) stop = true;
      return;
    }
    for (int e = 0; !stop; ++e) {
      m.set(j, e);
      if (divisible_by_any(m, gens)) break;
      if (bound && m.degree() >= *bound) break;
      rec(j + 1);
    }
    m.set(j, 0);
  };
  if (divisible_by_any(m, gens)) return;
  if (bound && *bound <= 0) return;
  rec(0);
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (!divisible_by_any(g, out)) out.push_back(g);
  return out;
}

std::size_t support_size(const Monomial& m) {
  std::size_t s = 0;
  for (std::size_t j = 0; j < m.size(); ++j) s += m[j] != 0;
  return s;
}

}  // namespace

std::optional<std::size_t> quotient_dimension(const SubmodulePresentation& basis) {
  if (!basis.is_standard_basis()) throw PreconditionError("quotient dimension needs a completed standard basis");
  const std::size_t n = basis.ring()->size();
  std::size_t total = 0;
  for (const auto& gens : leading_by_component(basis)) {
    if (!basis.degree_bound() && !has_pure_powers(gens, n)) return std::nullopt;
    visit_standard(gens, n, basis.degree_bound(), [&](const Monomial&) {
      ++total;
      return true;
    });
  }
  return total;
}

std::vector<LeadingTerm> standard_monomials(const SubmodulePresentation& basis, std::size_t cap) {
  if (!basis.is_standard_basis()) throw PreconditionError("standard monomials need a completed standard basis");
  const std::size_t n = basis.ring()->size();
  std::vector<LeadingTerm> out;
  auto per = leading_by_component(basis);
  for (std::size_t c = 0; c < per.size(); ++c) {
    if (!basis.degree_bound() && !has_pure_powers(per[c], n)) {
      throw ResourceLimitError("quotient is infinite dimensional");
    }
    bool overflow = false;
    visit_standard(per[c], n, basis.degree_bound(), [&](const Monomial& m) {
      if (out.size() >= cap) {
        overflow = true;
        return false;
      }
      out.push_back({m, c});
      return true;
    });
    if (overflow) throw ResourceLimitError("more than " + std::to_string(cap) + " standard monomials");
  }
  return out;
}

UPoly hilbert_numerator(std::vector<Monomial> gens, const std::vector<int>& weights) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return UPoly(Rational(1));
  if (gens.front().is_one()) return UPoly();
  const std::size_t n = gens.front().size();
  auto wdeg = [&](const Monomial& m) { return static_cast<std::size_t>(m.weighted_degree(weights)); };

  // Pairwise coprime generators form a regular sequence.
  bool coprime = true;
  for (std::size_t a = 0; a < gens.size() && coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
      if (!gens[a].coprime(gens[b])) coprime = false;
  if (coprime) {
    UPoly num(Rational(1));
    for (const auto& g : gens) num = num * UPoly::one_minus_power(wdeg(g));
    return num;
  }

  // Pivot on a power of the variable occurring most often in generators with
  // at least two variables.
  std::vector<std::size_t> count(n, 0);
  for (const auto& g : gens) {
    if (support_size(g) < 2) continue;
    for (std::size_t j = 0; j < n; ++j) count[j] += g[j] != 0;
  }
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  int e = 0;
  for (const auto& g : gens) {
    if (support_size(g) < 2 || g[var] == 0) continue;
    e = e == 0 ? g[var] : std::min(e, g[var]);
  }
  Monomial pivot = Monomial::variable(n, var, e);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / gcd(g, pivot));

  return hilbert_numerator(std::move(with_pivot), weights) +
         hilbert_numerator(std::move(colon), weights).shifted(wdeg(pivot));
}

PoincareSeriesResult poincare_series(const GradedPresentation& M, const std::vector<int>& weights,
                                     std::size_t prefix_length) {
  const auto& rel = M.relations;
  const std::size_t n = rel.ring()->size();
  if (weights.size() != n) throw PreconditionError("weight vector length does not match the ring");
  for (int w : weights)
    if (w <= 0) throw PreconditionError("grading weights must be positive");
  if (M.generator_degrees.size() != M.rank || rel.rank() != M.rank) {
    throw PreconditionError("graded presentation has inconsistent rank");
  }
  for (int d : M.generator_degrees)
    if (d < 0) throw PreconditionError("generator degrees must be nonnegative");

  ModuleOrder order(MonomialOrder::weighted(weights), M.generator_degrees);
  SubmodulePresentation gens(rel.ring(), M.rank, order);
  std::size_t index = 0;
  for (const auto& e : rel.generators()) {
    std::optional<int> deg;
    for (std::size_t c = 0; c < e.size(); ++c) {
      for (const auto& [m, coef] : e[c].terms()) {
        int d = m.weighted_degree(weights) + M.generator_degrees[c];
        if (deg && *deg != d) {
          throw PreconditionError("relation " + std::to_string(index) + " is not homogeneous (component " +
                                  std::to_string(c) + ": " + e[c].to_string() + ")");
        }
        deg = d;
      }
    }
    gens.add(e);
    ++index;
  }

  SubmodulePresentation basis = standard_basis(gens);
  auto per = leading_by_component(basis);
  UPoly num;
  for (std::size_t c = 0; c < M.rank; ++c) {
    num += hilbert_numerator(per[c], weights).shifted(static_cast<std::size_t>(M.generator_degrees[c]));
  }
  UPoly den(Rational(1));
  for (int w : weights) den = den * UPoly::one_minus_power(static_cast<std::size_t>(w));

  PoincareSeriesResult out{RationalFunction(num, den), {}};
  for (const auto& c : out.series.expand(prefix_length)) {
    if (!is_integer(c) || c < 0) throw Error("Hilbert series coefficient is not a natural number");
    out.prefix.push_back(c.get_num());
  }
  return out;
}

RationalFunction alternating_sum(const std::vector<PoincareSeriesResult>& series, const std::vector<int>& twist) {
  if (twist.size() != series.size()) throw PreconditionError("one twist per series is required");
  RationalFunction sum;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (twist[i] < 0) throw PreconditionError("twists must be nonnegative");
    RationalFunction term = series[i].series.shifted(static_cast<std::size_t>(twist[i]));
    sum = (i % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

Integer alternating_euler(const std::vector<PoincareSeriesResult>& series, const std::vector<int>& twist) {
  RationalFunction sum = alternating_sum(series, twist);
  if (!sum.is_polynomial()) {
    throw PreconditionError("alternating sum " + sum.to_string() +
                            " is not a polynomial; the homology is not finite dimensional");
  }
  Rational v = ratfun_eval(sum, Rational(1));
  return v.get_num();
}

}  // namespace hindex
