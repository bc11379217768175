#include "hindex/stdbasis.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hindex {

namespace {

BasisObserver& observer() {
  static BasisObserver obs;
  return obs;
}

struct TermGreater {
  const ModuleOrder* order;
  bool operator()(const ModuleTerm& a, const ModuleTerm& b) const {
    return order->compare(a.mon, a.comp, b.mon, b.comp) > 0;
  }
};

// Working context of one computation.
struct Engine {
  const ModuleOrder& order;
  std::optional<int> bound;

  int cmp(const ModuleTerm& a, const ModuleTerm& b) const { return order.compare(a.mon, a.comp, b.mon, b.comp); }

  bool keep(const Monomial& m) const { return !bound || m.degree() < *bound; }

  // h - c * m * g, both sorted; the result stays sorted because module
  // orders are multiplicative.
  ModVec sub_multiple(const ModVec& h, const Rational& c, const Monomial& m, const ModVec& g) const {
    const auto& a = h.terms();
    const auto& b = g.terms();
    std::vector<ModuleTerm> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    ModuleTerm scaled;
    bool have_scaled = false;
    auto load = [&] {
      while (j < b.size()) {
        scaled.mon = b[j].mon * m;
        scaled.comp = b[j].comp;
        if (keep(scaled.mon)) {
          scaled.coef = -c * b[j].coef;
          have_scaled = true;
          return;
        }
        ++j;
      }
      have_scaled = false;
    };
    load();
    while (i < a.size() || have_scaled) {
      int s = !have_scaled ? 1 : (i >= a.size() ? -1 : cmp(a[i], scaled));
      if (s > 0) {
        out.push_back(a[i++]);
      } else if (s < 0) {
        out.push_back(scaled);
        ++j;
        load();
      } else {
        Rational sum = a[i].coef + scaled.coef;
        if (sum != 0) out.push_back({a[i].mon, a[i].comp, std::move(sum)});
        ++i;
        ++j;
        load();
      }
    }
    return ModVec::from_sorted(std::move(out));
  }

  ModVec truncate(const ModVec& v) const {
    if (!bound) return v;
    std::vector<ModuleTerm> out;
    for (const auto& t : v.terms())
      if (keep(t.mon)) out.push_back(t);
    return ModVec::from_sorted(std::move(out));
  }

  static ModVec monic(ModVec v) {
    if (v.is_zero() || v.lead().coef == 1) return v;
    Rational inv = Rational(1) / v.lead().coef;
    std::vector<ModuleTerm> t = v.terms();
    for (auto& x : t) x.coef *= inv;
    return ModVec::from_sorted(std::move(t));
  }

  int ecart(const ModVec& v) const {
    int top = order.degree(v.lead().mon, v.lead().comp);
    int lead = top;
    for (const auto& t : v.terms()) top = std::max(top, order.degree(t.mon, t.comp));
    return top - lead;
  }

  // One reduction step of the leading term of h by g.
  ModVec reduce_lead(const ModVec& h, const ModVec& g) const {
    const ModuleTerm& lh = h.lead();
    const ModuleTerm& lg = g.lead();
    return sub_multiple(h, lh.coef / lg.coef, lh.mon / lg.mon, g);
  }

  static bool divides(const ModuleTerm& d, const ModuleTerm& t) { return d.comp == t.comp && d.mon.divides(t.mon); }

  bool well_ordered() const { return !order.is_local() || bound.has_value(); }

  // Full reduction: no term of the result is divisible by a leading term.
  ModVec full_nf(ModVec h, const std::vector<ModVec>& basis, std::optional<std::size_t> skip = std::nullopt) const {
    h = truncate(h);
    std::vector<ModuleTerm> rest;
    while (!h.is_zero()) {
      const ModVec* red = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (skip && *skip == k) continue;
        if (divides(basis[k].lead(), h.lead())) {
          red = &basis[k];
          break;
        }
      }
      if (red) {
        h = reduce_lead(h, *red);
      } else {
        rest.push_back(h.lead());
        std::vector<ModuleTerm> tail(h.terms().begin() + 1, h.terms().end());
        h = ModVec::from_sorted(std::move(tail));
      }
    }
    return ModVec::from_sorted(std::move(rest));
  }

  // Mora's normal form: the reducer set grows by intermediate results whose
  // ecart is smaller than that of the chosen reducer.
  ModVec mora_nf(ModVec h, const std::vector<ModVec>& basis) const {
    std::deque<ModVec> extra;
    std::vector<const ModVec*> reducers;
    std::vector<int> ecarts;
    reducers.reserve(basis.size());
    for (const auto& g : basis) {
      reducers.push_back(&g);
      ecarts.push_back(ecart(g));
    }
    while (!h.is_zero()) {
      std::size_t best = reducers.size();
      for (std::size_t k = 0; k < reducers.size(); ++k) {
        if (!divides(reducers[k]->lead(), h.lead())) continue;
        if (best == reducers.size() || ecarts[k] < ecarts[best]) best = k;
      }
      if (best == reducers.size()) break;
      const ModVec* g = reducers[best];
      int eh = ecart(h);
      if (ecarts[best] > eh) {
        extra.push_back(h);
        reducers.push_back(&extra.back());
        ecarts.push_back(eh);
      }
      h = reduce_lead(h, *g);
    }
    return h;
  }

  ModVec nf(const ModVec& h, const std::vector<ModVec>& basis) const {
    return well_ordered() ? full_nf(h, basis) : mora_nf(h, basis);
  }

  ModVec spoly(const ModVec& f, const ModVec& g) const {
    const Monomial l = lcm(f.lead().mon, g.lead().mon);
    // f - (lc f / lc g) * (l / lm g) * g, after lifting f to l
    ModVec lifted = sub_multiple(ModVec(), Rational(-1), l / f.lead().mon, f);
    return sub_multiple(lifted, f.lead().coef / g.lead().coef, l / g.lead().mon, g);
  }
};

// Highest corner: the least D such that every monomial of degree >= D, in
// every component, lies in the module generated by the leading terms. Then
// m^D F is contained in the span of the basis (Nakayama), so terms of degree
// >= D may be dropped during local reductions.
std::optional<int> corner_degree(const std::vector<ModVec>& basis, std::size_t rank, std::size_t nvars) {
  if (nvars == 0) return std::nullopt;
  std::vector<std::vector<int>> pure(rank, std::vector<int>(nvars, -1));
  for (const auto& g : basis) {
    const ModuleTerm& lt = g.lead();
    std::size_t support = 0, var = 0;
    for (std::size_t j = 0; j < nvars; ++j)
      if (lt.mon[j] != 0) {
        ++support;
        var = j;
      }
    if (support == 0) {
      for (auto& e : pure[lt.comp]) e = 0;  // a unit: the whole component
      continue;
    }
    if (support != 1) continue;
    int& e = pure[lt.comp][var];
    if (e < 0 || lt.mon[var] < e) e = lt.mon[var];
  }
  int D = 0;
  for (const auto& c : pure) {
    int d = 1;
    for (int e : c) {
      if (e < 0) return std::nullopt;
      d += std::max(e - 1, 0);
    }
    if (std::all_of(c.begin(), c.end(), [](int e) { return e == 0; })) d = 0;
    D = std::max(D, d);
  }
  return D;
}

// Engine for reductions against an existing basis; local bases with a corner
// reduce modulo m^corner.
Engine engine_for(const SubmodulePresentation& basis) {
  std::optional<int> bound = basis.degree_bound();
  if (basis.order().is_local()) {
    auto corner = corner_degree(basis.vectors(), basis.rank(), basis.ring()->size());
    if (corner && (!bound || *corner < *bound)) bound = corner;
  }
  return Engine{basis.order(), bound};
}

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
  int degree;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

}  // namespace

ModVec::ModVec(std::vector<ModuleTerm> terms, const ModuleOrder& order) {
  std::sort(terms.begin(), terms.end(), TermGreater{&order});
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().comp == t.comp && terms_.back().mon == t.mon) {
      terms_.back().coef += t.coef;
    } else {
      if (!terms_.empty() && terms_.back().coef == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coef == 0) terms_.pop_back();
}

ModVec ModVec::from_free(const FreeElement& e, const ModuleOrder& order) {
  std::vector<ModuleTerm> terms;
  for (std::size_t c = 0; c < e.size(); ++c)
    for (const auto& [m, coef] : e[c].terms()) terms.push_back({m, c, coef});
  return ModVec(std::move(terms), order);
}

FreeElement ModVec::to_free(const RingPtr& ring, std::size_t rank) const {
  FreeElement e(rank, Polynomial(ring));
  for (const auto& t : terms_) e.at(t.comp).add_term(t.mon, t.coef);
  return e;
}

SubmodulePresentation::SubmodulePresentation(RingPtr ring, std::size_t rank, ModuleOrder order)
    : ring_(std::move(ring)), rank_(rank), order_(std::move(order)) {}

SubmodulePresentation SubmodulePresentation::ideal(RingPtr ring, const std::vector<Polynomial>& gens,
                                                   MonomialOrder order) {
  SubmodulePresentation s(ring, 1, ModuleOrder(std::move(order)));
  for (const auto& g : gens) s.add(FreeElement{g});
  return s;
}

void SubmodulePresentation::add(const FreeElement& e) {
  if (e.size() != rank_) throw ContextMismatch("free element has the wrong rank");
  for (const auto& p : e)
    if (!p.is_zero() && !same_ring(p.ring(), ring_)) throw ContextMismatch("generator lives in a different ring");
  add(ModVec::from_free(e, order_));
}

void SubmodulePresentation::add(ModVec v) {
  if (v.is_zero()) return;
  for (const auto& t : v.terms()) {
    if (t.comp >= rank_) throw ContextMismatch("module term outside the free module");
    if (t.mon.size() != ring_->size()) throw ContextMismatch("module term has the wrong number of variables");
  }
  vecs_.push_back(std::move(v));
  completed_ = false;
}

std::vector<FreeElement> SubmodulePresentation::generators() const {
  std::vector<FreeElement> out;
  out.reserve(vecs_.size());
  for (const auto& v : vecs_) out.push_back(v.to_free(ring_, rank_));
  return out;
}

namespace {

bool h_is_pure_power(const ModVec& v) {
  const auto exps = v.lead().mon.exponents();
  return std::count_if(exps.begin(), exps.end(), [](auto e) { return e != 0; }) <= 1;
}

}  // namespace

SubmodulePresentation standard_basis(const SubmodulePresentation& gens, const StdBasisOptions& opts) {
  if (opts.degree_bound && gens.order().base().kind() != MonomialOrder::Kind::NegDegRevLex) {
    throw PreconditionError("truncated standard bases need the plain local order");
  }
  Engine eng{gens.order(), opts.degree_bound};
  const bool single_component = gens.rank() == 1;

  std::vector<ModVec> input;
  for (const auto& v : gens.vectors()) {
    ModVec t = Engine::monic(eng.truncate(v));
    if (!t.is_zero()) input.push_back(std::move(t));
  }
  std::stable_sort(input.begin(), input.end(), [&](const ModVec& a, const ModVec& b) {
    int c = eng.cmp(a.lead(), b.lead());
    if (c != 0) return c < 0;
    return a.size() < b.size();
  });

  std::vector<ModVec> basis;
  std::set<Pair, PairLess> pairs;

  // Gebauer-Moeller update for a new element h about to become basis[k].
  auto update = [&](const ModVec& h) {
    const std::size_t k = basis.size();
    const ModuleTerm& lh = h.lead();

    // Criterion B on the existing queue.
    for (auto it = pairs.begin(); it != pairs.end();) {
      const Pair& p = *it;
      if (basis[p.i].lead().comp == lh.comp && lh.mon.divides(p.lcm) &&
          lcm(basis[p.i].lead().mon, lh.mon) != p.lcm && lcm(basis[p.j].lead().mon, lh.mon) != p.lcm) {
        it = pairs.erase(it);
      } else {
        ++it;
      }
    }

    struct Candidate {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < k; ++i) {
      const ModuleTerm& li = basis[i].lead();
      if (li.comp != lh.comp) continue;
      cands.push_back({i, lcm(li.mon, lh.mon), single_component && li.mon.coprime(lh.mon)});
    }
    // Criterion M: drop pairs whose lcm is a proper multiple of another lcm.
    for (auto& a : cands) {
      for (const auto& b : cands) {
        if (&a == &b) continue;
        if (b.lcm.divides(a.lcm) && b.lcm != a.lcm) {
          a.alive = false;
          break;
        }
      }
    }
    // Criterion F: one pair per lcm; a coprime pair in the group kills it.
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (!cands[x].alive) continue;
      bool group_coprime = cands[x].coprime;
      for (std::size_t y = x + 1; y < cands.size(); ++y) {
        if (cands[y].alive && cands[y].lcm == cands[x].lcm) {
          group_coprime = group_coprime || cands[y].coprime;
          cands[y].alive = false;
        }
      }
      if (group_coprime) cands[x].alive = false;
    }
    for (const auto& c : cands) {
      if (!c.alive) continue;
      pairs.insert({c.i, k, c.lcm, gens.order().degree(c.lcm, lh.comp)});
    }
  };

  const bool local = gens.order().is_local();
  auto refresh_corner = [&] {
    if (!local) return;
    auto corner = corner_degree(basis, gens.rank(), gens.ring()->size());
    if (corner && (!eng.bound || *corner < *eng.bound)) eng.bound = corner;
  };

  for (auto& g : input) {
    update(g);
    basis.push_back(std::move(g));
  }
  refresh_corner();

  std::size_t processed = 0;
  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    if (++processed > opts.pair_cap) {
      throw ResourceLimitError("standard basis exceeded the cap of " + std::to_string(opts.pair_cap) +
                               " S-vector reductions");
    }
    ModVec s = eng.spoly(basis[p.i], basis[p.j]);
    ModVec h = eng.nf(s, basis);
    if (h.is_zero()) continue;
    h = Engine::monic(std::move(h));
    update(h);
    basis.push_back(std::move(h));
    if (h_is_pure_power(basis.back())) refresh_corner();
  }

  // Minimal basis: drop elements whose leading term is divisible by another's
  // (keeping the first of equal leading terms).
  std::vector<std::size_t> order_idx(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) order_idx[k] = k;
  std::stable_sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    int c = eng.cmp(basis[a].lead(), basis[b].lead());
    if (c != 0) return c < 0;
    return basis[a].size() < basis[b].size();
  });
  std::vector<ModVec> minimal;
  for (std::size_t x = 0; x < order_idx.size(); ++x) {
    const ModuleTerm& lx = basis[order_idx[x]].lead();
    bool redundant = false;
    for (std::size_t y = 0; y < order_idx.size() && !redundant; ++y) {
      if (x == y) continue;
      const ModuleTerm& ly = basis[order_idx[y]].lead();
      if (!Engine::divides(ly, lx)) continue;
      if (ly.mon != lx.mon || y < x) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[order_idx[x]]);
  }

  if (eng.well_ordered()) {
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<ModuleTerm> tail(minimal[k].terms().begin() + 1, minimal[k].terms().end());
      ModVec reduced_tail = eng.full_nf(ModVec::from_sorted(std::move(tail)), minimal, k);
      std::vector<ModuleTerm> terms{minimal[k].lead()};
      terms.insert(terms.end(), reduced_tail.terms().begin(), reduced_tail.terms().end());
      minimal[k] = ModVec::from_sorted(std::move(terms));
    }
  }

  SubmodulePresentation out(gens.ring(), gens.rank(), gens.order());
  out.vecs_ = std::move(minimal);
  out.completed_ = true;
  out.degree_bound_ = opts.degree_bound;
  if (observer()) observer()(out);
  return out;
}

ModVec normal_form(const ModVec& e, const SubmodulePresentation& basis) {
  Engine eng = engine_for(basis);
  return eng.nf(e, basis.vectors());
}

FreeElement normal_form(const FreeElement& e, const SubmodulePresentation& basis) {
  if (e.size() != basis.rank()) throw ContextMismatch("free element has the wrong rank");
  return normal_form(ModVec::from_free(e, basis.order()), basis).to_free(basis.ring(), basis.rank());
}

std::vector<LeadingTerm> leading_module(const SubmodulePresentation& basis) {
  if (!basis.is_standard_basis()) throw PreconditionError("leading module requested for a non-completed basis");
  std::vector<LeadingTerm> all;
  for (const auto& v : basis.vectors()) all.push_back({v.lead().mon, v.lead().comp});
  std::vector<LeadingTerm> out;
  for (std::size_t x = 0; x < all.size(); ++x) {
    bool redundant = false;
    for (std::size_t y = 0; y < all.size() && !redundant; ++y) {
      if (x == y || all[y].comp != all[x].comp || !all[y].mon.divides(all[x].mon)) continue;
      if (all[y].mon != all[x].mon || y < x) redundant = true;
    }
    if (!redundant) out.push_back(all[x]);
  }
  return out;
}

void set_basis_observer(BasisObserver obs) { observer() = std::move(obs); }

bool satisfies_buchberger_criterion(const SubmodulePresentation& basis) {
  Engine eng = engine_for(basis);
  const auto& vecs = basis.vectors();
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    for (std::size_t j = i + 1; j < vecs.size(); ++j) {
      if (vecs[i].lead().comp != vecs[j].lead().comp) continue;
      if (!eng.nf(eng.spoly(vecs[i], vecs[j]), vecs).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace hindex
