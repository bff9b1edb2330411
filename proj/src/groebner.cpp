#include "gbfan/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gbfan/errors.hpp"

namespace gbfan {

namespace {

// A polynomial as (term, coefficient) pairs sorted strictly decreasing in
// the active ordering.  All reduction work happens in this form.
using Entry = std::pair<Term, FieldElement>;
using Sorted = std::vector<Entry>;

Sorted to_sorted(const Polynomial& p, const TermOrdering& ord) { return p.sorted_terms(ord); }

Polynomial from_sorted(const RingPtr& ring, const Sorted& s) {
  Polynomial::TermMap m;
  for (const auto& [t, c] : s) m.emplace(t, c);
  return Polynomial(ring, std::move(m));
}

// h - c * m * g, with g sorted.
Sorted sub_multiple(const Sorted& h, const Sorted& g, const Term& m, const FieldElement& c, const TermOrdering& ord) {
  Sorted out;
  out.reserve(h.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < h.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(h[i++]);
      continue;
    }
    Term gt = g[j].first * m;
    if (i == h.size()) {
      out.emplace_back(std::move(gt), -(g[j].second * c));
      ++j;
      continue;
    }
    int cmp = ord.compare(h[i].first, gt);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.emplace_back(std::move(gt), -(g[j].second * c));
      ++j;
    } else {
      FieldElement v = h[i].second - g[j].second * c;
      if (!v.is_zero()) out.emplace_back(h[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(Sorted& s) {
  if (s.empty() || s.front().second.is_one()) return;
  FieldElement inv = s.front().second.inverse();
  for (auto& e : s) e.second *= inv;
}

struct Basis {
  std::vector<Sorted> polys;  // monic
  std::vector<Term> leads;
};

// Returns the index of a basis element whose leading term divides t.
std::ptrdiff_t find_divisor(const std::vector<Term>& leads, const std::vector<bool>* active, const Term& t) {
  for (std::size_t k = 0; k < leads.size(); ++k) {
    if (active && !(*active)[k]) continue;
    if (leads[k].divides(t)) return static_cast<std::ptrdiff_t>(k);
  }
  return -1;
}

Sorted top_reduce(Sorted h, const Basis& b, const TermOrdering& ord) {
  while (!h.empty()) {
    auto k = find_divisor(b.leads, nullptr, h.front().first);
    if (k < 0) break;
    Term m = b.leads[k].quotient_of(h.front().first);
    FieldElement c = h.front().second;
    h = sub_multiple(h, b.polys[k], m, c, ord);
  }
  return h;
}

// Full reduction of h by monic sorted polynomials with the given leads.
Sorted full_reduce(Sorted h, const std::vector<Sorted>& polys, const std::vector<Term>& leads,
                   const std::vector<bool>* active, const TermOrdering& ord) {
  Sorted rem;
  while (!h.empty()) {
    auto k = find_divisor(leads, active, h.front().first);
    if (k < 0) {
      rem.push_back(h.front());
      h.erase(h.begin());
      continue;
    }
    Term m = leads[k].quotient_of(h.front().first);
    FieldElement c = h.front().second;
    h = sub_multiple(h, polys[k], m, c, ord);
  }
  return rem;
}

Sorted spoly(const Sorted& f, const Sorted& g, const TermOrdering& ord) {
  Term l = f.front().first.lcm(g.front().first);
  Sorted a = sub_multiple(Sorted{}, f, f.front().first.quotient_of(l), -(g.front().second), ord);
  return sub_multiple(a, g, g.front().first.quotient_of(l), f.front().second, ord);
}

}  // namespace

// ---------------------------------------------------------------------------

ReducedGB::ReducedGB(TermOrdering ordering, RingPtr ring, std::vector<Polynomial> elements)
    : ordering_(std::move(ordering)), ring_(std::move(ring)), elements_(std::move(elements)) {
  for (const auto& e : elements_) leading_.push_back(e.leading_term(ordering_));
}

bool ReducedGB::is_unit() const { return elements_.size() == 1 && elements_.front().is_constant(); }

MonomialIdeal ReducedGB::leading_term_ideal() const { return MonomialIdeal(ring_->nvars(), leading_); }

std::string ReducedGB::serialize() const {
  std::ostringstream out;
  out << "order: " << ordering_.to_string() << '\n';
  for (const auto& e : elements_) out << e.to_string(ordering_) << '\n';
  return out.str();
}

ReducedGB buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators, const TermOrdering& ord,
                     const BuchbergerOptions& options) {
  if (ord.nvars() != ring->nvars()) fail(ErrorKind::DimensionMismatch, "ordering and ring differ in variable count");
  Basis b;
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) fail(ErrorKind::RingMismatch, "generator from a different ring");
    if (g.is_zero()) continue;
    Sorted s = to_sorted(g, ord);
    make_monic(s);
    b.leads.push_back(s.front().first);
    b.polys.push_back(std::move(s));
  }

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < b.polys.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);

  auto pair_is_pending = [&](std::size_t a, std::size_t c) { return pending.contains({std::min(a, c), std::max(a, c)}); };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm (degree first, then the ordering).
    auto best = pending.begin();
    Term best_lcm = b.leads[best->first].lcm(b.leads[best->second]);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Term l = b.leads[it->first].lcm(b.leads[it->second]);
      if (l.degree() < best_lcm.degree() || (l.degree() == best_lcm.degree() && ord.less(l, best_lcm))) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    if (options.use_criteria) {
      if (b.leads[i].coprime(b.leads[j])) continue;
      bool chain = false;
      for (std::size_t k = 0; k < b.polys.size() && !chain; ++k) {
        if (k == i || k == j) continue;
        chain = !pair_is_pending(i, k) && !pair_is_pending(j, k) && b.leads[k].divides(best_lcm);
      }
      if (chain) continue;
    }

    Sorted h = top_reduce(spoly(b.polys[i], b.polys[j], ord), b, ord);
    if (h.empty()) continue;
    make_monic(h);
    if (h.front().first.is_one()) {
      b.polys = {std::move(h)};
      b.leads = {Term::one(ring->nvars())};
      pending.clear();
      break;
    }
    std::size_t n = b.polys.size();
    b.leads.push_back(h.front().first);
    b.polys.push_back(std::move(h));
    for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
  }

  // Minimise, then interreduce tails.
  std::vector<bool> keep(b.polys.size(), true);
  for (std::size_t k = 0; k < b.polys.size(); ++k) {
    for (std::size_t l = 0; l < b.polys.size() && keep[k]; ++l) {
      if (l == k || !keep[l]) continue;
      if (b.leads[l].divides(b.leads[k])) keep[k] = false;
    }
  }
  std::vector<Sorted> reduced;
  for (std::size_t k = 0; k < b.polys.size(); ++k) {
    if (!keep[k]) continue;
    keep[k] = false;
    Sorted r = full_reduce(b.polys[k], b.polys, b.leads, &keep, ord);
    keep[k] = true;
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Sorted& a, const Sorted& c) { return ord.less(a.front().first, c.front().first); });
  std::vector<Polynomial> elems;
  for (const auto& r : reduced) elems.push_back(from_sorted(ring, r));
  return ReducedGB(ord, ring, std::move(elems));
}

Polynomial normal_form(const Polynomial& f, const ReducedGB& basis) {
  if (!same_ring(f.ring(), basis.ring())) fail(ErrorKind::RingMismatch, "normal form across rings");
  const auto& ord = basis.ordering();
  std::vector<Sorted> polys;
  for (const auto& e : basis.elements()) polys.push_back(to_sorted(e, ord));
  return from_sorted(f.ring(), full_reduce(to_sorted(f, ord), polys, basis.leading_terms(), nullptr, ord));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrdering& ord) {
  Sorted a = to_sorted(f, ord), b = to_sorted(g, ord);
  make_monic(a);
  make_monic(b);
  return from_sorted(f.ring(), spoly(a, b, ord));
}

// ---------------------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) fail(ErrorKind::RingMismatch, "generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::parse(RingPtr ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(Polynomial::parse(ring, g));
  return Ideal(std::move(ring), std::move(gens));
}

const ReducedGB& Ideal::reduced_basis(const TermOrdering& ordering) const {
  const auto& key = ordering.canonical_key();
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto gb = std::make_shared<const ReducedGB>(buchberger(ring_, gens_, ordering));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(key, std::move(gb));
  return *it->second;
}

const ReducedGB& Ideal::reduced_basis() const { return reduced_basis(TermOrdering::degrevlex(nvars())); }

MonomialIdeal leading_term_ideal(const Ideal& ideal, const TermOrdering& ordering) {
  return ideal.reduced_basis(ordering).leading_term_ideal();
}

bool is_zero_dimensional(const Ideal& ideal) { return ideal.reduced_basis().leading_term_ideal().is_zero_dimensional(); }

std::vector<Term> quotient_basis(const ReducedGB& basis) {
  auto lt = basis.leading_term_ideal();
  if (!lt.is_zero_dimensional()) fail(ErrorKind::NotZeroDimensional, "the ideal is not zero-dimensional");
  if (lt.is_unit()) return {};
  auto terms = lt.order_ideal();
  const auto& ord = basis.ordering();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ord.less(a, b); });
  return terms;
}

std::vector<Term> quotient_basis(const Ideal& ideal, const TermOrdering& ordering) {
  return quotient_basis(ideal.reduced_basis(ordering));
}

std::size_t multiplicity(const Ideal& ideal) { return quotient_basis(ideal.reduced_basis()).size(); }

namespace {

void check_same(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) fail(ErrorKind::RingMismatch, "ideals live in different rings");
}

// The ring with one extra variable appended, named so it cannot clash.
RingPtr with_tag(const RingPtr& ring) {
  auto names = ring->names();
  std::string tag = "_t";
  while (ring->index_of(tag)) tag += "_";
  names.push_back(tag);
  return Ring::make(ring->field(), std::move(names));
}

Polynomial lift(const Polynomial& f, const RingPtr& big) {
  Polynomial::TermMap m;
  for (const auto& [t, c] : f.terms()) {
    std::vector<Term::Exponent> e(t.exponents().begin(), t.exponents().end());
    e.resize(big->nvars(), 0);
    m.emplace(Term(std::move(e)), c);
  }
  return Polynomial(big, std::move(m));
}

Polynomial drop_last(const Polynomial& f, const RingPtr& small) {
  Polynomial::TermMap m;
  for (const auto& [t, c] : f.terms()) {
    std::vector<Term::Exponent> e(t.exponents().begin(), t.exponents().end());
    e.resize(small->nvars());
    m.emplace(Term(std::move(e)), c);
  }
  return Polynomial(small, std::move(m));
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  std::vector<Polynomial> g;
  for (const auto& f : a.generators())
    for (const auto& h : b.generators()) g.push_back(f * h);
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  auto big = with_tag(a.ring());
  std::size_t n = a.nvars();
  Polynomial t = Polynomial::variable(big, n);
  Polynomial one_minus_t = Polynomial::constant(big, big->one()) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * lift(f, big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * lift(g, big));
  TermOrdering::Row tag_row(n + 1, 0);
  tag_row[n] = 1;
  auto ord = TermOrdering::refined({tag_row}, n + 1);
  auto gb = buchberger(big, gens, ord);
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements())
    if (!e.involves(n)) out.push_back(drop_last(e, a.ring()));
  return Ideal(a.ring(), std::move(out));
}

Ideal ideal_colon(const Ideal& j, const Ideal& i) {
  check_same(j, i);
  if (i.is_zero()) fail(ErrorKind::ZeroIdealDivisor, "colon by the zero ideal");
  auto unit = Ideal(j.ring(), {Polynomial::constant(j.ring(), j.ring()->one())});
  std::optional<Ideal> result;
  for (const auto& f : i.generators()) {
    if (ideal_member(f, j)) continue;
    Ideal meet = ideal_intersection(j, Ideal(j.ring(), {f}));
    std::vector<Polynomial> q;
    for (const auto& g : meet.generators()) {
      auto quo = exact_quotient(g, f);
      if (!quo) fail(ErrorKind::Internal, "generator of J and <f> not divisible by f");
      q.push_back(std::move(*quo));
    }
    Ideal part(j.ring(), std::move(q));
    result = result ? ideal_intersection(*result, part) : part;
  }
  return result ? *result : unit;
}

Ideal elimination(const Ideal& ideal, const std::vector<std::size_t>& eliminate) {
  std::size_t n = ideal.nvars();
  if (eliminate.empty()) return ideal;
  TermOrdering::Row row(n, 0);
  for (auto v : eliminate) {
    if (v >= n) fail(ErrorKind::DimensionMismatch, "variable index out of range");
    row[v] = 1;
  }
  auto ord = TermOrdering::refined({row}, n);
  const auto& gb = ideal.reduced_basis(ord);
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements()) {
    bool uses = std::any_of(eliminate.begin(), eliminate.end(), [&](std::size_t v) { return e.involves(v); });
    if (!uses) out.push_back(e);
  }
  return Ideal(ideal.ring(), std::move(out));
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) fail(ErrorKind::RingMismatch, "membership across rings");
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  return normal_form(f, ideal.reduced_basis()).is_zero();
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
  check_same(big, small);
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Polynomial& g) { return ideal_member(g, big); });
}

bool ideal_equal(const Ideal& a, const Ideal& b) { return ideal_contains(a, b) && ideal_contains(b, a); }

}  // namespace gbfan
