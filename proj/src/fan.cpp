#include "gbfan/fan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "gbfan/errors.hpp"
#include "gbfan/linalg.hpp"

namespace gbfan {

namespace {

std::int64_t dot(const IntVector& a, const IntVector& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  if (s > INT64_MAX || s < INT64_MIN) fail(ErrorKind::Internal, "dot product overflow");
  return static_cast<std::int64_t>(s);
}

IntVector difference(const Term& a, const Term& b) {
  IntVector v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
  return v;
}

bool all_nonneg(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

bool all_nonpos(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x <= 0; });
}

std::string exponent_key(const MonomialIdeal& m) {
  std::string k;
  for (const auto& g : m.generators()) {
    for (std::size_t i = 0; i < g.size(); ++i) k += std::to_string(g[i]) + (i + 1 < g.size() ? "," : "");
    k += ";";
  }
  return k;
}

}  // namespace

Cone::Cone(std::size_t dim, std::vector<IntVector> inequalities) : dim_(dim), ineqs_(std::move(inequalities)) {
  std::sort(ineqs_.begin(), ineqs_.end());
  ineqs_.erase(std::unique(ineqs_.begin(), ineqs_.end()), ineqs_.end());
}

bool Cone::contains(const IntVector& w) const {
  if (w.size() != dim_) fail(ErrorKind::DimensionMismatch, "weight vector has the wrong length");
  if (!all_nonneg(w)) return false;
  return std::all_of(ineqs_.begin(), ineqs_.end(), [&](const IntVector& v) { return dot(v, w) >= 0; });
}

bool Cone::contains_perturbed(const IntVector& w, const IntVector& direction) const {
  for (const auto& v : ineqs_) {
    auto a = dot(v, w);
    if (a > 0) continue;
    if (a < 0 || dot(v, direction) <= 0) return false;
  }
  return true;
}

std::string Cone::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < ineqs_.size(); ++k) {
    out << (k ? ", " : "") << '[';
    for (std::size_t i = 0; i < ineqs_[k].size(); ++i) out << (i ? ", " : "") << ineqs_[k][i];
    out << ']';
  }
  out << ']';
  return out.str();
}

Cone cone_of(const std::vector<Polynomial>& basis, const std::vector<Term>& marking) {
  if (basis.size() != marking.size()) fail(ErrorKind::DimensionMismatch, "one marking per basis element is required");
  std::size_t n = marking.empty() ? (basis.empty() ? 0 : basis.front().nvars()) : marking.front().size();
  std::set<IntVector> vecs;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].terms().contains(marking[i]))
      fail(ErrorKind::InconsistentMarking, "marked term is not in the support");
    for (const auto& [t, c] : basis[i].terms()) {
      if (t == marking[i]) continue;
      IntVector v = cone_math::primitive(difference(marking[i], t));
      if (all_nonneg(v)) continue;
      if (all_nonpos(v)) fail(ErrorKind::InconsistentMarking, "a support term divisible by the marked term beats it for every positive weight");
      vecs.insert(std::move(v));
    }
  }
  std::vector<IntVector> list(vecs.begin(), vecs.end());
  if (!list.empty() && !cone_math::strictly_positive_witness(list, n))
    fail(ErrorKind::InconsistentMarking, "no strictly positive weight realises the marking");

  // Componentwise domination: v >= u means v = u + (orthant), so v is implied.
  std::vector<bool> keep(list.size(), true);
  for (std::size_t k = 0; k < list.size(); ++k) {
    for (std::size_t j = 0; j < list.size() && keep[k]; ++j) {
      if (j == k || !keep[j]) continue;
      bool dominates = true;
      for (std::size_t i = 0; i < n && dominates; ++i) dominates = list[k][i] >= list[j][i];
      if (dominates) keep[k] = false;
    }
  }
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (!keep[k]) continue;
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < list.size(); ++j)
      if (j != k && keep[j]) others.push_back(list[j]);
    if (cone_math::implied(list[k], others, n)) keep[k] = false;
  }
  std::vector<IntVector> out;
  for (std::size_t k = 0; k < list.size(); ++k)
    if (keep[k]) out.push_back(list[k]);
  return Cone(n, std::move(out));
}

Cone cone_of(const ReducedGB& basis) { return cone_of(basis.elements(), basis.leading_terms()); }

MarkedReducedGB mark(const ReducedGB& basis) {
  auto lt = basis.leading_term_ideal();
  auto key = exponent_key(lt);
  return MarkedReducedGB{basis, cone_of(basis), std::move(lt), std::move(key)};
}

GroebnerFan::GroebnerFan(std::size_t nvars, std::vector<MarkedReducedGB> cones) : nvars_(nvars), cones_(std::move(cones)) {
  std::sort(cones_.begin(), cones_.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
}

std::vector<MonomialIdeal> GroebnerFan::lt_ideals() const {
  std::vector<MonomialIdeal> out;
  for (const auto& c : cones_) out.push_back(c.lt_ideal);
  return out;
}

std::vector<Cone> GroebnerFan::canonical_cones() const {
  std::vector<Cone> out;
  for (const auto& c : cones_) out.push_back(c.cone);
  std::sort(out.begin(), out.end());
  return out;
}

GroebnerFan enumerate_fan(const Ideal& ideal) {
  if (ideal.is_zero()) fail(ErrorKind::ZeroIdeal, "the zero ideal has no Groebner fan to enumerate");
  std::size_t n = ideal.nvars();
  std::vector<MarkedReducedGB> cones;
  std::map<std::string, std::size_t> seen;
  std::deque<std::size_t> frontier;

  auto start = mark(ideal.reduced_basis());
  seen.emplace(start.key, 0);
  cones.push_back(std::move(start));
  frontier.push_back(0);
  constexpr std::size_t kMaxCones = 20000;

  while (!frontier.empty()) {
    std::size_t idx = frontier.front();
    frontier.pop_front();
    const auto ineqs = cones[idx].cone.inequalities();
    for (std::size_t k = 0; k < ineqs.size(); ++k) {
      std::vector<IntVector> others;
      for (std::size_t j = 0; j < ineqs.size(); ++j)
        if (j != k) others.push_back(ineqs[j]);
      auto w = cone_math::facet_interior_point(ineqs[k], others, n);
      if (!w) {
        if (is_zero_dimensional(ideal)) fail(ErrorKind::Internal, "irredundant facet without interior point");
        fail(ErrorKind::UnsupportedIdealClass, "facet does not meet the open orthant");
      }
      IntVector across = ineqs[k];
      for (auto& x : across) x = -x;
      auto ord = TermOrdering::refined({*w, across}, n);

      // The neighbour is whichever cone contains w pushed slightly across.
      bool known = false;
      for (const auto& c : cones) {
        bool inside = true;
        for (const auto& v : c.cone.inequalities()) {
          int sign = 0;
          for (const auto& row : ord.rows()) {
            auto d = dot(v, row);
            if (d != 0) {
              sign = d > 0 ? 1 : -1;
              break;
            }
          }
          if (sign < 0) {
            inside = false;
            break;
          }
        }
        if (inside) {
          known = true;
          break;
        }
      }
      if (known) continue;

      auto next = mark(ideal.reduced_basis(ord));
      if (!next.cone.contains(*w)) {
        if (is_zero_dimensional(ideal)) fail(ErrorKind::Internal, "flipped cone does not contain the facet point");
        fail(ErrorKind::UnsupportedIdealClass, "flip left the facet; ideal class not supported");
      }
      if (seen.contains(next.key)) continue;
      if (cones.size() >= kMaxCones) fail(ErrorKind::UnsupportedIdealClass, "fan traversal exceeded the cone budget");
      seen.emplace(next.key, cones.size());
      frontier.push_back(cones.size());
      cones.push_back(std::move(next));
    }
  }
  return GroebnerFan(n, std::move(cones));
}

bool unique_gb_fast_check(const Ideal& ideal) {
  const auto& gb = ideal.reduced_basis();
  return std::all_of(gb.elements().begin(), gb.elements().end(), [](const Polynomial& g) { return is_factor_closed(g); });
}

std::size_t gfan_number(const Ideal& ideal) {
  if (ideal.is_zero()) fail(ErrorKind::ZeroIdeal, "the zero ideal has no Groebner fan to enumerate");
  if (unique_gb_fast_check(ideal)) return 1;
  return enumerate_fan(ideal).size();
}

std::vector<std::vector<Term>> gbasic_sets(const GroebnerFan& fan) {
  std::vector<std::vector<Term>> out;
  for (const auto& c : fan.cones()) {
    if (!c.lt_ideal.is_zero_dimensional()) fail(ErrorKind::NotZeroDimensional, "basic sets need a zero-dimensional ideal");
    out.push_back(quotient_basis(c.basis));
  }
  return out;
}

bool fan_equal(const GroebnerFan& a, const GroebnerFan& b) {
  if (a.nvars() != b.nvars()) fail(ErrorKind::DimensionMismatch, "fans in different dimensions");
  return a.canonical_cones() == b.canonical_cones();
}

// ---------------------------------------------------------------------------

namespace {

// Coordinates of normal forms in the basis O_sigma(I) of the degrevlex basis.
class QuotientCoordinates {
 public:
  explicit QuotientCoordinates(const Ideal& ideal) : gb_(ideal.reduced_basis()), basis_(quotient_basis(gb_)) {
    for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
  }

  std::size_t dim() const { return basis_.size(); }
  const FieldSpec& field() const { return gb_.ring()->field(); }

  Vector of(const Term& t) const {
    auto it = cache_.find(t);
    if (it != cache_.end()) return it->second;
    Polynomial nf = normal_form(Polynomial::monomial(gb_.ring(), t), gb_);
    Vector v(basis_.size(), FieldElement::zero(field()));
    for (const auto& [s, c] : nf.terms()) v.at(index_.at(s)) = c;
    cache_.emplace(t, v);
    return v;
  }

 private:
  const ReducedGB& gb_;
  std::vector<Term> basis_;
  std::map<Term, std::size_t> index_;
  mutable std::map<Term, Vector> cache_;
};

}  // namespace

std::vector<std::size_t> univariate_degrees(const Ideal& ideal) {
  QuotientCoordinates coords(ideal);
  std::size_t n = ideal.nvars();
  std::vector<std::size_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    EchelonBasis e(coords.dim(), coords.field());
    Term t = Term::one(n);
    std::size_t k = 0;
    while (e.insert(coords.of(t))) {
      ++t[i];
      ++k;
    }
    out[i] = k;
  }
  return out;
}

std::vector<std::vector<Term>> enumerate_basic_sets(const Ideal& ideal, const BasicSetOptions& options) {
  if (!is_zero_dimensional(ideal)) fail(ErrorKind::NotZeroDimensional, "basic sets need a zero-dimensional ideal");
  QuotientCoordinates coords(ideal);
  std::size_t s = coords.dim();
  std::size_t n = ideal.nvars();
  if (s > options.max_multiplicity)
    fail(ErrorKind::BoundExceeded, "multiplicity " + std::to_string(s) + " exceeds the basic-set bound " +
                                       std::to_string(options.max_multiplicity));
  if (s == 0) return {{}};

  // Exponent of x_i in a basic set stays below deg f_I(x_i): otherwise the
  // powers 1..x_i^d would be dependent modulo I.
  auto box = univariate_degrees(ideal);
  std::vector<Term> cands;
  {
    std::vector<Term> stack{Term::one(n)};
    std::set<Term> seen{Term::one(n)};
    while (!stack.empty()) {
      Term t = stack.back();
      stack.pop_back();
      cands.push_back(t);
      for (std::size_t i = 0; i < n; ++i) {
        Term u = t;
        ++u[i];
        if (u[i] >= box[i] || u.degree() >= s) continue;
        if (seen.insert(u).second) stack.push_back(u);
      }
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Term& a, const Term& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  std::vector<Vector> vecs;
  for (const auto& t : cands) vecs.push_back(coords.of(t));

  std::vector<std::vector<Term>> out;
  std::vector<Term> current;
  std::set<Term> members;
  auto divisors_present = [&](const Term& t) {
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i] == 0) continue;
      Term d = t;
      --d[i];
      if (!members.contains(d)) return false;
    }
    return true;
  };
  // Depth-first over additions in increasing candidate index; every order
  // ideal is reached exactly once this way.
  auto dfs = [&](auto&& self, std::size_t from, const EchelonBasis& echelon) -> void {
    if (current.size() == s) {
      std::vector<Term> set = current;
      std::sort(set.begin(), set.end());
      out.push_back(std::move(set));
      return;
    }
    for (std::size_t k = from; k < cands.size(); ++k) {
      const Term& t = cands[k];
      if (!divisors_present(t)) continue;
      EchelonBasis next = echelon;
      if (!next.insert(vecs[k])) continue;
      current.push_back(t);
      members.insert(t);
      self(self, k + 1, next);
      members.erase(t);
      current.pop_back();
    }
  };
  dfs(dfs, 0, EchelonBasis(s, coords.field()));
  std::sort(out.begin(), out.end());
  return out;
}

GroebnerFan fan_oracle_zerodim(const Ideal& ideal, const BasicSetOptions& options) {
  auto sets = enumerate_basic_sets(ideal, options);
  QuotientCoordinates coords(ideal);
  const auto& ring = ideal.ring();
  std::size_t n = ideal.nvars();
  std::vector<MarkedReducedGB> cones;
  for (const auto& basic : sets) {
    EchelonBasis echelon(coords.dim(), coords.field());
    for (const auto& o : basic)
      if (!echelon.insert(coords.of(o))) fail(ErrorKind::Internal, "basic set is not independent");
    std::set<Term> inside(basic.begin(), basic.end());
    std::vector<Term> border;
    if (basic.empty()) border.push_back(Term::one(n));
    for (const auto& o : basic)
      for (std::size_t i = 0; i < n; ++i) {
        Term u = o;
        ++u[i];
        if (!inside.contains(u)) border.push_back(u);
      }
    MonomialIdeal complement(n, border);

    std::vector<Polynomial> elements;
    std::vector<IntVector> strict;
    for (const auto& t : complement.generators()) {
      auto comb = echelon.express(coords.of(t));
      if (!comb) fail(ErrorKind::Internal, "border term outside the span of a basic set");
      Polynomial g = Polynomial::monomial(ring, t);
      for (std::size_t k = 0; k < basic.size(); ++k) {
        if ((*comb)[k].is_zero()) continue;
        g.add_term(basic[k], -(*comb)[k]);
        strict.push_back(difference(t, basic[k]));
      }
      elements.push_back(std::move(g));
    }
    auto w = cone_math::strictly_positive_witness(strict, n);
    if (!w) continue;
    auto ord = TermOrdering::weight(*w);
    std::sort(elements.begin(), elements.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord.less(a.leading_term(ord), b.leading_term(ord));
    });
    cones.push_back(mark(ReducedGB(ord, ring, std::move(elements))));
  }
  return GroebnerFan(n, std::move(cones));
}

std::vector<Polynomial> minimal_models(const Polynomial& f, const Ideal& ideal) {
  if (!is_zero_dimensional(ideal)) fail(ErrorKind::NotZeroDimensional, "minimal models need a zero-dimensional ideal");
  auto fan = enumerate_fan(ideal);
  std::vector<Polynomial> out;
  for (const auto& c : fan.cones()) {
    Polynomial nf = normal_form(f, c.basis);
    if (std::find(out.begin(), out.end(), nf) == out.end()) out.push_back(std::move(nf));
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) { return a.to_string() < b.to_string(); });
  return out;
}

}  // namespace gbfan
