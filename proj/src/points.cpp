#include "gbfan/points.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "gbfan/errors.hpp"
#include "gbfan/linalg.hpp"

namespace gbfan {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n'))
    if (!line.empty()) out.push_back(line);
  return out;
}

// "# key: value" -> (key, value); anything else -> nullopt.
std::optional<std::pair<std::string, std::string>> header_line(std::string_view line) {
  if (line.empty() || line.front() != '#') return std::nullopt;
  auto body = trim(line.substr(1));
  auto colon = body.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  return std::make_pair(std::string(trim(body.substr(0, colon))), std::string(trim(body.substr(colon + 1))));
}

std::vector<std::string> parse_names(std::string_view text) {
  std::vector<std::string> names;
  for (auto n : split(text, ',')) {
    if (n.empty()) fail(ErrorKind::ParseError, "empty variable name");
    names.emplace_back(n);
  }
  return names;
}

Polynomial linear_factor(const RingPtr& ring, std::size_t var, const FieldElement& c) {
  return Polynomial::variable(ring, var) - Polynomial::constant(ring, c);
}

Polynomial product_of_roots(const RingPtr& ring, std::size_t var, const std::vector<FieldElement>& roots) {
  Polynomial p = Polynomial::constant(ring, ring->one());
  for (const auto& c : roots) p *= linear_factor(ring, var, c);
  return p;
}

void check_distinct(const std::vector<FieldElement>& values, ErrorKind kind, const std::string& what) {
  std::vector<FieldElement> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail(kind, what);
}

}  // namespace

std::vector<std::string> default_variable_names(std::size_t n) {
  static const char* const kShort[] = {"x", "y", "z"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(n <= 3 ? kShort[i] : "x" + std::to_string(i + 1));
  return out;
}

PointSet::PointSet(RingPtr ring, std::vector<Point> points) : ring_(std::move(ring)), points_(std::move(points)) {
  const auto& field = ring_->field();
  for (const auto& p : points_) {
    if (p.size() != ring_->nvars()) fail(ErrorKind::DimensionMismatch, "point has the wrong number of coordinates");
    for (const auto& c : p)
      if (c.field() != field) fail(ErrorKind::FieldMismatch, "coordinate outside the ring's field");
  }
  std::set<Point> seen;
  for (const auto& p : points_)
    if (!seen.insert(p).second) fail(ErrorKind::InvalidArgument, "repeated point");
}

bool PointSet::contains(const Point& p) const { return std::find(points_.begin(), points_.end(), p) != points_.end(); }

std::string PointSet::to_csv() const {
  std::ostringstream out;
  for (const auto& p : points_) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i].to_string();
    out << '\n';
  }
  return out.str();
}

PointSet parse_points(std::string_view text, std::optional<FieldSpec> field, std::optional<std::vector<std::string>> vars) {
  std::optional<FieldSpec> header_field;
  std::optional<std::vector<std::string>> header_vars;
  std::vector<std::vector<std::string_view>> rows;
  for (auto line : lines_of(text)) {
    if (line.front() == '#') {
      if (auto h = header_line(line)) {
        if (h->first == "field") header_field = FieldSpec::parse(h->second);
        else if (h->first == "vars") header_vars = parse_names(h->second);
      }
      continue;
    }
    rows.push_back(split(line, ','));
  }
  FieldSpec f = field ? *field : header_field.value_or(FieldSpec::rationals());
  std::vector<std::string> names;
  if (vars) names = *vars;
  else if (header_vars) names = *header_vars;
  else if (!rows.empty()) names = default_variable_names(rows.front().size());
  auto ring = Ring::make(f, names);
  std::vector<Point> points;
  for (const auto& row : rows) {
    if (row.size() != names.size()) fail(ErrorKind::ParseError, "point row has the wrong number of coordinates");
    Point p;
    for (auto cell : row) {
      try {
        p.push_back(FieldElement::parse(f, cell));
      } catch (const Error& e) {
        fail(ErrorKind::ParseError, std::string("bad coordinate '") + std::string(cell) + "': " + e.what());
      }
    }
    points.push_back(std::move(p));
  }
  try {
    return PointSet(ring, std::move(points));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) fail(ErrorKind::ParseError, e.what());
    throw;
  }
}

PointsIdeal ideal_of_points(const PointSet& points, const TermOrdering& ord) {
  if (points.empty()) fail(ErrorKind::EmptyPointSet, "the ideal of no points is the unit ideal");
  const auto& ring = points.ring();
  std::size_t n = ring->nvars();
  if (ord.nvars() != n) fail(ErrorKind::DimensionMismatch, "ordering and ring disagree on the number of variables");
  const auto& field = ring->field();
  std::size_t s = points.size();

  auto cmp = [&](const Term& a, const Term& b) { return ord.less(a, b); };
  std::map<Term, Vector, decltype(cmp)> candidates(cmp);
  candidates.emplace(Term::one(n), Vector(s, FieldElement::one(field)));

  EchelonBasis echelon(s, field);
  std::vector<Term> basis;
  std::vector<Term> leading;
  std::vector<Polynomial> elements;
  auto in_lt = [&](const Term& t) {
    return std::any_of(leading.begin(), leading.end(), [&](const Term& l) { return l.divides(t); });
  };
  while (!candidates.empty()) {
    auto node = candidates.extract(candidates.begin());
    const Term& t = node.key();
    const Vector& v = node.mapped();
    if (in_lt(t)) continue;
    if (auto comb = echelon.express(v)) {
      Polynomial g = Polynomial::monomial(ring, t);
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (!(*comb)[k].is_zero()) g.add_term(basis[k], -(*comb)[k]);
      leading.push_back(t);
      elements.push_back(std::move(g));
      continue;
    }
    echelon.insert(v);
    basis.push_back(t);
    for (std::size_t i = 0; i < n; ++i) {
      Term u = t;
      ++u[i];
      if (candidates.contains(u) || in_lt(u)) continue;
      Vector w = v;
      for (std::size_t k = 0; k < s; ++k) w[k] *= points.points()[k][i];
      candidates.emplace(std::move(u), std::move(w));
    }
  }
  // Leading terms were produced in increasing order already.
  return PointsIdeal{ReducedGB(ord, ring, std::move(elements)), std::move(basis)};
}

PointsIdeal ideal_of_points(const PointSet& points) {
  return ideal_of_points(points, TermOrdering::degrevlex(points.ring()->nvars()));
}

// ---------------------------------------------------------------------------

GridIdeal GridIdeal::factored(RingPtr ring, std::vector<std::vector<FieldElement>> roots) {
  if (roots.size() != ring->nvars()) fail(ErrorKind::DimensionMismatch, "one root list per variable is required");
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].empty()) fail(ErrorKind::InvalidArgument, "grid degree must be positive in every variable");
    for (const auto& c : roots[i])
      if (c.field() != ring->field()) fail(ErrorKind::FieldMismatch, "root outside the ring's field");
    polys.push_back(product_of_roots(ring, i, roots[i]));
  }
  return GridIdeal(std::move(ring), std::move(roots), std::move(polys));
}

GridIdeal GridIdeal::opaque(RingPtr ring, std::vector<Polynomial> univariates) {
  if (univariates.size() != ring->nvars()) fail(ErrorKind::DimensionMismatch, "one polynomial per variable is required");
  auto ord = TermOrdering::degrevlex(ring->nvars());
  for (std::size_t i = 0; i < univariates.size(); ++i) {
    auto& g = univariates[i];
    if (!same_ring(g.ring(), ring)) fail(ErrorKind::RingMismatch, "grid polynomial from another ring");
    if (!g.is_univariate_in(i) || g.degree_in(i) == 0)
      fail(ErrorKind::InvalidArgument, "grid polynomial " + std::to_string(i + 1) + " is not univariate of positive degree in its variable");
    g = g.monic(ord);
  }
  return GridIdeal(std::move(ring), std::nullopt, std::move(univariates));
}

const std::vector<std::vector<FieldElement>>& GridIdeal::roots() const {
  if (!roots_) fail(ErrorKind::InvalidArgument, "grid is given by opaque polynomials, not roots");
  return *roots_;
}

std::vector<std::size_t> GridIdeal::degrees() const {
  std::vector<std::size_t> d;
  for (std::size_t i = 0; i < polys_.size(); ++i) d.push_back(polys_[i].degree_in(i));
  return d;
}

bool GridIdeal::is_radical_grid() const {
  if (!roots_) return false;
  for (const auto& r : *roots_) {
    std::set<FieldElement> s(r.begin(), r.end());
    if (s.size() != r.size()) return false;
  }
  return true;
}

GridIdeal parse_grid_spec(std::string_view text, std::optional<FieldSpec> field, std::optional<std::vector<std::string>> vars) {
  std::optional<FieldSpec> header_field;
  std::vector<std::pair<std::string, std::string>> entries;
  for (auto line : lines_of(text)) {
    if (line.front() == '#') {
      if (auto h = header_line(line); h && h->first == "field") header_field = FieldSpec::parse(h->second);
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(ErrorKind::ParseError, "grid line needs 'var: ...'");
    entries.emplace_back(std::string(trim(line.substr(0, colon))), std::string(trim(line.substr(colon + 1))));
  }
  FieldSpec f = field ? *field : header_field.value_or(FieldSpec::rationals());
  std::vector<std::string> names;
  if (vars) names = *vars;
  else for (const auto& e : entries) names.push_back(e.first);
  auto ring = Ring::make(f, names);
  std::vector<std::optional<std::string>> body(names.size());
  for (const auto& [name, rest] : entries) {
    auto idx = ring->index_of(name);
    if (!idx) fail(ErrorKind::ParseError, "unknown variable '" + name + "' in grid spec");
    if (body[*idx]) fail(ErrorKind::ParseError, "variable '" + name + "' listed twice in grid spec");
    body[*idx] = rest;
  }
  bool any_poly = false;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (!body[i]) fail(ErrorKind::ParseError, "grid spec misses variable '" + names[i] + "'");
    if (body[i]->starts_with("poly")) any_poly = true;
  }
  if (!any_poly) {
    std::vector<std::vector<FieldElement>> roots;
    for (const auto& b : body) {
      std::vector<FieldElement> r;
      for (auto cell : split(*b, ',')) {
        try {
          r.push_back(FieldElement::parse(f, cell));
        } catch (const Error& e) {
          fail(ErrorKind::ParseError, std::string("bad root '") + std::string(cell) + "': " + e.what());
        }
      }
      roots.push_back(std::move(r));
    }
    return GridIdeal::factored(ring, std::move(roots));
  }
  // Mixed lines: roots become their product polynomial.
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const auto& b = *body[i];
    if (b.starts_with("poly")) {
      polys.push_back(Polynomial::parse(ring, std::string_view(b).substr(4)));
    } else {
      std::vector<FieldElement> r;
      for (auto cell : split(b, ',')) r.push_back(FieldElement::parse(f, cell));
      polys.push_back(product_of_roots(ring, i, r));
    }
  }
  return GridIdeal::opaque(ring, std::move(polys));
}

Ideal grid_ideal(const GridIdeal& grid) { return grid.ideal(); }

PointSet grid_points(const GridIdeal& grid) {
  const auto& roots = grid.roots();
  for (const auto& r : roots) check_distinct(r, ErrorKind::RepeatedRoot, "grid has a repeated root; no point set");
  std::vector<Point> points{Point{}};
  for (const auto& r : roots) {
    std::vector<Point> next;
    for (const auto& p : points)
      for (const auto& c : r) {
        Point q = p;
        q.push_back(c);
        next.push_back(std::move(q));
      }
    points = std::move(next);
  }
  return PointSet(grid.ring(), std::move(points));
}

Term socle_term(const GridIdeal& grid) {
  auto d = grid.degrees();
  Term t(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) t[i] = static_cast<Term::Exponent>(d[i] - 1);
  return t;
}

GridIdeal mgrid(const Ideal& ideal) {
  if (!is_zero_dimensional(ideal)) fail(ErrorKind::NotZeroDimensional, "mgrid needs a zero-dimensional ideal");
  const auto& ring = ideal.ring();
  std::size_t n = ring->nvars();
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(j);
    Ideal eliminated = elimination(ideal, others);
    const auto& gb = eliminated.reduced_basis();
    std::optional<Polynomial> f;
    for (const auto& g : gb.elements())
      if (g.is_univariate_in(i)) f = g;
    if (!f || gb.elements().size() != 1) fail(ErrorKind::Internal, "elimination ideal is not principal");
    if (f->is_constant()) fail(ErrorKind::InvalidArgument, "mgrid of the unit ideal is undefined");
    polys.push_back(*f);
  }
  return GridIdeal::opaque(ring, std::move(polys));
}

GridIdeal field_equation_ideal(const RingPtr& ring) {
  const auto& f = ring->field();
  if (f.is_rationals()) fail(ErrorKind::RationalsNotFinite, "field equations need a finite field");
  std::vector<FieldElement> all;
  for (std::uint32_t c = 0; c < f.characteristic(); ++c) all.emplace_back(f, static_cast<long>(c));
  return GridIdeal::factored(ring, std::vector<std::vector<FieldElement>>(ring->nvars(), all));
}

std::vector<Ideal> grid_primary_components(const GridIdeal& grid, const std::vector<std::vector<Polynomial>>& factors) {
  const auto& ring = grid.ring();
  std::size_t n = ring->nvars();
  if (factors.size() != n) fail(ErrorKind::DimensionMismatch, "one factor list per variable is required");
  auto ord = TermOrdering::degrevlex(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (factors[i].empty()) fail(ErrorKind::FactorProductMismatch, "no factors supplied");
    Polynomial prod = Polynomial::constant(ring, ring->one());
    for (const auto& q : factors[i]) {
      if (!q.is_univariate_in(i) || q.degree_in(i) == 0)
        fail(ErrorKind::FactorProductMismatch, "factor is not univariate in its variable");
      prod *= q;
    }
    if (!(prod.monic(ord) == grid.polynomials()[i]))
      fail(ErrorKind::FactorProductMismatch, "factors of variable " + ring->names()[i] + " do not multiply back to g");
  }
  std::vector<Ideal> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(factors[i][pick[i]].monic(ord));
    out.emplace_back(ring, std::move(gens));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++pick[k] < factors[k].size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

// ---------------------------------------------------------------------------

PointSet staircase(const MonomialIdeal& m, const RingPtr& ring) {
  if (m.nvars() != ring->nvars()) fail(ErrorKind::DimensionMismatch, "monomial ideal and ring disagree");
  auto terms = m.order_ideal();
  const auto& f = ring->field();
  if (!f.is_rationals()) {
    Term::Exponent top = 0;
    for (const auto& t : terms)
      for (auto e : t.exponents()) top = std::max(top, e);
    if (top >= f.characteristic())
      fail(ErrorKind::CharacteristicTooSmall, "exponent " + std::to_string(top) + " does not embed distinctly in " + f.to_string());
  }
  std::vector<Point> points;
  for (const auto& t : terms) {
    Point p;
    for (auto e : t.exponents()) p.push_back(nat_embed(e, f));
    points.push_back(std::move(p));
  }
  return PointSet(ring, std::move(points));
}

DistractionSpec natural_spec(const std::vector<Term::Exponent>& degrees, const FieldSpec& field) {
  DistractionSpec spec;
  for (auto d : degrees) {
    if (!field.is_rationals() && d > field.characteristic())
      fail(ErrorKind::CharacteristicTooSmall, "0.." + std::to_string(d - 1) + " are not distinct in " + field.to_string());
    std::vector<FieldElement> pi;
    for (Term::Exponent k = 0; k < d; ++k) pi.push_back(nat_embed(k, field));
    spec.pi.push_back(std::move(pi));
  }
  return spec;
}

Polynomial distraction_term(const RingPtr& ring, const Term& t, const DistractionSpec& spec) {
  std::size_t n = ring->nvars();
  if (t.size() != n || spec.pi.size() != n) fail(ErrorKind::DimensionMismatch, "distraction spec needs one tuple per variable");
  Polynomial p = Polynomial::constant(ring, ring->one());
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.pi[i].size() < t[i])
      fail(ErrorKind::SpecTooShort, "tuple for " + ring->names()[i] + " has " + std::to_string(spec.pi[i].size()) +
                                        " entries, exponent is " + std::to_string(t[i]));
    for (Term::Exponent k = 0; k < t[i]; ++k) {
      if (spec.pi[i][k].field() != ring->field()) fail(ErrorKind::FieldMismatch, "distraction constant outside the field");
      p *= linear_factor(ring, i, spec.pi[i][k]);
    }
  }
  return p;
}

Ideal distraction_ideal(const RingPtr& ring, const MonomialIdeal& m, const DistractionSpec& spec) {
  if (spec.pi.size() != ring->nvars()) fail(ErrorKind::DimensionMismatch, "distraction spec needs one tuple per variable");
  for (std::size_t i = 0; i < spec.pi.size(); ++i)
    check_distinct(spec.pi[i], ErrorKind::RepeatedConstant, "repeated constant in the tuple for " + ring->names()[i]);
  std::vector<Polynomial> gens;
  for (const auto& t : m.generators()) gens.push_back(distraction_term(ring, t, spec));
  return Ideal(ring, std::move(gens));
}

Ideal natural_distraction(const RingPtr& ring, const MonomialIdeal& m) {
  return distraction_ideal(ring, m, natural_spec(m.max_exponents(), ring->field()));
}

// ---------------------------------------------------------------------------

ComplementaryPair complementary_pair(const GridIdeal& grid, const Ideal& first) {
  if (!same_ring(grid.ring(), first.ring())) fail(ErrorKind::RingMismatch, "grid and ideal live in different rings");
  for (const auto& g : grid.polynomials())
    if (!ideal_member(g, first)) fail(ErrorKind::NotContaining, "the grid ideal is not contained in the given ideal");
  Ideal j = grid.ideal();
  Ideal second = ideal_colon(j, first);
  ComplementarityCertificate cert;
  cert.intersection_is_grid = ideal_equal(ideal_intersection(first, second), j);
  cert.sum_is_unit = ideal_sum(first, second).reduced_basis().is_unit();
  cert.colon_recovers_first = ideal_equal(ideal_colon(j, second), first);
  cert.multiplicity_grid = multiplicity(j);
  cert.multiplicity_first = multiplicity(first);
  cert.multiplicity_second = multiplicity(second);
  if (!cert.ok())
    fail(ErrorKind::ComplementarityCertificateFailed,
         "J : I does not complement I (is I a union of primary components of J?)");
  return ComplementaryPair{std::move(second), cert};
}

std::pair<Ideal, Ideal> subset_complement_ideals(const PointSet& grid, const PointSet& subset) {
  if (!same_ring(grid.ring(), subset.ring())) fail(ErrorKind::RingMismatch, "point sets live in different rings");
  if (subset.empty()) fail(ErrorKind::InvalidArgument, "the subset must be nonempty");
  std::size_t n = grid.ring()->nvars();
  std::size_t expected = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<FieldElement> coords;
    for (const auto& p : grid.points()) coords.insert(p[i]);
    expected *= coords.size();
  }
  if (grid.empty() || expected != grid.size()) fail(ErrorKind::NotGrid, "point set is not a full Cartesian grid");
  std::vector<Point> rest;
  for (const auto& p : subset.points())
    if (!grid.contains(p)) fail(ErrorKind::NotSubset, "a subset point is not a grid point");
  for (const auto& p : grid.points())
    if (!subset.contains(p)) rest.push_back(p);
  Ideal first = ideal_of_points(subset).ideal();
  if (rest.empty()) return {first, Ideal(grid.ring(), {Polynomial::constant(grid.ring(), grid.ring()->one())})};
  return {first, ideal_of_points(PointSet(grid.ring(), std::move(rest))).ideal()};
}

Ideal shift_ideal(const Ideal& ideal, const LinearShift& shift) {
  const auto& ring = ideal.ring();
  if (shift.nvars() != ring->nvars()) fail(ErrorKind::DimensionMismatch, "shift and ring disagree on the number of variables");
  for (std::size_t i = 0; i < shift.nvars(); ++i)
    if (shift.scales()[i].field() != ring->field() || shift.offsets()[i].field() != ring->field())
      fail(ErrorKind::FieldMismatch, "shift coefficients outside the ring's field");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(apply_linear_shift(g, shift));
  return Ideal(ring, std::move(gens));
}

}  // namespace gbfan
