#include "gbfan/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "gbfan/errors.hpp"

namespace gbfan {

Ring::Ring(FieldSpec field, std::vector<std::string> names) : field_(field), names_(std::move(names)) {
  if (names_.empty()) fail(ErrorKind::InvalidArgument, "a ring needs at least one variable");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    bool ok = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
    for (char c : n) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) fail(ErrorKind::ParseError, "bad variable name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) fail(ErrorKind::ParseError, "duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

Polynomial::Polynomial(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != ring_->nvars()) fail(ErrorKind::DimensionMismatch, "term length differs from ring");
    if (it->second.field() != ring_->field()) fail(ErrorKind::FieldMismatch, "coefficient outside the ring's field");
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  return monomial(ring, Term::one(ring->nvars()), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  auto n = ring->nvars();
  auto one = ring->one();
  return monomial(std::move(ring), Term::variable(n, index), one);
}

Polynomial Polynomial::monomial(RingPtr ring, const Term& t, const FieldElement& c) {
  Polynomial p(std::move(ring));
  p.add_term(t, c);
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Term& t) {
  auto one = ring->one();
  return monomial(std::move(ring), t, one);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::vector<Term> Polynomial::support() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [t, c] : terms_) out.push_back(t);
  return out;
}

FieldElement Polynomial::coefficient(const Term& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? ring_->zero() : it->second;
}

std::pair<Term, FieldElement> Polynomial::leading(const TermOrdering& ord) const {
  if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "the zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return *best;
}

Polynomial Polynomial::monic(const TermOrdering& ord) const {
  if (is_zero()) return *this;
  return scaled(leading(ord).second.inverse());
}

std::vector<std::pair<Term, FieldElement>> Polynomial::sorted_terms(const TermOrdering& ord) const {
  std::vector<std::pair<Term, FieldElement>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
  return out;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [t, c] : terms_) d = std::max(d, t.degree());
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [t, c] : terms_) d = std::max(d, t[var]);
  return d;
}

bool Polynomial::is_univariate_in(std::size_t var) const {
  for (const auto& [t, c] : terms_)
    for (std::size_t i = 0; i < t.size(); ++i)
      if (i != var && t[i] != 0) return false;
  return true;
}

bool Polynomial::involves(std::size_t var) const {
  for (const auto& [t, c] : terms_)
    if (t[var] != 0) return true;
  return false;
}

FieldElement Polynomial::evaluate(const std::vector<FieldElement>& point) const {
  if (point.size() != nvars()) fail(ErrorKind::DimensionMismatch, "point has the wrong number of coordinates");
  FieldElement sum = ring_->zero();
  for (const auto& [t, c] : terms_) {
    FieldElement v = c;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::uint32_t k = 0; k < t[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

void Polynomial::check_ring(const Polynomial& rhs) const {
  if (!same_ring(ring_, rhs.ring_)) fail(ErrorKind::RingMismatch, "polynomials live in different rings");
}

void Polynomial::add_term(const Term& t, const FieldElement& c) {
  if (c.is_zero()) return;
  if (t.size() != ring_->nvars()) fail(ErrorKind::DimensionMismatch, "term length differs from ring");
  if (c.field() != ring_->field()) fail(ErrorKind::FieldMismatch, "coefficient outside the ring's field");
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_ring(rhs);
  for (const auto& [t, c] : rhs.terms_) add_term(t, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_ring(rhs);
  for (const auto& [t, c] : rhs.terms_) add_term(t, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial out(a.ring_);
  for (const auto& [s, c] : a.terms_)
    for (const auto& [t, d] : b.terms_) out.add_term(s * t, c * d);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  for (const auto& [t, c] : terms_) out.terms_.emplace(t, -c);
  return out;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  for (const auto& [t, d] : terms_) out.terms_.emplace(t, d * c);
  return out;
}

Polynomial Polynomial::times_term(const Term& m, const FieldElement& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  for (const auto& [t, d] : terms_) out.terms_.emplace(t * m, d * c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, ring_->one());
  Polynomial base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string Polynomial::to_string(const TermOrdering& ord) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : sorted_terms(ord)) {
    bool negative = c.is_negative();
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    FieldElement mag = c.abs();
    if (t.is_one())
      out += mag.to_string();
    else if (mag.is_one())
      out += t.to_string(ring_->names());
    else
      out += mag.to_string() + "*" + t.to_string(ring_->names());
  }
  return out;
}

std::string Polynomial::to_string() const { return to_string(TermOrdering::degrevlex(nvars())); }

// ---------------------------------------------------------------------------
// Parser.  expr := [+|-] product {(+|-) product}; product := power {* power};
// power := atom [^ nat]; atom := literal | name | ( expr ).  Two atoms may not
// be juxtaposed.

namespace {

class Parser {
 public:
  Parser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  Polynomial run() {
    skip();
    if (pos_ == text_.size()) error("empty polynomial");
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    Polynomial p = product();
    acc += negate ? -p : p;
    while (peek('+') || peek('-')) {
      negate = text_[pos_++] == '-';
      Polynomial q = product();
      acc += negate ? -q : q;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial p = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        p *= power();
        continue;
      }
      skip();
      if (pos_ < text_.size()) {
        char c = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(')
          error("implicit multiplication is not allowed; use '*'");
      }
      return p;
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected a natural exponent");
      if (pos_ - start > 5) error("exponent too large");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      if (e > 10000) error("exponent too large");
      return base.pow(e);
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    skip();
    if (pos_ == text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = digits();
      std::size_t save = pos_;
      skip();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip();
        std::string den = digits();
        if (den.empty()) error("expected a denominator");
        lit += "/" + den;
      } else {
        pos_ = save;
      }
      try {
        return Polynomial::constant(ring_, FieldElement::parse(ring_->field(), lit));
      } catch (const Error& e) {
        error(std::string("bad coefficient '") + lit + "': " + e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        error("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) { return Parser(std::move(ring), text).run(); }

// ---------------------------------------------------------------------------

bool is_factor_closed(const Polynomial& f) {
  if (f.is_zero()) return true;
  // The candidate must be the componentwise maximum of the support.
  Term top(f.nvars());
  for (const auto& [t, c] : f.terms()) top = top.lcm(t);
  return f.terms().contains(top);
}

std::optional<Polynomial> exact_quotient(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero polynomial");
  auto ord = TermOrdering::degrevlex(f.nvars());
  auto [lt_g, lc_g] = g.leading(ord);
  Polynomial q(f.ring()), r = f;
  while (!r.is_zero()) {
    auto [lt_r, lc_r] = r.leading(ord);
    if (!lt_g.divides(lt_r)) return std::nullopt;
    Term m = lt_g.quotient_of(lt_r);
    FieldElement c = lc_r / lc_g;
    q.add_term(m, c);
    r -= g.times_term(m, c);
  }
  return q;
}

LinearShift::LinearShift(std::vector<FieldElement> scales, std::vector<FieldElement> offsets)
    : scales_(std::move(scales)), offsets_(std::move(offsets)) {
  if (scales_.size() != offsets_.size()) fail(ErrorKind::DimensionMismatch, "shift scales and offsets differ in length");
  for (std::size_t i = 0; i < scales_.size(); ++i) {
    if (scales_[i].is_zero()) fail(ErrorKind::InvalidArgument, "linear shift scale must be nonzero");
    if (scales_[i].field() != offsets_[i].field()) fail(ErrorKind::FieldMismatch, "shift entries from different fields");
    if (scales_[i].field() != scales_[0].field()) fail(ErrorKind::FieldMismatch, "shift entries from different fields");
  }
}

LinearShift LinearShift::identity(const Ring& ring) {
  return LinearShift(std::vector<FieldElement>(ring.nvars(), ring.one()), std::vector<FieldElement>(ring.nvars(), ring.zero()));
}

LinearShift LinearShift::translation(std::vector<FieldElement> offsets) {
  std::vector<FieldElement> scales;
  for (const auto& b : offsets) scales.push_back(FieldElement::one(b.field()));
  return LinearShift(std::move(scales), std::move(offsets));
}

LinearShift LinearShift::inverse() const {
  std::vector<FieldElement> a, b;
  for (std::size_t i = 0; i < scales_.size(); ++i) {
    FieldElement inv = scales_[i].inverse();
    a.push_back(inv);
    b.push_back(-(inv * offsets_[i]));
  }
  return LinearShift(std::move(a), std::move(b));
}

std::string LinearShift::to_string(const Ring& ring) const {
  std::string out = "(";
  auto r = std::make_shared<const Ring>(ring);
  for (std::size_t i = 0; i < scales_.size(); ++i) {
    Polynomial img = Polynomial::variable(r, i).scaled(scales_[i]) + Polynomial::constant(r, offsets_[i]);
    out += (i ? ", " : "") + img.to_string();
  }
  return out + ")";
}

Polynomial apply_linear_shift(const Polynomial& f, const LinearShift& shift) {
  const auto& ring = f.ring();
  if (shift.nvars() != ring->nvars()) fail(ErrorKind::DimensionMismatch, "shift and ring differ in variable count");
  if (shift.nvars() && shift.scales()[0].field() != ring->field())
    fail(ErrorKind::FieldMismatch, "shift over " + shift.scales()[0].field().to_string() + " applied in " + ring->field().to_string());
  std::size_t n = ring->nvars();
  // powers[i][k] = (a_i x_i + b_i)^k, grown on demand.
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i)
    powers[i].push_back(Polynomial::constant(ring, ring->one()));
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    while (powers[i].size() <= k) {
      Polynomial image = Polynomial::variable(ring, i).scaled(shift.scales()[i]) + Polynomial::constant(ring, shift.offsets()[i]);
      powers[i].push_back(powers[i].back() * image);
    }
    return powers[i][k];
  };
  Polynomial out(ring);
  for (const auto& [t, c] : f.terms()) {
    Polynomial term = Polynomial::constant(ring, c);
    for (std::size_t i = 0; i < n; ++i)
      if (t[i]) term *= power_of(i, t[i]);
    out += term;
  }
  return out;
}

}  // namespace gbfan
