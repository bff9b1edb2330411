#include "gbfan/field.hpp"

#include <cctype>

#include "gbfan/errors.hpp"

namespace gbfan {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    fail(ErrorKind::InvalidArgument, "characteristic " + std::to_string(p) + " is not a prime below 2^31");
  FieldSpec f;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "QQ" || s == "Q") return rationals();
  std::string_view body;
  if (s.starts_with("GF(") && s.ends_with(")"))
    body = std::string_view(s).substr(3, s.size() - 4);
  else if (s.starts_with("ZZ/(") && s.ends_with(")"))
    body = std::string_view(s).substr(4, s.size() - 5);
  else
    fail(ErrorKind::ParseError, "unknown field '" + std::string(text) + "' (expected QQ or GF(p))");
  if (body.empty() || body.size() > 10) fail(ErrorKind::ParseError, "bad characteristic in '" + std::string(text) + "'");
  std::uint64_t p = 0;
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c))) fail(ErrorKind::ParseError, "bad characteristic in '" + std::string(text) + "'");
    p = p * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (p >= (1ull << 31) || !is_prime(static_cast<std::uint32_t>(p)))
    fail(ErrorKind::ParseError, "characteristic " + std::string(body) + " is not a prime below 2^31");
  return prime(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  return p_ == 0 ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

FieldElement::FieldElement(const FieldSpec& field, long value) : p_(field.characteristic()) {
  if (p_ == 0) {
    q_ = value;
  } else {
    long r = value % static_cast<long>(p_);
    if (r < 0) r += p_;
    r_ = static_cast<std::uint32_t>(r);
  }
}

FieldElement::FieldElement(const FieldSpec& field, const mpz_class& value) : p_(field.characteristic()) {
  if (p_ == 0)
    q_ = value;
  else
    r_ = reduce(value, p_);
}

FieldElement FieldElement::rational(const mpq_class& value) {
  FieldElement e;
  e.q_ = value;
  e.q_.canonicalize();
  return e;
}

FieldElement FieldElement::rational(long num, long den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return rational(q);
}

FieldElement FieldElement::parse(const FieldSpec& field, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto valid_int = [](std::string_view v) {
    std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    return true;
  };
  auto to_mpz = [](std::string v) {
    if (!v.empty() && v[0] == '+') v.erase(0, 1);
    return mpz_class(v, 10);
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    fail(ErrorKind::ParseError, "bad coefficient literal '" + std::string(text) + "'");
  mpz_class n = to_mpz(num), d = to_mpz(den);
  if (d == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  if (field.is_rationals()) return rational(mpq_class(n, d));
  FieldElement dn(field, d);
  if (dn.is_zero()) fail(ErrorKind::DivisionByZero, "denominator vanishes in " + field.to_string());
  return FieldElement(field, n) / dn;
}

FieldSpec FieldElement::field() const { return p_ == 0 ? FieldSpec::rationals() : FieldSpec::prime(p_); }

bool FieldElement::is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }

bool FieldElement::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

bool FieldElement::is_negative() const { return p_ == 0 && sgn(q_) < 0; }

void FieldElement::check_same(const FieldElement& rhs) const {
  if (p_ != rhs.p_)
    fail(ErrorKind::FieldMismatch, "operands live in " + field().to_string() + " and " + rhs.field().to_string());
}

FieldElement FieldElement::operator-() const {
  FieldElement e = *this;
  if (p_ == 0)
    e.q_ = -q_;
  else
    e.r_ = r_ == 0 ? 0 : p_ - r_;
  return e;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same(rhs);
  if (p_ == 0)
    q_ += rhs.q_;
  else
    r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + rhs.r_) % p_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same(rhs);
  if (p_ == 0)
    q_ -= rhs.q_;
  else
    r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + p_ - rhs.r_) % p_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same(rhs);
  if (p_ == 0)
    q_ *= rhs.q_;
  else
    r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * rhs.r_ % p_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same(rhs);
  return *this *= rhs.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  FieldElement e = *this;
  if (p_ == 0)
    e.q_ = 1 / q_;
  else
    e.r_ = pow_mod(r_, p_ - 2, p_);
  return e;
}

FieldElement FieldElement::abs() const { return is_negative() ? -*this : *this; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  if (a.p_ != b.p_) return a.p_ <=> b.p_;
  if (a.p_ != 0) return a.r_ <=> b.r_;
  int c = cmp(a.q_, b.q_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string FieldElement::to_string() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

FieldElement nat_embed(unsigned long n, const FieldSpec& field) {
  return FieldElement(field, mpz_class(n));
}

}  // namespace gbfan
