#include "gbfan/term.hpp"

#include <algorithm>

#include "gbfan/errors.hpp"

namespace gbfan {

Term Term::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Term t(nvars);
  t.exps_.at(index) = power;
  return t;
}

bool Term::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Term::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Term::divides(const Term& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Term Term::quotient_of(const Term& other) const {
  Term q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = other.exps_[i] - exps_[i];
  return q;
}

Term Term::lcm(const Term& other) const {
  Term r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Term Term::gcd(const Term& other) const {
  Term r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

bool Term::coprime(const Term& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

int Term::pure_power_variable() const {
  int found = -1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

Term operator*(const Term& a, const Term& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "term lengths differ");
  Term r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
  return r;
}

std::string Term::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : t.exponents()) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

}  // namespace gbfan
