#include "gbfan/monomial_ideal.hpp"

#include <algorithm>
#include <set>

#include "gbfan/errors.hpp"

namespace gbfan {

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Term> generators) : nvars_(nvars) {
  for (const auto& g : generators)
    if (g.size() != nvars) fail(ErrorKind::DimensionMismatch, "monomial generator has the wrong length");
  std::sort(generators.begin(), generators.end(), [](const Term& a, const Term& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  for (auto& g : generators) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Term& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end());
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

bool MonomialIdeal::contains(const Term& t) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Term& g) { return g.divides(t); });
}

bool MonomialIdeal::is_zero_dimensional() const {
  if (is_unit()) return true;
  std::vector<bool> seen(nvars_, false);
  for (const auto& g : gens_) {
    int v = g.pure_power_variable();
    if (v >= 0) seen[v] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<Term::Exponent> MonomialIdeal::max_exponents() const {
  std::vector<Term::Exponent> d(nvars_, 0);
  for (const auto& g : gens_)
    for (std::size_t i = 0; i < nvars_; ++i) d[i] = std::max(d[i], g[i]);
  return d;
}

std::vector<Term> MonomialIdeal::order_ideal() const {
  if (!is_zero_dimensional()) fail(ErrorKind::InfiniteOrderIdeal, "the monomial ideal is not zero-dimensional");
  std::set<Term> seen;
  std::vector<Term> frontier;
  Term one = Term::one(nvars_);
  if (!contains(one)) {
    seen.insert(one);
    frontier.push_back(one);
  }
  while (!frontier.empty()) {
    Term t = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i < nvars_; ++i) {
      Term u = t;
      ++u[i];
      if (!contains(u) && seen.insert(u).second) frontier.push_back(u);
    }
  }
  return {seen.begin(), seen.end()};
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars_ != b.nvars_) fail(ErrorKind::DimensionMismatch, "monomial ideals in different rings");
  std::vector<Term> g = a.gens_;
  g.insert(g.end(), b.gens_.begin(), b.gens_.end());
  return MonomialIdeal(a.nvars_, std::move(g));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars_ != b.nvars_) fail(ErrorKind::DimensionMismatch, "monomial ideals in different rings");
  std::vector<Term> g;
  for (const auto& s : a.gens_)
    for (const auto& t : b.gens_) g.push_back(s.lcm(t));
  return MonomialIdeal(a.nvars_, std::move(g));
}

std::string MonomialIdeal::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? ", " : "") + gens_[i].to_string(names);
  return out;
}

}  // namespace gbfan
