#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gbfan/errors.hpp"
#include "gbfan/fan.hpp"
#include "gbfan/io.hpp"
#include "gbfan/points.hpp"
#include "gbfan/sampling.hpp"

namespace testing {

using namespace gbfan;

inline RingPtr ring(const std::string& field, std::vector<std::string> names) {
  return Ring::make(FieldSpec::parse(field), std::move(names));
}

inline Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

inline std::vector<Polynomial> polys(const RingPtr& r, const std::vector<std::string>& xs) {
  std::vector<Polynomial> out;
  for (const auto& s : xs) out.push_back(P(r, s));
  return out;
}

inline Ideal ideal(const RingPtr& r, const std::vector<std::string>& xs) { return Ideal(r, polys(r, xs)); }

inline std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

// Same polynomials, order ignored.
inline bool same_set(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) { return strings(a) == strings(b); }

inline std::vector<std::string> term_strings(const std::vector<Term>& ts, const Ring& r) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(t.to_string(r.names()));
  return out;
}

inline Term T(const RingPtr& r, const std::string& s) {
  auto p = P(r, s);
  return p.terms().begin()->first;
}

inline MonomialIdeal M(const RingPtr& r, const std::vector<std::string>& xs) {
  std::vector<Term> ts;
  for (const auto& s : xs) ts.push_back(T(r, s));
  return MonomialIdeal(r->nvars(), ts);
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;  // sentinel: nothing thrown
}

// Independent oracle: iterated intersection of the maximal ideals.
inline Ideal ideal_of_points_by_intersection(const PointSet& pts) {
  const auto& r = pts.ring();
  Ideal acc(r, {Polynomial::constant(r, r->one())});
  for (const auto& p : pts.points()) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < p.size(); ++i)
      gens.push_back(Polynomial::variable(r, i) - Polynomial::constant(r, p[i]));
    acc = ideal_intersection(acc, Ideal(r, gens));
  }
  return acc;
}

inline std::vector<std::vector<Term>> sorted_sets(std::vector<std::vector<Term>> sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace testing
