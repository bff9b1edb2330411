#include "gbfan/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gbfan/errors.hpp"

namespace gbfan {

namespace {

// Inequality with its Chernikov history: the set of original rows it was
// combined from.
struct Row {
  std::vector<mpq_class> a;
  mpq_class b;
  std::vector<std::uint64_t> history;
};

std::size_t popcount(const std::vector<std::uint64_t>& bits) {
  std::size_t c = 0;
  for (auto w : bits) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

// Scale so the coefficient vector is a primitive integer vector (b scales along).
void normalize(Row& r) {
  mpz_class l = 1;
  for (const auto& x : r.a) l = lcm(l, x.get_den());
  mpz_class g = 0;
  for (auto& x : r.a) {
    x *= l;
    g = gcd(g, x.get_num());
  }
  r.b *= l;
  if (g == 0) return;
  for (auto& x : r.a) x /= g;
  r.b /= g;
}

bool history_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

mpz_class ceil_div(const mpq_class& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c;
}

std::string direction_key(const Row& r, std::size_t dim) {
  std::string k;
  for (std::size_t i = 0; i < dim; ++i) k += r.a[i].get_str() + ",";
  return k;
}

}  // namespace

std::optional<std::vector<mpq_class>> fourier_motzkin(std::vector<Inequality> system, std::size_t dim) {
  std::size_t words = (system.size() + 63) / 64;
  std::vector<Row> rows;
  for (std::size_t k = 0; k < system.size(); ++k) {
    if (system[k].a.size() != dim) fail(ErrorKind::DimensionMismatch, "inequality length differs from dimension");
    Row r{std::move(system[k].a), std::move(system[k].b), std::vector<std::uint64_t>(words, 0)};
    r.history[k / 64] |= std::uint64_t{1} << (k % 64);
    rows.push_back(std::move(r));
  }

  // stages[j] holds the system in variables 0..j-1 (after eliminating j..dim-1).
  std::vector<std::vector<Row>> stages(dim + 1);
  std::size_t eliminated = 0;
  for (std::size_t j = dim + 1; j-- > 0;) {
    // Clean the current system: drop trivial rows, detect contradictions,
    // and drop a row when another with the same direction is at least as
    // strong and was built from a subset of its original rows.  Without the
    // subset condition the history pruning below loses rows it relies on.
    std::map<std::string, std::vector<Row>> by_dir;
    for (auto& r : rows) {
      bool zero = std::all_of(r.a.begin(), r.a.begin() + static_cast<std::ptrdiff_t>(j), [](const mpq_class& x) { return sgn(x) == 0; });
      if (zero) {
        if (sgn(r.b) > 0) return std::nullopt;
        continue;
      }
      normalize(r);
      auto& bucket = by_dir[direction_key(r, j)];
      if (std::any_of(bucket.begin(), bucket.end(), [&](const Row& s) { return s.b >= r.b && history_subset(s.history, r.history); }))
        continue;
      std::erase_if(bucket, [&](const Row& s) { return r.b >= s.b && history_subset(r.history, s.history); });
      bucket.push_back(std::move(r));
    }
    rows.clear();
    for (auto& [k, bucket] : by_dir)
      for (auto& r : bucket) rows.push_back(std::move(r));
    stages[j] = rows;
    if (j == 0) break;

    std::size_t v = j - 1;
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      int s = sgn(r.a[v]);
      if (s > 0)
        pos.push_back(r);
      else if (s < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    ++eliminated;
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        std::vector<std::uint64_t> h(words);
        for (std::size_t w = 0; w < words; ++w) h[w] = p.history[w] | q.history[w];
        if (popcount(h) > eliminated + 1) continue;  // Chernikov: redundant
        mpq_class cp = -q.a[v], cq = p.a[v];
        Row c{std::vector<mpq_class>(dim), cp * p.b + cq * q.b, std::move(h)};
        for (std::size_t i = 0; i < j; ++i) c.a[i] = cp * p.a[i] + cq * q.a[i];
        next.push_back(std::move(c));
      }
    }
    rows = std::move(next);
  }

  // Back-substitution: choose each variable inside its bounds.
  std::vector<mpq_class> w(dim, 0);
  for (std::size_t j = 1; j <= dim; ++j) {
    std::size_t v = j - 1;
    std::optional<mpq_class> lo, hi;
    for (const auto& r : stages[j]) {
      int s = sgn(r.a[v]);
      if (s == 0) continue;
      mpq_class rest = r.b;
      for (std::size_t i = 0; i < v; ++i) rest -= r.a[i] * w[i];
      mpq_class bound = rest / r.a[v];
      if (s > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) {
      if (*lo > *hi) fail(ErrorKind::Internal, "Fourier-Motzkin back-substitution found an empty interval");
      mpz_class c = ceil_div(*lo);
      w[v] = (mpq_class(c) <= *hi) ? mpq_class(c) : (*lo + *hi) / 2;
    } else if (lo) {
      w[v] = mpq_class(ceil_div(*lo));
    } else if (hi) {
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
      w[v] = mpq_class(f);
    }
  }
  return w;
}

namespace cone_math {

namespace {

Inequality homogeneous(const IntVector& v, long rhs) {
  Inequality q;
  for (auto x : v) q.a.emplace_back(static_cast<long>(x));
  q.b = rhs;
  return q;
}

Inequality unit(std::size_t i, std::size_t dim, long rhs) {
  Inequality q;
  q.a.assign(dim, 0);
  q.a[i] = 1;
  q.b = rhs;
  return q;
}

std::optional<IntVector> to_primitive(const std::optional<std::vector<mpq_class>>& w) {
  if (!w) return std::nullopt;
  mpz_class l = 1, g = 0;
  for (const auto& x : *w) l = lcm(l, x.get_den());
  std::vector<mpz_class> iv;
  for (const auto& x : *w) {
    iv.push_back(x.get_num() * (l / x.get_den()));
    g = gcd(g, iv.back());
  }
  IntVector out;
  for (auto& x : iv) {
    if (g != 0) x /= g;
    if (!x.fits_slong_p()) fail(ErrorKind::Internal, "weight vector does not fit in 64 bits");
    out.push_back(x.get_si());
  }
  return out;
}

}  // namespace

IntVector primitive(IntVector v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

std::optional<IntVector> strictly_positive_witness(const std::vector<IntVector>& strict, std::size_t dim) {
  // v >= u componentwise makes v.w > 0 follow from u.w > 0 on the orthant.
  std::vector<IntVector> dirs;
  for (const auto& v : strict) dirs.push_back(primitive(v));
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  std::vector<IntVector> kept;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    bool dominated = false;
    for (std::size_t j = 0; j < dirs.size() && !dominated; ++j) {
      if (j == k) continue;
      bool ge = true;
      for (std::size_t i = 0; i < dim && ge; ++i) ge = dirs[k][i] >= dirs[j][i];
      dominated = ge;
    }
    if (!dominated) kept.push_back(dirs[k]);
  }
  if (kept.empty()) return IntVector(dim, 1);

  // Small weights first; Fourier-Motzkin only when none of them works.
  IntVector trial(dim, 1);
  while (true) {
    bool ok = std::all_of(kept.begin(), kept.end(), [&](const IntVector& v) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < dim; ++i) s += v[i] * trial[i];
      return s > 0;
    });
    if (ok) return trial;
    std::size_t i = 0;
    while (i < dim && trial[i] == 4) trial[i++] = 1;
    if (i == dim) break;
    ++trial[i];
  }

  std::vector<Inequality> sys;
  for (const auto& v : kept) sys.push_back(homogeneous(v, 1));
  for (std::size_t i = 0; i < dim; ++i) sys.push_back(unit(i, dim, 1));
  return to_primitive(fourier_motzkin(std::move(sys), dim));
}

bool implied(const IntVector& candidate, const std::vector<IntVector>& others, std::size_t dim) {
  std::vector<Inequality> sys;
  for (const auto& v : others) sys.push_back(homogeneous(v, 0));
  for (std::size_t i = 0; i < dim; ++i) sys.push_back(unit(i, dim, 0));
  IntVector neg(candidate);
  for (auto& x : neg) x = -x;
  sys.push_back(homogeneous(neg, 1));
  return !fourier_motzkin(std::move(sys), dim).has_value();
}

std::optional<IntVector> facet_interior_point(const IntVector& facet, const std::vector<IntVector>& others, std::size_t dim) {
  std::vector<Inequality> sys;
  IntVector neg(facet);
  for (auto& x : neg) x = -x;
  sys.push_back(homogeneous(facet, 0));
  sys.push_back(homogeneous(neg, 0));
  for (const auto& v : others) sys.push_back(homogeneous(v, 1));
  for (std::size_t i = 0; i < dim; ++i) sys.push_back(unit(i, dim, 1));
  return to_primitive(fourier_motzkin(std::move(sys), dim));
}

}  // namespace cone_math

}  // namespace gbfan
