#include "gbfan/ordering.hpp"

#include <gmpxx.h>

#include <cctype>
#include <sstream>

#include "gbfan/errors.hpp"

namespace gbfan {

namespace {

using QRow = std::vector<mpq_class>;

mpq_class dot(const QRow& a, const QRow& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Gram-Schmidt over Q; dependent rows vanish and are dropped.  The surviving
// vectors, scaled to primitive integers, determine the ordering.
std::vector<std::vector<mpz_class>> orthogonal_flag(const std::vector<TermOrdering::Row>& rows, std::size_t n) {
  std::vector<QRow> basis;
  std::vector<std::vector<mpz_class>> out;
  for (const auto& row : rows) {
    QRow v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = mpq_class(static_cast<long>(row[i]));
    for (const auto& b : basis) {
      mpq_class c = dot(v, b) / dot(b, b);
      for (std::size_t i = 0; i < n; ++i) v[i] -= c * b[i];
    }
    bool zero = true;
    for (auto& x : v) zero = zero && sgn(x) == 0;
    if (zero) continue;
    mpz_class l = 1, g = 0;
    for (auto& x : v) l = lcm(l, x.get_den());
    std::vector<mpz_class> iv(n);
    for (std::size_t i = 0; i < n; ++i) {
      iv[i] = v[i].get_num() * (l / v[i].get_den());
      g = gcd(g, iv[i]);
    }
    for (auto& x : iv) x /= g;
    out.push_back(std::move(iv));
    basis.push_back(std::move(v));
  }
  return out;
}

TermOrdering::Row parse_row(std::string_view text) {
  TermOrdering::Row row;
  std::string cur;
  auto flush = [&] {
    std::string s;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(ErrorKind::ParseError, "empty weight entry");
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "bad weight entry '" + s + "'");
    }
    if (pos != s.size()) fail(ErrorKind::ParseError, "bad weight entry '" + s + "'");
    row.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      cur.push_back(c);
  }
  flush();
  return row;
}

}  // namespace

TermOrdering::TermOrdering(Kind kind, std::vector<Row> rows, std::size_t nvars)
    : kind_(kind), rows_(std::move(rows)), nvars_(nvars) {
  for (const auto& r : rows_) {
    if (r.size() != nvars_) fail(ErrorKind::DimensionMismatch, "ordering row length differs from variable count");
    for (auto x : r)
      if (x > (std::int64_t{1} << 48) || x < -(std::int64_t{1} << 48))
        fail(ErrorKind::InvalidOrdering, "weight entry too large");
  }
  for (std::size_t j = 0; j < nvars_; ++j) {
    std::int64_t first = 0;
    for (const auto& r : rows_)
      if (r[j] != 0) {
        first = r[j];
        break;
      }
    if (first <= 0)
      fail(ErrorKind::InvalidOrdering, "column " + std::to_string(j) + " has no positive leading entry, so 1 is not minimal");
  }
  auto flag = orthogonal_flag(rows_, nvars_);
  if (flag.size() != nvars_) fail(ErrorKind::InvalidOrdering, "weight matrix has rank below the number of variables");
  std::ostringstream key;
  for (const auto& r : flag) {
    for (const auto& x : r) key << x.get_str() << ',';
    key << ';';
  }
  key_ = key.str();
}

TermOrdering TermOrdering::lex(std::size_t n) {
  std::vector<Row> rows(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return TermOrdering(Kind::Lex, std::move(rows), n);
}

TermOrdering TermOrdering::deglex(std::size_t n) {
  std::vector<Row> rows;
  rows.emplace_back(n, 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Row r(n, 0);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  return TermOrdering(Kind::DegLex, std::move(rows), n);
}

namespace {

std::vector<TermOrdering::Row> degrevlex_rows(std::size_t n) {
  std::vector<TermOrdering::Row> rows;
  rows.emplace_back(n, 1);
  for (std::size_t k = n; k-- > 1;) {
    TermOrdering::Row r(n, 0);
    r[k] = -1;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

TermOrdering TermOrdering::degrevlex(std::size_t n) { return TermOrdering(Kind::DegRevLex, degrevlex_rows(n), n); }

TermOrdering TermOrdering::weight(Row w) {
  std::size_t n = w.size();
  std::vector<Row> rows{std::move(w)};
  for (auto& r : degrevlex_rows(n)) rows.push_back(std::move(r));
  return TermOrdering(Kind::Weight, std::move(rows), n);
}

TermOrdering TermOrdering::matrix(std::vector<Row> rows) {
  if (rows.empty()) fail(ErrorKind::InvalidOrdering, "empty weight matrix");
  std::size_t n = rows.front().size();
  return TermOrdering(Kind::Matrix, std::move(rows), n);
}

TermOrdering TermOrdering::refined(std::vector<Row> leading_rows, std::size_t n) {
  for (auto& r : degrevlex_rows(n)) leading_rows.push_back(std::move(r));
  return TermOrdering(Kind::Matrix, std::move(leading_rows), n);
}

TermOrdering TermOrdering::parse(std::string_view spec, std::size_t n) {
  std::string s(spec);
  if (s == "lex") return lex(n);
  if (s == "deglex") return deglex(n);
  if (s == "degrevlex") return degrevlex(n);
  if (s.starts_with("weight:")) {
    Row w = parse_row(std::string_view(s).substr(7));
    if (w.size() != n) fail(ErrorKind::ParseError, "weight vector needs " + std::to_string(n) + " entries");
    return weight(std::move(w));
  }
  if (s.starts_with("matrix:")) {
    std::vector<Row> rows;
    std::string_view body = std::string_view(s).substr(7);
    std::size_t start = 0;
    while (start <= body.size()) {
      auto semi = body.find(';', start);
      auto piece = body.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
      Row r = parse_row(piece);
      if (r.size() != n) fail(ErrorKind::ParseError, "matrix row needs " + std::to_string(n) + " entries");
      rows.push_back(std::move(r));
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    return matrix(std::move(rows));
  }
  fail(ErrorKind::ParseError, "unknown ordering '" + s + "'");
}

int TermOrdering::compare(const Term& s, const Term& t) const {
  if (s.size() != nvars_ || t.size() != nvars_) fail(ErrorKind::DimensionMismatch, "term length differs from ordering");
  for (const auto& row : rows_) {
    __int128 acc = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (row[i]) acc += static_cast<__int128>(row[i]) * (static_cast<std::int64_t>(s[i]) - static_cast<std::int64_t>(t[i]));
    if (acc != 0) return acc > 0 ? 1 : -1;
  }
  return 0;
}

std::string TermOrdering::to_string() const {
  auto row_str = [](const Row& r) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + std::to_string(r[i]);
    return out;
  };
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::DegLex: return "deglex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Weight: return "weight:" + row_str(rows_.front());
    case Kind::Matrix: {
      std::string out = "matrix:";
      for (std::size_t i = 0; i < rows_.size(); ++i) out += (i ? ";" : "") + row_str(rows_[i]);
      return out;
    }
  }
  return "matrix";
}

}  // namespace gbfan
