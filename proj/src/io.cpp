#include "gbfan/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"

#include "gbfan/errors.hpp"

namespace gbfan {

namespace {

std::string trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

// x2 < x10: digit runs compare by value.
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      auto na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = i2;
      j = j2;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trimmed(item);
    if (item.empty()) fail(ErrorKind::ParseError, "empty variable name");
    out.push_back(item);
  }
  return out;
}

}  // namespace

std::vector<std::string> identifiers_in(std::string_view text) {
  std::set<std::string> found;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      found.emplace(text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  std::vector<std::string> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), natural_less);
  return out;
}

IdealFile parse_ideal_file(std::string_view text, std::optional<FieldSpec> field, std::optional<std::vector<std::string>> vars) {
  std::optional<FieldSpec> header_field;
  std::optional<std::vector<std::string>> header_vars;
  std::optional<std::string> order;
  std::vector<std::string> items;
  std::string body;
  std::stringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto t = trimmed(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      auto rest = trimmed(std::string_view(t).substr(1));
      auto colon = rest.find(':');
      if (colon == std::string::npos) continue;
      auto key = trimmed(std::string_view(rest).substr(0, colon));
      auto value = trimmed(std::string_view(rest).substr(colon + 1));
      if (key == "field") header_field = FieldSpec::parse(value);
      else if (key == "vars") header_vars = split_names(value);
      else if (key == "order") order = value;
      continue;
    }
    std::stringstream parts(t);
    std::string item;
    while (std::getline(parts, item, ',')) {
      item = trimmed(item);
      if (item.empty()) fail(ErrorKind::ParseError, "empty polynomial in list");
      body += item + "\n";
      items.push_back(item);
    }
  }
  FieldSpec f = field ? *field : header_field.value_or(FieldSpec::rationals());
  std::vector<std::string> names = vars ? *vars : header_vars ? *header_vars : identifiers_in(body);
  if (names.empty()) names = {"x"};
  auto ring = Ring::make(f, names);
  IdealFile out{ring, {}, order};
  for (const auto& item : items) out.polynomials.push_back(Polynomial::parse(ring, item));
  return out;
}

MonomialIdeal to_monomial_ideal(const std::vector<Polynomial>& polys, std::size_t nvars) {
  std::vector<Term> gens;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (p.size() != 1) fail(ErrorKind::InvalidArgument, "'" + p.to_string() + "' is not a monomial");
    gens.push_back(p.terms().begin()->first);
  }
  return MonomialIdeal(nvars, std::move(gens));
}

std::string fan_to_text(const GroebnerFan& fan, const Ring& ring) {
  std::ostringstream out;
  std::size_t k = 0;
  for (const auto& c : fan.cones()) {
    out << "cone " << ++k << "\n";
    out << "  lt_ideal: <" << c.lt_ideal.to_string(ring.names()) << ">\n";
    out << "  " << "order: " << c.basis.ordering().to_string() << "\n";
    out << "  reduced_gb:\n";
    for (const auto& g : c.basis.elements()) out << "    " << g.to_string(c.basis.ordering()) << "\n";
    out << "  inequalities: " << c.cone.to_string() << "\n";
  }
  out << "gfan_number: " << fan.size() << "\n";
  return out.str();
}

std::string fan_to_json(const GroebnerFan& fan, const Ring& ring) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = 1;
  j["field"] = ring.field().to_string();
  j["vars"] = ring.names();
  j["gfan_number"] = fan.size();
  ordered_json cones = ordered_json::array();
  for (const auto& c : fan.cones()) {
    ordered_json e;
    ordered_json lt = ordered_json::array();
    for (const auto& t : c.lt_ideal.generators()) lt.push_back(t.to_string(ring.names()));
    e["lt_ideal"] = lt;
    e["order"] = c.basis.ordering().to_string();
    ordered_json gb = ordered_json::array();
    for (const auto& g : c.basis.elements()) gb.push_back(g.to_string(c.basis.ordering()));
    e["reduced_gb"] = gb;
    e["cone"] = c.cone.inequalities();
    cones.push_back(e);
  }
  j["cones"] = cones;
  return j.dump(2) + "\n";
}

GroebnerFan fan_from_json(std::string_view json, RingPtr* ring_out) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("fan json: ") + e.what());
  }
  try {
    if (j.at("schema").get<int>() != 1) fail(ErrorKind::ParseError, "unsupported fan json schema");
    auto ring = Ring::make(FieldSpec::parse(j.at("field").get<std::string>()), j.at("vars").get<std::vector<std::string>>());
    std::vector<MarkedReducedGB> cones;
    for (const auto& c : j.at("cones")) {
      auto ord = TermOrdering::parse(c.at("order").get<std::string>(), ring->nvars());
      std::vector<Polynomial> elems;
      for (const auto& g : c.at("reduced_gb")) elems.push_back(Polynomial::parse(ring, g.get<std::string>()));
      cones.push_back(mark(ReducedGB(ord, ring, std::move(elems))));
    }
    if (ring_out) *ring_out = ring;
    return GroebnerFan(ring->nvars(), std::move(cones));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("fan json: ") + e.what());
  }
}

}  // namespace gbfan
