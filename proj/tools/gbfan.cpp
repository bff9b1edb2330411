// gbfan: command-line front end.  Exit codes: 0 ok, 2 parse/usage,
// 3 mathematical domain error, 4 internal error.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gbfan/errors.hpp"
#include "gbfan/fan.hpp"
#include "gbfan/io.hpp"
#include "gbfan/points.hpp"
#include "gbfan/sampling.hpp"

using namespace gbfan;
using nlohmann::ordered_json;

namespace {

struct Globals {
  std::string field;
  std::string vars;
  std::string order;
  std::string format = "text";
  std::uint64_t seed = 1;
};

std::string slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::optional<FieldSpec> field_flag(const Globals& g) {
  if (g.field.empty()) return std::nullopt;
  return FieldSpec::parse(g.field);
}

std::optional<std::vector<std::string>> vars_flag(const Globals& g) {
  if (g.vars.empty()) return std::nullopt;
  std::vector<std::string> out;
  std::stringstream in(g.vars);
  std::string v;
  while (std::getline(in, v, ',')) out.push_back(v);
  return out;
}

bool json(const Globals& g) { return g.format == "json"; }

ordered_json header(const Ring& ring) {
  ordered_json j;
  j["schema"] = 1;
  j["field"] = ring.field().to_string();
  j["vars"] = ring.names();
  return j;
}

TermOrdering pick_order(const Globals& g, const RingPtr& ring, const std::optional<std::string>& from_file) {
  if (!g.order.empty()) return TermOrdering::parse(g.order, ring->nvars());
  if (from_file) return TermOrdering::parse(*from_file, ring->nvars());
  return TermOrdering::degrevlex(ring->nvars());
}

// An ideal either from an ideal file or, with --points, from a points file.
struct LoadedIdeal {
  Ideal ideal;
  std::optional<std::string> order;
};

LoadedIdeal load_ideal(const Globals& g, const std::string& path, bool as_points) {
  auto text = slurp(path);
  if (as_points) return {ideal_of_points(parse_points(text, field_flag(g), vars_flag(g))).ideal(), std::nullopt};
  auto file = parse_ideal_file(text, field_flag(g), vars_flag(g));
  return {file.ideal(), file.order};
}

std::vector<std::string> printed(const std::vector<Polynomial>& polys, const TermOrdering& ord) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string(ord));
  return out;
}

std::vector<std::string> printed_terms(const std::vector<Term>& terms, const Ring& ring) {
  std::vector<std::string> out;
  for (const auto& t : terms) out.push_back(t.to_string(ring.names()));
  return out;
}

void emit_polys(const Globals& g, const Ring& ring, const std::string& key, const std::vector<std::string>& lines,
                ordered_json extra = ordered_json::object()) {
  if (json(g)) {
    auto j = header(ring);
    j[key] = lines;
    for (auto& [k, v] : extra.items()) j[k] = v;
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& l : lines) std::cout << l << "\n";
  for (auto& [k, v] : extra.items()) {
    std::cout << "# " << k << ": ";
    if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
    } else {
      std::cout << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    std::cout << "\n";
  }
}

std::string staircase_diagram(const MonomialIdeal& m) {
  auto inside = m.order_ideal();
  std::size_t w = 0, h = 0;
  for (const auto& t : m.generators()) {
    w = std::max<std::size_t>(w, t[0] + 1);
    h = std::max<std::size_t>(h, t[1] + 1);
  }
  std::ostringstream out;
  for (std::size_t y = h; y-- > 0;) {
    for (std::size_t x = 0; x < w; ++x) {
      Term t{static_cast<Term::Exponent>(x), static_cast<Term::Exponent>(y)};
      const char* mark = ".";
      if (std::find(inside.begin(), inside.end(), t) != inside.end()) mark = "●";
      else if (std::find(m.generators().begin(), m.generators().end(), t) != m.generators().end()) mark = "○";
      out << (x ? " " : "") << mark;
    }
    out << "\n";
  }
  return out.str();
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
      return 2;
    case ErrorKind::Internal:
      return 4;
    default:
      return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner fans, ideals of points, distractions and complementary ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "QQ or GF(p); overrides file headers");
  app.add_option("--vars", g.vars, "comma separated variable names");
  app.add_option("--order", g.order, "lex, deglex, degrevlex, weight:w1,..., matrix:r1;r2;...");
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for randomised commands");

  std::string file, file2, poly_text, scales, offsets, subset;
  bool as_points = false, diagram = false;
  std::size_t count = 20;
  std::size_t max_mult = 8;

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  gb->add_option("file", file, "ideal file")->required();
  gb->add_flag("--points", as_points, "input is a points file");

  auto* fan = app.add_subcommand("fan", "all reduced bases and cones of the Groebner fan");
  fan->add_option("file", file, "ideal file")->required();
  fan->add_flag("--points", as_points, "input is a points file");

  auto* pts = app.add_subcommand("points", "vanishing ideal of a point set");
  pts->add_option("file", file, "points file")->required();

  auto* distract = app.add_subcommand("distract", "distraction of a monomial ideal");
  distract->add_option("monomials", file, "monomial ideal file")->required();
  distract->add_option("spec", file2, "per-variable constants, `x: c1, c2, ...`")->required();

  auto* natural = app.add_subcommand("natural", "natural distraction of a monomial ideal");
  natural->add_option("monomials", file, "monomial ideal file")->required();

  auto* stair = app.add_subcommand("staircase", "staircase points of a monomial ideal");
  stair->add_option("monomials", file, "monomial ideal file")->required();
  stair->add_flag("--diagram", diagram, "draw the two-variable staircase");

  auto* mg = app.add_subcommand("mgrid", "maximal grid ideal contained in an ideal");
  mg->add_option("file", file, "ideal file")->required();
  mg->add_flag("--points", as_points, "input is a points file");

  auto* comp = app.add_subcommand("complement", "complementary ideal J : I with certificate");
  comp->add_option("grid", file, "grid spec file (or grid points file with --subset)")->required();
  comp->add_option("ideal", file2, "ideal file for I");
  comp->add_option("--subset", subset, "points file with Y; the first file then holds the grid points");

  auto* shift = app.add_subcommand("shift", "apply x_i -> a_i x_i + b_i to the generators");
  shift->add_option("file", file, "ideal file")->required();
  shift->add_option("--scales", scales, "a_1,...,a_n (default all 1)");
  shift->add_option("--offsets", offsets, "b_1,...,b_n (default all 0)");

  auto* models = app.add_subcommand("models", "normal forms of f over the whole fan");
  models->add_option("file", file, "ideal file")->required();
  models->add_option("--poly", poly_text, "the polynomial f")->required();
  models->add_flag("--points", as_points, "input is a points file");

  auto* unique = app.add_subcommand("unique", "factor-closed test for a unique reduced basis");
  unique->add_option("file", file, "ideal file")->required();
  unique->add_flag("--points", as_points, "input is a points file");

  auto* check = app.add_subcommand("check", "compare fan enumeration with the basic-set oracle on random ideals");
  check->add_option("--count", count, "number of random ideals");
  check->add_option("--max-multiplicity", max_mult, "largest multiplicity sampled");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gb->parsed()) {
      auto in = load_ideal(g, file, as_points);
      auto ord = pick_order(g, in.ideal.ring(), in.order);
      const auto& basis = in.ideal.reduced_basis(ord);
      emit_polys(g, *in.ideal.ring(), "reduced_gb", printed(basis.elements(), ord),
                 json(g) ? ordered_json{{"order", ord.to_string()}} : ordered_json::object());
    } else if (fan->parsed()) {
      auto in = load_ideal(g, file, as_points);
      auto f = enumerate_fan(in.ideal);
      std::cout << (json(g) ? fan_to_json(f, *in.ideal.ring()) : fan_to_text(f, *in.ideal.ring()));
    } else if (pts->parsed()) {
      auto set = parse_points(slurp(file), field_flag(g), vars_flag(g));
      auto ord = pick_order(g, set.ring(), std::nullopt);
      auto res = ideal_of_points(set, ord);
      emit_polys(g, *set.ring(), "reduced_gb", printed(res.basis.elements(), ord),
                 ordered_json{{"quotient_basis", printed_terms(res.quotient_basis, *set.ring())}});
    } else if (distract->parsed()) {
      auto in = parse_ideal_file(slurp(file), field_flag(g), vars_flag(g));
      auto m = to_monomial_ideal(in.polynomials, in.ring->nvars());
      auto spec_grid = parse_grid_spec(slurp(file2), in.ring->field(), in.ring->names());
      auto d = distraction_ideal(in.ring, m, DistractionSpec{spec_grid.roots()});
      emit_polys(g, *in.ring, "generators", printed(d.generators(), TermOrdering::degrevlex(in.ring->nvars())));
    } else if (natural->parsed()) {
      auto in = parse_ideal_file(slurp(file), field_flag(g), vars_flag(g));
      auto d = natural_distraction(in.ring, to_monomial_ideal(in.polynomials, in.ring->nvars()));
      emit_polys(g, *in.ring, "generators", printed(d.generators(), TermOrdering::degrevlex(in.ring->nvars())));
    } else if (stair->parsed()) {
      auto in = parse_ideal_file(slurp(file), field_flag(g), vars_flag(g));
      auto m = to_monomial_ideal(in.polynomials, in.ring->nvars());
      auto set = staircase(m, in.ring);
      if (diagram && in.ring->nvars() != 2) fail(ErrorKind::InvalidArgument, "--diagram needs exactly two variables");
      if (json(g)) {
        auto j = header(*in.ring);
        ordered_json rows = ordered_json::array();
        for (const auto& p : set.points()) {
          ordered_json row = ordered_json::array();
          for (const auto& c : p) row.push_back(c.to_string());
          rows.push_back(row);
        }
        j["points"] = rows;
        if (diagram) j["diagram"] = staircase_diagram(m);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "# vars: ";
        for (std::size_t i = 0; i < in.ring->nvars(); ++i) std::cout << (i ? "," : "") << in.ring->names()[i];
        std::cout << "\n" << set.to_csv();
        if (diagram) std::cout << staircase_diagram(m);
      }
    } else if (mg->parsed()) {
      auto in = load_ideal(g, file, as_points);
      auto grid = mgrid(in.ideal);
      emit_polys(g, *in.ideal.ring(), "grid", printed(grid.polynomials(), TermOrdering::degrevlex(in.ideal.nvars())));
    } else if (comp->parsed()) {
      if (!subset.empty()) {
        auto x = parse_points(slurp(file), field_flag(g), vars_flag(g));
        auto y = parse_points(slurp(subset), x.ring()->field(), x.ring()->names());
        auto [i1, i2] = subset_complement_ideals(x, y);
        auto ord = pick_order(g, x.ring(), std::nullopt);
        emit_polys(g, *x.ring(), "complement", printed(i2.reduced_basis(ord).elements(), ord),
                   ordered_json{{"subset_ideal", printed(i1.reduced_basis(ord).elements(), ord)}});
      } else {
        if (file2.empty()) fail(ErrorKind::ParseError, "complement needs a grid file and an ideal file (or --subset)");
        auto grid = parse_grid_spec(slurp(file), field_flag(g), vars_flag(g));
        auto in = parse_ideal_file(slurp(file2), grid.ring()->field(), grid.ring()->names());
        auto pair = complementary_pair(grid, in.ideal());
        auto ord = pick_order(g, grid.ring(), in.order);
        const auto& c = pair.certificate;
        emit_polys(g, *grid.ring(), "complement", printed(pair.second.reduced_basis(ord).elements(), ord),
                   ordered_json{{"multiplicities", {c.multiplicity_grid, c.multiplicity_first, c.multiplicity_second}},
                                {"certificate", c.ok() ? "ok" : "failed"}});
      }
    } else if (shift->parsed()) {
      auto in = parse_ideal_file(slurp(file), field_flag(g), vars_flag(g));
      std::size_t n = in.ring->nvars();
      auto parse_list = [&](const std::string& text, long fallback) {
        std::vector<FieldElement> v;
        if (text.empty()) return std::vector<FieldElement>(n, FieldElement(in.ring->field(), fallback));
        std::stringstream s(text);
        std::string item;
        while (std::getline(s, item, ',')) v.push_back(FieldElement::parse(in.ring->field(), item));
        if (v.size() != n) fail(ErrorKind::ParseError, "shift needs one value per variable");
        return v;
      };
      LinearShift phi(parse_list(scales, 1), parse_list(offsets, 0));
      auto shifted = shift_ideal(in.ideal(), phi);
      emit_polys(g, *in.ring, "generators", printed(shifted.generators(), TermOrdering::degrevlex(n)));
    } else if (models->parsed()) {
      auto in = load_ideal(g, file, as_points);
      auto f = Polynomial::parse(in.ideal.ring(), poly_text);
      auto ms = minimal_models(f, in.ideal);
      std::vector<std::string> lines;
      for (const auto& m : ms) lines.push_back(m.to_string());
      emit_polys(g, *in.ideal.ring(), "models", lines);
    } else if (unique->parsed()) {
      auto in = load_ideal(g, file, as_points);
      bool u = unique_gb_fast_check(in.ideal);
      if (json(g)) {
        auto j = header(*in.ideal.ring());
        j["unique"] = u;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "unique: " << (u ? "true" : "false") << "\n";
      }
    } else if (check->parsed()) {
      auto field = field_flag(g).value_or(FieldSpec::rationals());
      Rng rng(g.seed);
      std::size_t agree = 0;
      for (std::size_t k = 0; k < count; ++k) {
        std::size_t n = 2 + rng() % 2;
        auto ring = Ring::make(field, default_variable_names(n));
        auto ideal = random_zero_dim_ideal(ring, max_mult, rng);
        bool same = fan_equal(enumerate_fan(ideal), fan_oracle_zerodim(ideal));
        if (same) ++agree;
        else std::cerr << "mismatch: " << ideal.reduced_basis().serialize();
      }
      if (json(g)) {
        ordered_json j{{"schema", 1}, {"seed", g.seed}, {"checked", count}, {"agree", agree}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "checked: " << count << "\nagree: " << agree << "\n";
      }
      return agree == count ? 0 : 4;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
