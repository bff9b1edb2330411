#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbfan/fan.hpp"
#include "gbfan/monomial_ideal.hpp"

namespace gbfan {

/// Ideal file: optional `# field:`, `# vars:` and `# order:` headers, then
/// polynomials separated by newlines or commas.  Without a variable list the
/// identifiers found in the text are used, in natural sort order.
struct IdealFile {
  RingPtr ring;
  std::vector<Polynomial> polynomials;
  std::optional<std::string> order;

  Ideal ideal() const { return Ideal(ring, polynomials); }
};

IdealFile parse_ideal_file(std::string_view text, std::optional<FieldSpec> field = std::nullopt,
                           std::optional<std::vector<std::string>> vars = std::nullopt);

/// Every polynomial must be a single term; coefficients are ignored.
MonomialIdeal to_monomial_ideal(const std::vector<Polynomial>& polys, std::size_t nvars);

std::vector<std::string> identifiers_in(std::string_view text);

std::string fan_to_text(const GroebnerFan& fan, const Ring& ring);
std::string fan_to_json(const GroebnerFan& fan, const Ring& ring);
/// Inverse of fan_to_json (cones are recomputed from the stored bases).
GroebnerFan fan_from_json(std::string_view json, RingPtr* ring_out = nullptr);

}  // namespace gbfan
