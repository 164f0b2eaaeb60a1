#pragma once

#include <string>

#include "hc/supermodule.hpp"
#include "hc/tableaux.hpp"
#include "hc/verify.hpp"

namespace hc {

inline constexpr int kSchemaVersion = 1;

/// Module as JSON: basis labels, parity bits, per-generator sparse triplets
/// [row, col, scalar] sorted by (row, col).  Scalars are [d, num, den] term
/// lists in characteristic 0 and [p, a, b] in characteristic p.
std::string module_to_json(const SuperModule& m);
SuperModule module_from_json(const std::string& text);

std::string report_to_json(const Report& r);

std::string labels_to_json(const std::vector<ClassLabel>& labels, int n,
                           std::uint32_t p, bool finite);

std::string tableau_to_json(const PlacedTableau& t);

/// Normal-form element as a JSON term list [[alpha], [beta], [one-line w],
/// scalar].
std::string pbw_to_json(const PBWElement& e);

}  // namespace hc
