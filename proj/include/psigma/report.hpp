#pragma once

#include <string>

#include "json.hpp"
#include "psigma/decomposition.hpp"

namespace psigma {

using Json = nlohmann::ordered_json;

Json to_json(MultiplicityVector const &v);
Json to_json(StabilityReport const &r);
/// Throw ArgumentError on malformed documents.
MultiplicityVector multiplicity_vector_from_json(Json const &j);
StabilityReport stability_report_from_json(Json const &j);

/// "V(1,1)^2 + V(2) + ..." in entry order; "0" when empty.
std::string summary_line(MultiplicityVector const &v);
/// One line per summand with multiplicity and padded dimension.
std::string text_table(MultiplicityVector const &v);
std::string text_report(StabilityReport const &r);

} // namespace psigma
