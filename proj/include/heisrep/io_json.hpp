#pragma once

#include <string>

#include <json.hpp>

#include "pairing.hpp"
#include "rep_one.hpp"

namespace heisrep {

using nlohmann::json;

json heis_to_json(const HeisenbergElement& h);
HeisenbergElement heis_from_json(const json& j, long g, QuotientSpec q = QuotientSpec::full());

/// Ring elements parse from their canonical text form "c*<elt> +- ...".
HeisRing parse_ring_element(const std::string& text, long g,
                            QuotientSpec q = QuotientSpec::full());

json diagram1_to_json(const IntersectionDiagram1& d);
IntersectionDiagram1 diagram1_from_json(const json& j);

json diagram_npt_to_json(const NPointDiagram& d);
NPointDiagram diagram_npt_from_json(const json& j);

/// Dispatch on the "type" field: "one_point" or "n_point".
bool json_is_npt(const json& j);

json catalog_to_json(const CurveCatalog& c);
CurveCatalog catalog_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

std::string fixtures_dir();

} // namespace heisrep
