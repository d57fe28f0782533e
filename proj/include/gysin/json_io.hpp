#pragma once

// JSON encoding shared by the CLI and the report writer. All numbers are
// rendered as exact strings ("a/b" or integers); reports use ordered JSON so
// identical scripts give byte-identical output.

#include <json.hpp>

#include "gysin/dcomplex.hpp"
#include "gysin/spaces.hpp"

namespace gysin {

using Json = nlohmann::ordered_json;

std::string degree_key(GradingMode mode, Degree d);

Json element_to_json(const Element& e);
Element element_from_json(const Json& j, const VSpacePtr& space);

Json dims_to_json(GradingMode mode, const std::map<Degree, int>& dims);
Json dims_total_to_json(const std::map<int, int>& dims);

Json map_to_json(const LinearMap& f);

// entries: [[source_label, target_label, coeff], ...]
LinearMap map_from_entries(const Json& entries, const VSpacePtr& src, const VSpacePtr& dst,
                           Degree shift);

Json dcomplex_to_json(const DoubleComplex& k);
DoubleComplex dcomplex_from_json(const Json& j);

Json report_from_check(const CheckReport& rep);

}  // namespace gysin
