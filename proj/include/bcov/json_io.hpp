#pragma once

#include <string>

#include "bcov/linkdiag.hpp"
#include "json.hpp"

namespace bcov {

// Serializations are byte stable: fixed key order, integers only.
using Json = nlohmann::ordered_json;

Json link_to_json(const LabeledLink& link);
LabeledLink link_from_json(const Json& j);

Json validity_to_json(const ValidityReport& report);

std::string dump_json(const Json& j);

}  // namespace bcov
