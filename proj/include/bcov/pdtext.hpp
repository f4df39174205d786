#pragma once

#include <string>

#include "bcov/linkdiag.hpp"

namespace bcov {

// Line-oriented extended PD code. Grammar in docs/formats.md. parse_code is
// inverse to serialize_code; serialization is byte stable.
LabeledLink parse_code(const std::string& text);
std::string serialize_code(const LabeledLink& link);

}  // namespace bcov
