#pragma once

#include <string>

#include "sftirr/sft.hpp"

namespace sftirr {

// Reads {"d": <int>, "matrix": [[0|1,...],...]} and validates via
// build_sft. Malformed files raise ParseError; shape and entry problems
// propagate from build_sft.
Sft load_sft(const std::string& path);

Sft sft_from_json_text(const std::string& text);

}  // namespace sftirr
