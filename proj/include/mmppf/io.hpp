#pragma once

#include <string>

#include "mmppf/model.hpp"

namespace mmppf {

// Structure documents (.mmppf.json). load_structure resolves every
// identifier and computes derived data; save_structure emits the canonical
// serialization (sorted keys, sorted set elements).
MmppfStructure load_structure(const std::string& json_text);
MmppfStructure load_structure_file(const std::string& path);
std::string save_structure(const MmppfStructure& m);

}  // namespace mmppf
