#pragma once

#include <string>

#include "npsplit/engine.hpp"

namespace npsplit {

// Flat key-value configuration document. Recognized keys:
//
//   decider     = sat-brute            (the shipped S decider)
//   c           = 2                    (decider exponent, >= 1)
//   k           = 2                    (team count, >= 2)
//   depth       = dloglog | dlog
//   enumeration = goedel | roster
//   roster      = PATH                 (machine-file list, one path per line,
//                                       resolved relative to the listing file)
//   initial-r   = 2
//
// '#' starts a comment. Unknown keys are rejected.
EngineConfig config_from_text(const std::string& text, const std::string& base_dir = ".");
EngineConfig config_from_file(const std::string& path);

// Canonical rendering of a config. Roster machines are embedded by canonical
// program code, not by path, so a fingerprint pins the actual enumeration.
std::string canonical_config_text(const EngineConfig& config);

// FNV-1a (64-bit, hex) over the canonical text. Embedded in every persisted
// r-table and report so traces are never read under the wrong configuration.
std::string config_fingerprint(const EngineConfig& config);

// Ordered machine-file list; order is the roster order.
std::vector<MachineDescription> roster_from_file(const std::string& path);

}  // namespace npsplit
