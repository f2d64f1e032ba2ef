#pragma once

#include <string>

#include "coulomb/smash.hpp"

namespace coulomb {

/// Engine settings: the gauge data plus serialization and solver knobs.
struct EngineConfig {
    GaugeData gauge;
    HMode hmode = HMode::Symbolic;
    int bounds = 6;
    int format = 1;
};

/// Sectioned key = value text. Section [gauge]: vertices, arrows ("1->2",
/// 1-based, space separated), v, w (integer lists), flavours (optional
/// flavour sequence as 1-based vertex labels; default vertex i repeated w_i
/// times), flavour_values (optional rationals, one per flavour; absent means
/// symbolic), coframing (optional). Section [engine]: hmode (symbolic | one),
/// bounds (positive), format (must be 1). '#' comments and blank lines are
/// skipped. Unknown sections, unknown keys, duplicates, and malformed values
/// fail with their line number; dimension checks are left to the gauge data
/// constructor.
EngineConfig parse_config(const std::string& text);

/// parse_config on the file contents; nonexistent path fails.
EngineConfig load_config(const std::string& path);

}  // namespace coulomb
