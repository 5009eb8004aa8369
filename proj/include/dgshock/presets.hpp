#pragma once

#include <string>
#include <vector>

#include "dgshock/config.hpp"

namespace dgshock {

std::vector<std::string> preset_names();

/// Built-in configuration for a named benchmark. Throws ConfigError on an
/// unknown name.
Config preset_config(const std::string& name);

/// Expands `preset = name` (if present) and lays the given entries on top.
Config resolve_config(const Config& user);

}  // namespace dgshock
