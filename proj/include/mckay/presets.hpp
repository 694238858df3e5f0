// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mckay/group.hpp"

#include <string>
#include <vector>

namespace mckay {

struct PresetInfo {
    std::string name;
    bool parameterized = false; ///< true if the preset takes an integer parameter n
    std::string summary;
};

/// All built-in groups, sorted by name.
const std::vector<PresetInfo>& preset_catalog();

bool is_preset(const std::string& name);
bool preset_needs_parameter(const std::string& name);

/// The group file text for a preset; parameterized presets require n >= 1.
std::string preset_text(const std::string& name, int n = 0);

/// Parse and enumerate a preset in one step.
GroupPtr build_preset(const std::string& name, int n = 0, int max_order = 10000);

} // namespace mckay
