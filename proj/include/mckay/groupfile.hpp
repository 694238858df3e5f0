// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mckay/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mckay {

/// Parsed group description: shared conductor and dimension plus generator
/// matrices with entries in Q(zeta_conductor).
struct GroupFileData {
    int conductor = 1;
    int dimension = 1;
    std::vector<CycMatrix> generators;
};

/// Parse the group file format: top-level keys `conductor` and `dimension`,
/// then one or more [[generator]] tables each carrying `rows`, an m x m array
/// of cyclotomic expression strings.  Comments (#) and blank lines allowed.
GroupFileData parse_group_text(std::string_view text);

GroupFileData parse_group_file(const std::string& path);

} // namespace mckay
