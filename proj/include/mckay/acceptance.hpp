// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

namespace mckay {

/// Full verification suite: twelve checks covering the quiver fixtures, the
/// covering constructions, the character-theory invariants, the floating-point
/// cross-check, and output determinism.  Prints one PASS/FAIL line per check;
/// returns true iff every check passed.
bool run_acceptance(std::ostream& out);

} // namespace mckay
