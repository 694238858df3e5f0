// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mckay/cyclotomic.hpp"

#include <cmath>
#include <complex>

namespace mckay {

/// Floating-point evaluation with zeta_N -> exp(2*pi*i/N).  Test oracle only;
/// the exact path never touches doubles.
inline std::complex<double> numeric_value(const CycElem& a) {
    const double two_pi = 8.0 * std::atan(1.0);
    std::complex<double> acc(0.0, 0.0);
    const auto& cs = a.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k] == 0) continue;
        double c = static_cast<double>(rat_num(cs[k])) / static_cast<double>(rat_den(cs[k]));
        double angle = two_pi * static_cast<double>(k) / a.conductor();
        acc += c * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

} // namespace mckay
