#pragma once

#include <functional>

#include "zcount/errors.hpp"

namespace zcount {

struct QuadratureResult {
    double value = 0.0;
    double est_error = 0.0;
    long subdivisions = 0;  // accepted panels
};

inline constexpr long kMaxPanels = 1L << 16;

// Adaptive Gauss7/Kronrod15 integration of f over [a, b] to absolute
// tolerance abs_tol.  Subdivision is depth-first left-to-right, so results
// are deterministic for fixed inputs.
QuadratureResult integrate(const std::function<double(double)>& f,
                           double a, double b, double abs_tol);

}  // namespace zcount
