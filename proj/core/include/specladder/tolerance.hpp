#pragma once

#include <cmath>

namespace specladder {

// Mixed absolute/relative tolerance: a difference passes when
// |diff| <= abs + rel * |scale|. The scale is chosen by the caller; identity
// checks use the magnitude of the quantities entering the identity so that
// cancellation in the difference does not produce spurious failures.
struct Tolerance {
    double abs = 1e-10;
    double rel = 1e-10;

    bool within(double diff, double scale) const {
        return std::abs(diff) <= abs + rel * std::abs(scale);
    }
};

}  // namespace specladder
