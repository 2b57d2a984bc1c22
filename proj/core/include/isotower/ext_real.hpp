#pragma once

#include <cmath>
#include <stdexcept>

namespace isotower {

// Value on the one-point compactified line R u {oo}. The added point is a
// distinct tag, never a large float.
struct ExtReal {
    double value = 0.0;
    bool at_infinity = false;

    static ExtReal infinity() { return ExtReal{0.0, true}; }
    static ExtReal of(double v) {
        if (!std::isfinite(v)) return infinity();
        return ExtReal{v, false};
    }

    bool finite() const { return !at_infinity; }
};

inline bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.at_infinity || b.at_infinity) return a.at_infinity == b.at_infinity;
    return a.value == b.value;
}

// Value on the compactified plane R^2 u {oo}.
struct PlanePoint {
    double s = 0.0;
    double t = 0.0;
    bool at_infinity = false;

    static PlanePoint infinity() { return PlanePoint{0.0, 0.0, true}; }
    static PlanePoint of(double s, double t) {
        if (!std::isfinite(s) || !std::isfinite(t)) return infinity();
        return PlanePoint{s, t, false};
    }

    bool finite() const { return !at_infinity; }
};

// Raised when a degree computation cannot certify an integer answer
// (refinement budget exhausted, no regular target value found, ...).
class degree_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace isotower
