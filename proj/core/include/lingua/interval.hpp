#pragma once

namespace lingua {

// Closed real interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    bool contains(double x) const { return lo <= x && x <= hi; }
    double width() const { return hi - lo; }
};

inline bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

// Absolute tolerance for golden-value comparisons and sum checks on degrees.
inline constexpr double kDegreeTol = 1e-9;

} // namespace lingua
