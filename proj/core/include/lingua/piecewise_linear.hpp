#pragma once

#include <vector>

#include "lingua/interval.hpp"

namespace lingua {

struct Knot {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Knot& a, const Knot& b) { return a.x == b.x && a.y == b.y; }

// Membership function given by interpolation knots [x1:y1 ... xn:yn].
// Between knots the value is linear; outside the knot range it clamps to
// the nearest endpoint y, so shoulder shapes stay flat at the universe
// edge while triangles vanish outside their support.
class PiecewiseLinear {
public:
    explicit PiecewiseLinear(std::vector<Knot> knots);

    double operator()(double x) const;

    const std::vector<Knot>& knots() const { return knots_; }
    double min_x() const { return knots_.front().x; }
    double max_x() const { return knots_.back().x; }

private:
    std::vector<Knot> knots_;
};

bool operator==(const PiecewiseLinear& a, const PiecewiseLinear& b);

// Pointwise minimum over a non-empty family, evaluated at x.
double min_membership(const std::vector<const PiecewiseLinear*>& members, double x);

// All x in `domain` where the pointwise minimum of `members` can change
// slope: member knots, pairwise crossings, and the domain endpoints.
// Between consecutive breakpoints the minimum is a straight line.
std::vector<double> min_breakpoints(const std::vector<const PiecewiseLinear*>& members,
                                    Interval domain);

} // namespace lingua
