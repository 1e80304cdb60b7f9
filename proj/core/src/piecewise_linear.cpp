#include "lingua/piecewise_linear.hpp"

#include <algorithm>
#include <sstream>

#include "lingua/errors.hpp"

namespace lingua {

PiecewiseLinear::PiecewiseLinear(std::vector<Knot> knots) : knots_(std::move(knots)) {
    if (knots_.size() < 2) {
        throw ValidationError("piecewise-linear function needs at least 2 knots");
    }
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (knots_[i].y < 0.0 || knots_[i].y > 1.0) {
            std::ostringstream msg;
            msg << "knot degree " << knots_[i].y << " at x=" << knots_[i].x
                << " outside [0, 1]";
            throw ValidationError(msg.str());
        }
        if (i > 0 && !(knots_[i - 1].x < knots_[i].x)) {
            std::ostringstream msg;
            msg << "knot x-coordinates must be strictly increasing ("
                << knots_[i - 1].x << " then " << knots_[i].x << ")";
            throw ValidationError(msg.str());
        }
    }
}

double PiecewiseLinear::operator()(double x) const {
    if (x <= knots_.front().x) return knots_.front().y;
    if (x >= knots_.back().x) return knots_.back().y;
    auto hi = std::lower_bound(knots_.begin(), knots_.end(), x,
                               [](const Knot& k, double v) { return k.x < v; });
    if (hi->x == x) return hi->y; // knots reproduce exactly
    auto lo = hi - 1;
    double t = (x - lo->x) / (hi->x - lo->x);
    return lo->y + (hi->y - lo->y) * t;
}

bool operator==(const PiecewiseLinear& a, const PiecewiseLinear& b) {
    return a.knots() == b.knots();
}

double min_membership(const std::vector<const PiecewiseLinear*>& members, double x) {
    if (members.empty()) throw DomainError("minimum over an empty membership family");
    double v = (*members.front())(x);
    for (std::size_t i = 1; i < members.size(); ++i) {
        v = std::min(v, (*members[i])(x));
    }
    return v;
}

std::vector<double> min_breakpoints(const std::vector<const PiecewiseLinear*>& members,
                                    Interval domain) {
    std::vector<double> pts{domain.lo, domain.hi};
    for (const auto* f : members) {
        for (const auto& k : f->knots()) {
            if (domain.contains(k.x)) pts.push_back(k.x);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // Each member is linear between consecutive points here, so crossings
    // of any pair are the roots of a linear difference.
    std::vector<double> crossings;
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
        double a = pts[s], b = pts[s + 1];
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                double da = (*members[i])(a) - (*members[j])(a);
                double db = (*members[i])(b) - (*members[j])(b);
                if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
                    double t = da / (da - db);
                    double x = a + (b - a) * t;
                    if (a < x && x < b) crossings.push_back(x);
                }
            }
        }
    }
    pts.insert(pts.end(), crossings.begin(), crossings.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace lingua
