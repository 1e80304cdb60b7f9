#include "lingua/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lingua/errors.hpp"
#include "lingua/piecewise_linear.hpp"

namespace lingua {

DensityFn uniform_prior(Interval universe) {
    double w = universe.width();
    if (w <= 0.0)
        throw ValidationError("uniform prior needs an interval of positive width");
    double lo = universe.lo, hi = universe.hi, inv = 1.0 / w;
    return [lo, hi, inv](double x) { return (x >= lo && x <= hi) ? inv : 0.0; };
}

ConditionalDensity::ConditionalDensity(std::vector<Component> components,
                                       std::shared_ptr<const LinguisticVariable> variable,
                                       DensityFn prior)
    : components_(std::move(components)), variable_(std::move(variable)),
      prior_(std::move(prior)) {}

const std::vector<std::string>& ConditionalDensity::component_set(size_t i) const {
    if (i >= components_.size())
        throw LookupError("component index out of range");
    return components_[i].words;
}

double ConditionalDensity::component_normalizer(size_t i) const {
    if (i >= components_.size())
        throw LookupError("component index out of range");
    return components_[i].normalizer;
}

double ConditionalDensity::min_membership_at(const Component& c, double x) const {
    double m = 1.0;
    for (const auto& w : c.words)
        m = std::min(m, variable_->meaning(w)(x));
    return m;
}

double ConditionalDensity::component_value(size_t i, double x) const {
    if (i >= components_.size())
        throw LookupError("component index out of range");
    const Component& c = components_[i];
    if (c.normalizer <= 0.0)
        return 0.0;
    return prior_(x) * min_membership_at(c, x) / c.normalizer;
}

double ConditionalDensity::operator()(double x) const {
    double total = 0.0;
    for (size_t i = 0; i < components_.size(); ++i)
        total += components_[i].mass * component_value(i, x);
    return total;
}

namespace {

double trapezoid(const DensityFn& f, const std::vector<double>& xs) {
    double area = 0.0;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        double a = xs[i], b = xs[i + 1];
        if (b <= a)
            continue;
        area += 0.5 * (b - a) * (f(a) + f(b));
    }
    return area;
}

} // namespace

ConditionalDensity conditional_density(const LinguisticDescription& d, DensityFn prior,
                                       size_t grid_resolution) {
    if (grid_resolution < 2)
        throw ValidationError("grid resolution must be at least 2");
    MassAssignment ma = mass_assignment(d);
    if (ma.residual() > kDegreeTol) {
        std::ostringstream msg;
        msg << "description is not normalized: residual mass " << ma.residual();
        throw DomainError(msg.str());
    }

    const LinguisticVariable& var = d.variable();
    Interval universe = var.universe();

    auto variable = std::make_shared<const LinguisticVariable>(var);
    std::vector<ConditionalDensity::Component> components;
    for (const auto& fs : ma.focal_sets()) {
        ConditionalDensity::Component c;
        c.words = fs.words;
        c.mass = fs.mass;

        std::vector<const PiecewiseLinear*> members;
        members.reserve(c.words.size());
        for (const auto& w : c.words)
            members.push_back(&var.meaning(w));
        std::vector<double> xs = min_breakpoints(members, universe);
        for (size_t i = 0; i <= grid_resolution; ++i) {
            double t = static_cast<double>(i) / static_cast<double>(grid_resolution);
            xs.push_back(universe.lo + t * universe.width());
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

        auto integrand = [&](double x) { return prior(x) * min_membership(members, x); };
        c.normalizer = trapezoid(integrand, xs);
        if (c.normalizer <= 0.0 && c.mass > kDegreeTol) {
            std::ostringstream msg;
            msg << "focal set {";
            for (size_t i = 0; i < c.words.size(); ++i)
                msg << (i ? ", " : "") << c.words[i];
            msg << "} has zero prior-weighted area but mass " << c.mass;
            throw DomainError(msg.str());
        }
        components.push_back(std::move(c));
    }
    return ConditionalDensity(std::move(components), std::move(variable), std::move(prior));
}

} // namespace lingua
