#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lingua/description.hpp"
#include "lingua/interval.hpp"
#include "lingua/mass_assignment.hpp"

namespace lingua {

using DensityFn = std::function<double(double)>;

DensityFn uniform_prior(Interval universe);

// Mixture density over the universe: each focal set S contributes
// mass(S) times the prior restricted to S's joint membership and
// renormalized. Joint membership of a set is the pointwise minimum
// of its words' membership functions.
class ConditionalDensity {
public:
    struct Component {
        std::vector<std::string> words;
        double mass = 0.0;
        double normalizer = 0.0; // integral of prior * min-membership
    };

    ConditionalDensity(std::vector<Component> components,
                       std::shared_ptr<const LinguisticVariable> variable,
                       DensityFn prior);

    double operator()(double x) const;

    size_t components() const { return components_.size(); }
    const std::vector<std::string>& component_set(size_t i) const;
    // Value of the i-th normalized component density at x.
    double component_value(size_t i, double x) const;
    double component_normalizer(size_t i) const;

private:
    double min_membership_at(const Component& c, double x) const;

    std::vector<Component> components_;
    std::shared_ptr<const LinguisticVariable> variable_;
    DensityFn prior_;
};

// Density of the underlying value given a normalized description and a
// prior. Normalizers are computed by trapezoid integration on the exact
// breakpoints of each min-envelope merged with a uniform grid.
ConditionalDensity conditional_density(const LinguisticDescription& d, DensityFn prior,
                                       size_t grid_resolution = 8192);

} // namespace lingua
