#pragma once

#include <string>
#include <vector>

#include "lingua/description.hpp"

namespace lingua {

// Words carrying one slice of mass, listed in term-set order.
struct FocalSet {
    std::vector<std::string> words;
    double mass = 0.0;
};

bool operator==(const FocalSet& a, const FocalSet& b);

// Decomposition of a fuzzy set into nested focal sets. Sets are stored
// innermost first (highest grade level first); mass on the empty set is
// kept separately as the residual.
class MassAssignment {
public:
    MassAssignment(std::vector<FocalSet> focal_sets, double residual);

    const std::vector<FocalSet>& focal_sets() const { return focal_sets_; }
    double residual() const { return residual_; }
    bool normalized(double tol = kDegreeTol) const { return residual_ <= tol; }

private:
    std::vector<FocalSet> focal_sets_;
    double residual_;
};

// Distinct positive grades mu_1 > ... > mu_r give focal sets
// S_i = {w : grade(w) >= mu_i} with mass mu_i - mu_{i+1} (mu_{r+1} = 0).
// The residual 1 - mu_1 is zero exactly when the description is normalized.
MassAssignment mass_assignment(const LinguisticDescription& d);

// Word probabilities under the least-prejudiced distribution: each focal
// set splits its mass uniformly among its members. Requires a normalized
// description; returns one probability per term, in term-set order.
std::vector<double> least_prejudiced(const LinguisticDescription& d);

double word_probability(const std::string& word, const LinguisticDescription& d);

} // namespace lingua
