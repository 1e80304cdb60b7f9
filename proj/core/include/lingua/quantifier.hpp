#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lingua/description.hpp"
#include "lingua/linguistic_variable.hpp"

namespace lingua {

// One defect found while checking a variable for quantifier use.
struct QuantifierIssue {
    enum class Kind { Universe, AntonymSymmetry, Coverage };
    Kind kind;
    std::string word;    // offending word (symmetry, coverage point context)
    std::string antonym; // mirror word for symmetry issues
    double x = 0.0;      // sample point
    double lhs = 0.0;
    double rhs = 0.0;
};

struct QuantifierReport {
    std::vector<QuantifierIssue> issues;
    bool ok() const { return issues.empty(); }
};

// A quantifier set lives on [0, 1], covers it (every point has a word
// with positive membership), and is antonym-symmetric: with n words,
// word i at x must equal word n-i+1 at 1-x. Symmetry is checked on a
// uniform grid merged with all knots and their reflections.
QuantifierReport validate_quantifier(const LinguisticVariable& variable,
                                     size_t grid_points = 1001);

class QuantifierVariable {
public:
    explicit QuantifierVariable(LinguisticVariable variable, size_t grid_points = 1001);

    const LinguisticVariable& variable() const { return *variable_; }
    const std::string& antonym(const std::string& word) const;

    // Description of a proportion in [0, 1].
    LinguisticDescription quantify(double proportion) const;

private:
    std::shared_ptr<const LinguisticVariable> variable_;
};

} // namespace lingua
