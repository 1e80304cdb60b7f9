#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lingua/linguistic_variable.hpp"

namespace lingua {

// Fuzzy subset of a term set: one grade in [0,1] per word. Words not
// mentioned carry grade 0.
class LinguisticDescription {
public:
    static LinguisticDescription from_grades(const LinguisticVariable& variable,
                                             const std::map<std::string, double>& grades);

    const LinguisticVariable& variable() const { return *variable_; }
    const std::vector<double>& grades() const { return grades_; } // parallel to terms
    double grade(std::size_t term) const { return grades_.at(term); }
    double grade(const std::string& word) const;

    // Largest grade; a description is normalized when its height is 1.
    double height() const;
    bool normalized(double tol = kDegreeTol) const { return height() >= 1.0 - tol; }

private:
    LinguisticDescription(std::shared_ptr<const LinguisticVariable> variable,
                          std::vector<double> grades);

    std::shared_ptr<const LinguisticVariable> variable_;
    std::vector<double> grades_;

    friend LinguisticDescription describe(const LinguisticVariable&, double);
};

// des_L(x): grade of each word w is the membership of x in M(w).
// x must lie in the universe of discourse.
LinguisticDescription describe(const LinguisticVariable& variable, double x);

} // namespace lingua
