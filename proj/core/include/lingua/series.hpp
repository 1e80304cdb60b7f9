#pragma once

#include <string>
#include <vector>

#include "lingua/degree_matrix.hpp"
#include "lingua/description.hpp"
#include "lingua/lfa.hpp"
#include "lingua/linguistic_variable.hpp"

namespace lingua {

// Numeric series to be tokenized through a variable's vocabulary.
struct SeriesDocument {
    std::vector<double> values;
    std::string variable;
};

// Word with the highest grade; ties go to the earlier term.
std::string argmax_word(const LinguisticDescription& d);

Word tokenize_argmax(const LinguisticVariable& variable, const std::vector<double>& values);

// Folds the series through the machine: each value's description is
// turned into a blended step matrix and the steps are combined with
// max-min composition. The empty series gives the identity.
DegreeMatrix fuzzy_fold(const Lfa& m, const LinguisticVariable& variable,
                        const std::vector<double>& values);

} // namespace lingua
