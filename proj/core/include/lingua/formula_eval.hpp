#pragma once

#include <map>
#include <string>

#include "lingua/formula.hpp"
#include "lingua/linguistic_variable.hpp"

namespace lingua {

using VariableCatalog = std::map<std::string, LinguisticVariable>;
using VariableValues = std::map<std::string, double>;

// Probability of the event denoted by f. Sample space: one word drawn
// per variable appearing in f, using the least-prejudiced distribution
// of that variable's description of its value; distinct variables are
// independent. Connectives act on event sets, so De Morgan laws hold
// exactly.
double eval_formula(const Formula& f, const VariableValues& values,
                    const VariableCatalog& catalog);

// Pr(head and body) / Pr(body); Pr(body) must be positive.
double eval_conditional(const ConditionalFormula& c, const VariableValues& values,
                        const VariableCatalog& catalog);

} // namespace lingua
