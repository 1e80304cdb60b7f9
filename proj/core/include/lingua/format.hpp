#pragma once

#include <string>
#include <vector>

#include "lingua/degree_matrix.hpp"
#include "lingua/description.hpp"
#include "lingua/lfa.hpp"
#include "lingua/mass_assignment.hpp"
#include "lingua/quantifier.hpp"

namespace lingua {

// Degrees are rendered with six decimal places everywhere.
std::string format_degree(double v);

// "moderate/1.000000 + good/1.000000"; "(empty)" when no grade is positive.
std::string format_description(const LinguisticDescription& d);

// "{moderate, good}"
std::string format_set(const std::vector<std::string>& words);

// One "{...}: mass" line per focal set, innermost first, then a "{}"
// line when residual mass remains.
std::vector<std::string> format_mass_lines(const MassAssignment& ma);

// Space-separated rows, one line per row.
std::string format_matrix(const DegreeMatrix& m);

// "a b" or "eps" for the empty word.
std::string format_word(const Word& w);

std::string format_issue(const QuantifierIssue& issue);
std::string format_violation(const LfaViolation& violation);

} // namespace lingua
