#pragma once

#include <string>

#include "lingua/lfa.hpp"
#include "lingua/linguistic_variable.hpp"
#include "lingua/quantifier.hpp"
#include "lingua/series.hpp"

namespace lingua {

// Variable definition file (YAML):
//   name: SALARY
//   universe: [0, 100]
//   terms: [low, moderate, good, verygood]
//   semantics:
//     low: [[0, 1], [20, 1], [30, 0]]
//     ...
// Errors carry "path:line:" prefixes.
LinguisticVariable load_variable(const std::string& path);

// Same schema with universe [0, 1]; word order defines the total order.
QuantifierVariable load_quantifier(const std::string& path);

// Machine definition file (YAML):
//   states: [q1, q2]
//   inputs: [a]
//   outputs: [u, v]
//   delta:
//     a: [[0.5, 0.9], [0.3, 0.0]]
//   lambda:
//     a: [[0.7, 0.2], [0.4, 0.9]]
//   initial: q1      # optional
//   final: [q2]      # optional
// Matrices may be nested rows or flat row-major lists. With
// enforce_conditions the loader rejects machines whose transition and
// output rows disagree on positivity.
Lfa load_lfa(const std::string& path, bool enforce_conditions = true);

// Series file: one real per line, '#' starts a comment. Every value
// must lie in the variable's universe.
SeriesDocument load_series(const std::string& path, const LinguisticVariable& variable);

// True when the document has a `states` key, i.e. defines a machine
// rather than a variable.
bool is_machine_file(const std::string& path);

} // namespace lingua
