#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lingua/degree_matrix.hpp"

namespace lingua {

using Word = std::vector<std::string>;

// Splits on whitespace; an all-whitespace or empty string is the empty word.
Word parse_word(const std::string& text);

// Degree-weighted Mealy-style machine: delta(x) is the n-by-n matrix of
// transition degrees on input symbol x, lambda(x) the n-by-l matrix of
// output degrees. initial and final states are carried as inert metadata.
class Lfa {
public:
    Lfa(std::vector<std::string> states, std::vector<std::string> inputs,
        std::vector<std::string> outputs, std::map<std::string, DegreeMatrix> delta,
        std::map<std::string, DegreeMatrix> lambda,
        std::optional<std::string> initial = std::nullopt,
        std::set<std::string> final_states = {});

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& inputs() const { return inputs_; }
    const std::vector<std::string>& outputs() const { return outputs_; }
    const std::optional<std::string>& initial() const { return initial_; }
    const std::set<std::string>& final_states() const { return final_states_; }

    size_t state_index(const std::string& name) const;
    size_t input_index(const std::string& name) const;
    size_t output_index(const std::string& name) const;

    const DegreeMatrix& delta(const std::string& input) const;
    const DegreeMatrix& lambda(const std::string& input) const;
    double delta(const std::string& from, const std::string& input, const std::string& to) const;
    double lambda(const std::string& from, const std::string& input,
                  const std::string& output) const;

    // Distinct degree values appearing in the delta and lambda matrices.
    std::set<double> degree_set() const;

    bool same_content(const Lfa& other) const;

private:
    size_t index_in(const std::vector<std::string>& list, const std::string& name,
                    const char* what) const;

    std::vector<std::string> states_;
    std::vector<std::string> inputs_;
    std::vector<std::string> outputs_;
    std::map<std::string, DegreeMatrix> delta_;
    std::map<std::string, DegreeMatrix> lambda_;
    std::optional<std::string> initial_;
    std::set<std::string> final_states_;
};

// One (state, symbol) pair breaking a well-formedness condition:
// condition 1: a positive transition row needs a positive output row;
// condition 2: a positive output row needs a positive transition row.
struct LfaViolation {
    std::string state;
    std::string symbol;
    int condition = 0; // 1 or 2
};

struct LfaReport {
    std::vector<LfaViolation> violations;
    bool ok() const { return violations.empty(); }
};

LfaReport validate_lfa(const Lfa& m);

// Identity for the empty word, otherwise the max-min product of the
// per-symbol transition matrices in sequence order.
DegreeMatrix delta_star(const Lfa& m, const Word& x);
double delta_star(const Lfa& m, const std::string& from, const Word& x, const std::string& to);

// Output-word degree: 1 on (eps, eps), 0 when lengths differ, else the
// max-min recursion over intermediate states.
double lambda_star(const Lfa& m, const std::string& from, const Word& x, const Word& y);

// All output words with positive lambda_star for the given input word.
// Enumeration is Theta(l^|x|), so |x| is capped.
std::map<Word, double> run_outputs(const Lfa& m, const std::string& from, const Word& x,
                                   size_t max_len = 8);

// Blend of the per-symbol transition matrices: entry (i,j) is the max
// over symbols w of min(weights(w), delta(w)[i,j]). Symbols missing
// from weights count as weight 0.
DegreeMatrix fuzzified_step_matrix(const Lfa& m, const std::map<std::string, double>& weights);

} // namespace lingua
