#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lingua/lfa.hpp"

namespace lingua {

// Shortest, lexicographically least (input, output) pair on which the
// two compared states disagree, with both degrees.
struct EquivalenceWitness {
    std::string state1;
    std::string state2;
    Word input;
    Word output;
    double degree1 = 0.0;
    double degree2 = 0.0;
};

struct EquivalenceVerdict {
    bool related = false;
    size_t horizon = 0; // the k up to which behaviors were compared
    std::optional<EquivalenceWitness> witness;
};

inline constexpr size_t kDefaultEnumerationBudget = 2'000'000;

// Horizon used when none is given: |Q1| * |Q2| * |D|, D the distinct
// degrees appearing in either machine.
size_t default_horizon(const Lfa& m1, const Lfa& m2);

// Exhaustive comparison of lambda_star over all input words of length
// <= k (outputs of matching length; other lengths are zero on both
// sides). The nominal enumeration cost is checked against the budget
// before any work is done.
EquivalenceVerdict k_equivalent(const Lfa& m1, const std::string& q1, const Lfa& m2,
                                const std::string& q2, size_t k,
                                size_t budget = kDefaultEnumerationBudget);

// Runs k_equivalent level by level up to the horizon, stopping at the
// first disagreement. Structurally identical machines short-circuit
// for the same state name.
EquivalenceVerdict equivalent_states(const Lfa& m1, const std::string& q1, const Lfa& m2,
                                     const std::string& q2,
                                     std::optional<size_t> horizon = std::nullopt,
                                     size_t budget = kDefaultEnumerationBudget);

// Both directions of: every state of one machine has an equivalent
// partner in the other. A fixed k compares with k_equivalent, otherwise
// equivalent_states up to the horizon.
EquivalenceVerdict machines_equivalent(const Lfa& m1, const Lfa& m2,
                                       std::optional<size_t> horizon = std::nullopt,
                                       std::optional<size_t> k = std::nullopt,
                                       size_t budget = kDefaultEnumerationBudget);

// Partition of the machine's states under behavior agreement on words
// of length <= k; classes are ordered by their least member.
std::vector<std::vector<std::string>> partition_by_k_equivalence(
    const Lfa& m, size_t k, size_t budget = kDefaultEnumerationBudget);

} // namespace lingua
