#pragma once

#include <map>
#include <string>
#include <vector>

#include "lingua/description.hpp"
#include "lingua/linguistic_variable.hpp"

namespace lingua {

// One ballot per voter: the words the voter accepts for the value at hand.
struct VotingRecord {
    std::vector<std::vector<std::string>> ballots;
};

// Grade of each word = fraction of voters accepting it. Duplicate words
// within one ballot count once.
std::map<std::string, double> semantics_from_votes(const VotingRecord& votes,
                                                   const std::vector<std::string>& terms);

LinguisticDescription description_from_votes(const LinguisticVariable& variable,
                                             const VotingRecord& votes);

} // namespace lingua
