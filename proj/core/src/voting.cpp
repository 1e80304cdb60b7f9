#include "lingua/voting.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lingua/errors.hpp"

namespace lingua {

std::map<std::string, double> semantics_from_votes(const VotingRecord& votes,
                                                   const std::vector<std::string>& terms) {
    if (votes.ballots.empty())
        throw DomainError("voting record has no ballots");
    std::map<std::string, double> counts;
    for (const auto& t : terms)
        counts[t] = 0.0;
    for (const auto& ballot : votes.ballots) {
        std::set<std::string> seen(ballot.begin(), ballot.end());
        for (const auto& w : seen) {
            auto it = counts.find(w);
            if (it == counts.end()) {
                std::ostringstream msg;
                msg << "ballot word '" << w << "' is not in the term set";
                throw ValidationError(msg.str());
            }
            it->second += 1.0;
        }
    }
    double n = static_cast<double>(votes.ballots.size());
    for (auto& [w, c] : counts)
        c /= n;
    return counts;
}

LinguisticDescription description_from_votes(const LinguisticVariable& variable,
                                             const VotingRecord& votes) {
    return LinguisticDescription::from_grades(variable,
                                              semantics_from_votes(votes, variable.terms()));
}

} // namespace lingua
