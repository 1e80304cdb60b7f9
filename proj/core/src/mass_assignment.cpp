#include "lingua/mass_assignment.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "lingua/errors.hpp"

namespace lingua {

bool operator==(const FocalSet& a, const FocalSet& b) {
    return a.words == b.words && a.mass == b.mass;
}

MassAssignment::MassAssignment(std::vector<FocalSet> focal_sets, double residual)
    : focal_sets_(std::move(focal_sets)), residual_(residual) {
    if (residual_ < -kDegreeTol || residual_ > 1.0 + kDegreeTol) {
        std::ostringstream msg;
        msg << "residual " << residual_ << " outside [0, 1]";
        throw ValidationError(msg.str());
    }
    double total = residual_;
    std::set<std::string> prev;
    for (const auto& fs : focal_sets_) {
        if (fs.words.empty())
            throw ValidationError("focal set must not be empty");
        if (fs.mass < -kDegreeTol) {
            std::ostringstream msg;
            msg << "negative mass " << fs.mass;
            throw ValidationError(msg.str());
        }
        std::set<std::string> cur(fs.words.begin(), fs.words.end());
        if (cur.size() != fs.words.size())
            throw ValidationError("focal set has duplicate words");
        if (!prev.empty() && !std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()))
            throw ValidationError("focal sets are not nested");
        prev = std::move(cur);
        total += fs.mass;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "masses sum to " << total << ", expected 1";
        throw ValidationError(msg.str());
    }
}

MassAssignment mass_assignment(const LinguisticDescription& d) {
    const auto& terms = d.variable().terms();
    const auto& grades = d.grades();

    std::vector<double> levels;
    for (double g : grades)
        if (g > 0.0)
            levels.push_back(g);
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<FocalSet> sets;
    sets.reserve(levels.size());
    for (size_t i = 0; i < levels.size(); ++i) {
        FocalSet fs;
        for (size_t j = 0; j < terms.size(); ++j)
            if (grades[j] >= levels[i])
                fs.words.push_back(terms[j]);
        double next = (i + 1 < levels.size()) ? levels[i + 1] : 0.0;
        fs.mass = levels[i] - next;
        sets.push_back(std::move(fs));
    }
    double residual = levels.empty() ? 1.0 : 1.0 - levels.front();
    return MassAssignment(std::move(sets), residual);
}

std::vector<double> least_prejudiced(const LinguisticDescription& d) {
    MassAssignment ma = mass_assignment(d);
    if (ma.residual() > kDegreeTol) {
        std::ostringstream msg;
        msg << "description is not normalized: residual mass " << ma.residual()
            << " falls on the empty set";
        throw DomainError(msg.str());
    }
    const auto& terms = d.variable().terms();
    std::vector<double> prob(terms.size(), 0.0);
    for (const auto& fs : ma.focal_sets()) {
        double share = fs.mass / static_cast<double>(fs.words.size());
        for (const auto& w : fs.words)
            prob[d.variable().term_index(w)] += share;
    }
    return prob;
}

double word_probability(const std::string& word, const LinguisticDescription& d) {
    size_t idx = d.variable().term_index(word);
    return least_prejudiced(d)[idx];
}

} // namespace lingua
