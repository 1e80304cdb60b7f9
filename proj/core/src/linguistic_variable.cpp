#include "lingua/linguistic_variable.hpp"

#include <sstream>

#include "lingua/errors.hpp"

namespace lingua {

LinguisticVariable::LinguisticVariable(std::string name,
                                       std::vector<std::string> terms,
                                       Interval universe,
                                       const std::map<std::string, PiecewiseLinear>& semantics)
    : name_(std::move(name)), terms_(std::move(terms)), universe_(universe) {
    if (name_.empty()) throw ValidationError("variable name must be non-empty");
    if (terms_.empty()) throw ValidationError("term set must be non-empty");
    if (!(universe_.lo < universe_.hi)) {
        std::ostringstream msg;
        msg << "universe [" << universe_.lo << ", " << universe_.hi
            << "] must have lo < hi";
        throw ValidationError(msg.str());
    }
    meanings_.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const std::string& w = terms_[i];
        if (w.empty()) throw ValidationError("words must be non-empty");
        if (!index_.emplace(w, i).second) {
            throw ValidationError("duplicate word '" + w + "' in term set");
        }
        auto it = semantics.find(w);
        if (it == semantics.end()) {
            throw ValidationError("word '" + w + "' has no semantics entry");
        }
        for (const Knot& k : it->second.knots()) {
            if (!universe_.contains(k.x)) {
                std::ostringstream msg;
                msg << "knot x=" << k.x << " of word '" << w << "' outside universe ["
                    << universe_.lo << ", " << universe_.hi << "]";
                throw ValidationError(msg.str());
            }
        }
        meanings_.push_back(it->second);
    }
    if (semantics.size() != terms_.size()) {
        for (const auto& [w, f] : semantics) {
            if (!index_.count(w)) {
                throw ValidationError("semantics entry for '" + w + "' is not in the term set");
            }
        }
    }
}

const PiecewiseLinear& LinguisticVariable::meaning(const std::string& word) const {
    return meanings_[term_index(word)];
}

std::optional<std::size_t> LinguisticVariable::find_term(const std::string& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t LinguisticVariable::term_index(const std::string& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) {
        throw LookupError("word '" + word + "' is not in the term set of " + name_);
    }
    return it->second;
}

} // namespace lingua
