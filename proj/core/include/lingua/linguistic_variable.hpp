#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lingua/interval.hpp"
#include "lingua/piecewise_linear.hpp"

namespace lingua {

// Quadruple (name, term set, universe, semantics): a name L, a fixed finite
// term set T(L), a universe of discourse, and one membership function per word.
class LinguisticVariable {
public:
    LinguisticVariable(std::string name,
                       std::vector<std::string> terms,
                       Interval universe,
                       const std::map<std::string, PiecewiseLinear>& semantics);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& terms() const { return terms_; }
    const Interval& universe() const { return universe_; }
    std::size_t size() const { return terms_.size(); }

    const PiecewiseLinear& meaning(const std::string& word) const;
    const PiecewiseLinear& meaning(std::size_t term) const { return meanings_.at(term); }

    std::optional<std::size_t> find_term(const std::string& word) const;
    std::size_t term_index(const std::string& word) const; // LookupError when unknown

private:
    std::string name_;
    std::vector<std::string> terms_;
    Interval universe_;
    std::vector<PiecewiseLinear> meanings_; // parallel to terms_
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace lingua
