#include "lingua/description.hpp"

#include <algorithm>
#include <sstream>

#include "lingua/errors.hpp"

namespace lingua {

LinguisticDescription::LinguisticDescription(std::shared_ptr<const LinguisticVariable> variable,
                                             std::vector<double> grades)
    : variable_(std::move(variable)), grades_(std::move(grades)) {}

LinguisticDescription LinguisticDescription::from_grades(
    const LinguisticVariable& variable, const std::map<std::string, double>& grades) {
    std::vector<double> g(variable.size(), 0.0);
    for (const auto& [word, degree] : grades) {
        std::size_t i = variable.term_index(word);
        if (degree < 0.0 || degree > 1.0) {
            std::ostringstream msg;
            msg << "grade " << degree << " for word '" << word << "' outside [0, 1]";
            throw ValidationError(msg.str());
        }
        g[i] = degree;
    }
    return LinguisticDescription(std::make_shared<const LinguisticVariable>(variable),
                                 std::move(g));
}

double LinguisticDescription::grade(const std::string& word) const {
    return grades_[variable_->term_index(word)];
}

double LinguisticDescription::height() const {
    return *std::max_element(grades_.begin(), grades_.end());
}

LinguisticDescription describe(const LinguisticVariable& variable, double x) {
    if (!variable.universe().contains(x)) {
        std::ostringstream msg;
        msg << "value " << x << " outside the universe [" << variable.universe().lo << ", "
            << variable.universe().hi << "] of " << variable.name();
        throw DomainError(msg.str());
    }
    std::vector<double> g(variable.size());
    for (std::size_t i = 0; i < variable.size(); ++i) {
        g[i] = variable.meaning(i)(x);
    }
    return LinguisticDescription(std::make_shared<const LinguisticVariable>(variable),
                                 std::move(g));
}

} // namespace lingua
