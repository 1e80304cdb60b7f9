#include "lingua/quantifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lingua/errors.hpp"

namespace lingua {

QuantifierReport validate_quantifier(const LinguisticVariable& variable, size_t grid_points) {
    QuantifierReport report;
    Interval u = variable.universe();
    if (std::abs(u.lo) > kDegreeTol || std::abs(u.hi - 1.0) > kDegreeTol) {
        QuantifierIssue issue;
        issue.kind = QuantifierIssue::Kind::Universe;
        issue.lhs = u.lo;
        issue.rhs = u.hi;
        report.issues.push_back(issue);
        return report; // remaining checks assume [0, 1]
    }

    std::vector<double> xs;
    if (grid_points < 2)
        grid_points = 2;
    for (size_t i = 0; i < grid_points; ++i)
        xs.push_back(static_cast<double>(i) / static_cast<double>(grid_points - 1));
    for (size_t i = 0; i < variable.size(); ++i)
        for (const auto& k : variable.meaning(i).knots()) {
            xs.push_back(k.x);
            xs.push_back(1.0 - k.x);
        }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    size_t n = variable.size();
    for (size_t i = 0; i < n; ++i) {
        size_t j = n - i - 1; // antonym index
        const auto& a = variable.meaning(i);
        const auto& b = variable.meaning(j);
        for (double x : xs) {
            if (x < 0.0 || x > 1.0)
                continue;
            double lhs = a(x);
            double rhs = b(1.0 - x);
            if (std::abs(lhs - rhs) > kDegreeTol) {
                QuantifierIssue issue;
                issue.kind = QuantifierIssue::Kind::AntonymSymmetry;
                issue.word = variable.terms()[i];
                issue.antonym = variable.terms()[j];
                issue.x = x;
                issue.lhs = lhs;
                issue.rhs = rhs;
                report.issues.push_back(issue);
                break; // one sample per word pair is enough to flag it
            }
        }
    }

    for (double x : xs) {
        if (x < 0.0 || x > 1.0)
            continue;
        double best = 0.0;
        for (size_t i = 0; i < n; ++i)
            best = std::max(best, variable.meaning(i)(x));
        if (best <= 0.0) {
            QuantifierIssue issue;
            issue.kind = QuantifierIssue::Kind::Coverage;
            issue.x = x;
            report.issues.push_back(issue);
            break;
        }
    }
    return report;
}

QuantifierVariable::QuantifierVariable(LinguisticVariable variable, size_t grid_points) {
    QuantifierReport report = validate_quantifier(variable, grid_points);
    if (!report.ok()) {
        const QuantifierIssue& issue = report.issues.front();
        std::ostringstream msg;
        switch (issue.kind) {
        case QuantifierIssue::Kind::Universe:
            msg << "quantifier universe must be [0, 1], got [" << issue.lhs << ", " << issue.rhs
                << "]";
            break;
        case QuantifierIssue::Kind::AntonymSymmetry:
            msg << "antonym symmetry fails for '" << issue.word << "' vs '" << issue.antonym
                << "' at x = " << issue.x << ": " << issue.lhs << " != " << issue.rhs;
            break;
        case QuantifierIssue::Kind::Coverage:
            msg << "no word has positive membership at x = " << issue.x;
            break;
        }
        throw ValidationError(msg.str());
    }
    variable_ = std::make_shared<const LinguisticVariable>(std::move(variable));
}

const std::string& QuantifierVariable::antonym(const std::string& word) const {
    size_t i = variable_->term_index(word);
    return variable_->terms()[variable_->size() - i - 1];
}

LinguisticDescription QuantifierVariable::quantify(double proportion) const {
    if (proportion < 0.0 || proportion > 1.0) {
        std::ostringstream msg;
        msg << "proportion " << proportion << " outside [0, 1]";
        throw DomainError(msg.str());
    }
    return describe(*variable_, proportion);
}

} // namespace lingua
