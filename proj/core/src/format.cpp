#include "lingua/format.hpp"

#include <iomanip>
#include <sstream>

namespace lingua {

std::string format_degree(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << v;
    return out.str();
}

std::string format_description(const LinguisticDescription& d) {
    const auto& terms = d.variable().terms();
    std::ostringstream out;
    bool any = false;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (d.grade(i) <= 0.0)
            continue;
        if (any)
            out << " + ";
        out << terms[i] << "/" << format_degree(d.grade(i));
        any = true;
    }
    if (!any)
        return "(empty)";
    return out.str();
}

std::string format_set(const std::vector<std::string>& words) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < words.size(); ++i)
        out << (i ? ", " : "") << words[i];
    out << "}";
    return out.str();
}

std::vector<std::string> format_mass_lines(const MassAssignment& ma) {
    std::vector<std::string> lines;
    for (const auto& fs : ma.focal_sets())
        lines.push_back(format_set(fs.words) + ": " + format_degree(fs.mass));
    if (ma.residual() > 0.0)
        lines.push_back("{}: " + format_degree(ma.residual()));
    return lines;
}

std::string format_matrix(const DegreeMatrix& m) {
    std::ostringstream out;
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << format_degree(m.at(i, j));
        out << "\n";
    }
    return out.str();
}

std::string format_word(const Word& w) {
    if (w.empty())
        return "eps";
    std::ostringstream out;
    for (size_t i = 0; i < w.size(); ++i)
        out << (i ? " " : "") << w[i];
    return out.str();
}

std::string format_issue(const QuantifierIssue& issue) {
    std::ostringstream out;
    switch (issue.kind) {
    case QuantifierIssue::Kind::Universe:
        out << "universe must be [0, 1], got [" << issue.lhs << ", " << issue.rhs << "]";
        break;
    case QuantifierIssue::Kind::AntonymSymmetry:
        out << "antonym symmetry fails for '" << issue.word << "' vs '" << issue.antonym
            << "' at x = " << issue.x << ": " << format_degree(issue.lhs) << " != "
            << format_degree(issue.rhs);
        break;
    case QuantifierIssue::Kind::Coverage:
        out << "no word has positive membership at x = " << issue.x;
        break;
    }
    return out.str();
}

std::string format_violation(const LfaViolation& violation) {
    std::ostringstream out;
    if (violation.condition == 1)
        out << "state '" << violation.state << "', input '" << violation.symbol
            << "': transitions are possible but no output is";
    else
        out << "state '" << violation.state << "', input '" << violation.symbol
            << "': an output is possible but no transition is";
    return out.str();
}

} // namespace lingua
