#include "lingua/series.hpp"

namespace lingua {

std::string argmax_word(const LinguisticDescription& d) {
    const auto& terms = d.variable().terms();
    size_t best = 0;
    for (size_t i = 1; i < terms.size(); ++i)
        if (d.grade(i) > d.grade(best))
            best = i;
    return terms[best];
}

Word tokenize_argmax(const LinguisticVariable& variable, const std::vector<double>& values) {
    Word w;
    w.reserve(values.size());
    for (double v : values)
        w.push_back(argmax_word(describe(variable, v)));
    return w;
}

DegreeMatrix fuzzy_fold(const Lfa& m, const LinguisticVariable& variable,
                        const std::vector<double>& values) {
    DegreeMatrix acc = DegreeMatrix::identity(m.states().size());
    for (double v : values) {
        LinguisticDescription d = describe(variable, v);
        std::map<std::string, double> weights;
        for (size_t i = 0; i < variable.size(); ++i)
            weights[variable.terms()[i]] = d.grade(i);
        acc = maxmin_compose(acc, fuzzified_step_matrix(m, weights));
    }
    return acc;
}

} // namespace lingua
