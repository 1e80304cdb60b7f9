#include "lingua/formula_eval.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "lingua/description.hpp"
#include "lingua/mass_assignment.hpp"

namespace lingua {

namespace {

constexpr size_t kMaxOutcomes = 1u << 20;

// Product sample space over the formula's variables, with the event set
// of each subformula realized as a bitmap over outcomes.
struct SampleSpace {
    std::vector<std::string> names;
    std::vector<const LinguisticVariable*> vars;
    std::vector<std::vector<double>> probs; // per variable, per word
    std::vector<size_t> stride;
    size_t outcomes = 1;

    SampleSpace(const std::vector<std::string>& variables, const VariableValues& values,
                const VariableCatalog& catalog) {
        names = variables;
        for (const auto& name : names) {
            auto cat = catalog.find(name);
            if (cat == catalog.end()) {
                std::ostringstream msg;
                msg << "variable '" << name << "' is not in the catalog";
                throw LookupError(msg.str());
            }
            auto val = values.find(name);
            if (val == values.end()) {
                std::ostringstream msg;
                msg << "variable '" << name << "' has no value";
                throw LookupError(msg.str());
            }
            vars.push_back(&cat->second);
            probs.push_back(least_prejudiced(describe(cat->second, val->second)));
        }
        stride.assign(names.size(), 1);
        for (size_t i = names.size(); i-- > 0;) {
            if (i + 1 < names.size())
                stride[i] = stride[i + 1] * vars[i + 1]->size();
            if (outcomes > kMaxOutcomes / vars[i]->size())
                throw DomainError("formula sample space is too large");
            outcomes *= vars[i]->size();
        }
    }

    size_t index_of(const std::string& name) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name)
                return i;
        throw LookupError("variable '" + name + "' is not in the sample space");
    }

    std::vector<bool> event(const Formula& f) const {
        if (const auto* a = std::get_if<Formula::Atomic>(&f.node())) {
            size_t vi = index_of(a->variable);
            size_t wi = vars[vi]->term_index(a->word);
            std::vector<bool> e(outcomes, false);
            for (size_t t = 0; t < outcomes; ++t)
                e[t] = (t / stride[vi]) % vars[vi]->size() == wi;
            return e;
        }
        if (const auto* n = std::get_if<Formula::Not>(&f.node())) {
            std::vector<bool> e = event(*n->operand);
            e.flip();
            return e;
        }
        if (const auto* c = std::get_if<Formula::And>(&f.node())) {
            std::vector<bool> l = event(*c->lhs);
            std::vector<bool> r = event(*c->rhs);
            for (size_t t = 0; t < outcomes; ++t)
                l[t] = l[t] && r[t];
            return l;
        }
        const auto& d = std::get<Formula::Or>(f.node());
        std::vector<bool> l = event(*d.lhs);
        std::vector<bool> r = event(*d.rhs);
        for (size_t t = 0; t < outcomes; ++t)
            l[t] = l[t] || r[t];
        return l;
    }

    double probability(const std::vector<bool>& e) const {
        double total = 0.0;
        for (size_t t = 0; t < outcomes; ++t) {
            if (!e[t])
                continue;
            double p = 1.0;
            for (size_t i = 0; i < names.size(); ++i)
                p *= probs[i][(t / stride[i]) % vars[i]->size()];
            total += p;
        }
        return total;
    }
};

std::vector<std::string> merged_variables(const Formula& a, const Formula& b) {
    std::vector<std::string> names = a.variables();
    for (const auto& n : b.variables())
        names.push_back(n);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

} // namespace

double eval_formula(const Formula& f, const VariableValues& values,
                    const VariableCatalog& catalog) {
    SampleSpace space(f.variables(), values, catalog);
    return space.probability(space.event(f));
}

double eval_conditional(const ConditionalFormula& c, const VariableValues& values,
                        const VariableCatalog& catalog) {
    SampleSpace space(merged_variables(*c.head, *c.body), values, catalog);
    std::vector<bool> body = space.event(*c.body);
    double pb = space.probability(body);
    if (pb <= 0.0)
        throw DomainError("conditional body has probability 0");
    std::vector<bool> head = space.event(*c.head);
    for (size_t t = 0; t < body.size(); ++t)
        body[t] = body[t] && head[t];
    return space.probability(body) / pb;
}

} // namespace lingua
