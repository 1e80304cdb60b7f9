#pragma once

// Shared fixtures and independent reference implementations used to
// cross-check the library. The reference code deliberately takes the
// slow, literal route (path enumeration, truth tables) so that it
// shares no shortcuts with the code under test.

#include <lingua/description.hpp>
#include <lingua/formula.hpp>
#include <lingua/formula_eval.hpp>
#include <lingua/lfa.hpp>
#include <lingua/linguistic_variable.hpp>
#include <lingua/mass_assignment.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace testutil {

inline lingua::LinguisticVariable make_salary() {
    using lingua::Knot;
    std::map<std::string, lingua::PiecewiseLinear> sem;
    sem.emplace("low", lingua::PiecewiseLinear({{15, 1}, {20, 1}, {25, 0}}));
    sem.emplace("moderate",
                lingua::PiecewiseLinear({{17.5, 0}, {20, 1}, {30, 1}, {32.5, 0}}));
    sem.emplace("good",
                lingua::PiecewiseLinear({{25, 0}, {30, 1}, {35, 1}, {42.5, 0}}));
    sem.emplace("verygood", lingua::PiecewiseLinear({{32.5, 0}, {35, 1}, {50, 1}}));
    return lingua::LinguisticVariable(
        "SALARY", {"low", "moderate", "good", "verygood"}, {15, 50}, sem);
}

inline lingua::LinguisticVariable make_scale() {
    std::map<std::string, lingua::PiecewiseLinear> sem;
    sem.emplace("verysmall", lingua::PiecewiseLinear({{0, 1}, {2, 1}, {3, 0}}));
    sem.emplace("small", lingua::PiecewiseLinear({{1, 0}, {2, 1}, {4, 1}, {5, 0}}));
    sem.emplace("medium", lingua::PiecewiseLinear({{3, 0}, {4, 1}, {6, 1}, {7, 0}}));
    sem.emplace("large", lingua::PiecewiseLinear({{5, 0}, {6, 1}, {8, 1}, {9, 0}}));
    sem.emplace("verylarge", lingua::PiecewiseLinear({{7, 0}, {8, 1}, {10, 1}}));
    return lingua::LinguisticVariable(
        "SCALE", {"verysmall", "small", "medium", "large", "verylarge"}, {0, 10},
        sem);
}

inline lingua::LinguisticVariable make_size() {
    std::map<std::string, lingua::PiecewiseLinear> sem;
    sem.emplace("small", lingua::PiecewiseLinear({{0, 1}, {25, 1}, {35, 0}}));
    sem.emplace("medium",
                lingua::PiecewiseLinear({{20, 0}, {30, 1}, {60, 1}, {70, 0}}));
    sem.emplace("large", lingua::PiecewiseLinear({{60, 0}, {80, 1}, {100, 1}}));
    return lingua::LinguisticVariable("SIZE", {"small", "medium", "large"},
                                      {0, 100}, sem);
}

// Three-word variable whose plateaus abut, so the description of every
// point in the universe is normalized. Handy for probability tests.
inline lingua::LinguisticVariable make_load() {
    std::map<std::string, lingua::PiecewiseLinear> sem;
    sem.emplace("lo", lingua::PiecewiseLinear({{0, 1}, {4, 1}, {5, 0}}));
    sem.emplace("mid", lingua::PiecewiseLinear({{3, 0}, {4, 1}, {6, 1}, {7, 0}}));
    sem.emplace("hi", lingua::PiecewiseLinear({{5, 0}, {6, 1}, {10, 1}}));
    return lingua::LinguisticVariable("LOAD", {"lo", "mid", "hi"}, {0, 10}, sem);
}

inline lingua::Lfa make_machine2() {
    std::map<std::string, lingua::DegreeMatrix> delta;
    std::map<std::string, lingua::DegreeMatrix> lambda;
    delta.emplace("a", lingua::DegreeMatrix(2, 2, {0.5, 0.9, 0.3, 0.0}));
    lambda.emplace("a", lingua::DegreeMatrix(2, 2, {0.7, 0.2, 0.4, 0.9}));
    return lingua::Lfa({"q1", "q2"}, {"a"}, {"u", "v"}, delta, lambda, "q1", {});
}

// -------- reference automaton semantics (path / recursion based) --------

inline double bf_delta_star(const lingua::Lfa& m, std::size_t i,
                            const lingua::Word& x, std::size_t j) {
    if (x.empty()) return i == j ? 1.0 : 0.0;
    lingua::Word rest(x.begin() + 1, x.end());
    const auto& step = m.delta(x.front());
    double best = 0.0;
    for (std::size_t r = 0; r < m.states().size(); ++r) {
        double d = step.at(i, r);
        if (d <= 0.0) continue;
        best = std::max(best, std::min(d, bf_delta_star(m, r, rest, j)));
    }
    return best;
}

inline double bf_lambda_star(const lingua::Lfa& m, std::size_t q,
                             const lingua::Word& x, const lingua::Word& y) {
    if (x.empty() && y.empty()) return 1.0;
    if (x.empty() || y.empty()) return 0.0;
    lingua::Word xp(x.begin(), x.end() - 1);
    lingua::Word yp(y.begin(), y.end() - 1);
    const std::string& a = x.back();
    const std::string& b = y.back();
    double prefix = bf_lambda_star(m, q, xp, yp);
    if (prefix <= 0.0) return 0.0;
    double best = 0.0;
    std::size_t bcol = m.output_index(b);
    for (std::size_t r = 0; r < m.states().size(); ++r) {
        double reach = bf_delta_star(m, q, xp, r);
        double out = m.lambda(a).at(r, bcol);
        best = std::max(best, std::min({prefix, reach, out}));
    }
    return best;
}

inline std::vector<lingua::Word> all_words(const std::vector<std::string>& sigma,
                                           std::size_t length) {
    std::vector<lingua::Word> out{{}};
    for (std::size_t t = 0; t < length; ++t) {
        std::vector<lingua::Word> next;
        next.reserve(out.size() * sigma.size());
        for (const auto& w : out)
            for (const auto& s : sigma) {
                lingua::Word e = w;
                e.push_back(s);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

// -------- random machines satisfying the row-positivity coupling --------

inline lingua::Lfa random_machine(std::mt19937& rng, std::size_t max_states = 5,
                                  std::size_t max_inputs = 3,
                                  std::size_t max_outputs = 3) {
    static const std::vector<double> pool{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
    static const std::vector<std::string> in_names{"a", "b", "c"};
    static const std::vector<std::string> out_names{"u", "v", "w"};

    std::uniform_int_distribution<std::size_t> ns(1, max_states);
    std::uniform_int_distribution<std::size_t> ms(1, max_inputs);
    std::uniform_int_distribution<std::size_t> ls(1, max_outputs);
    std::size_t n = ns(rng), mi = ms(rng), lo = ls(rng);

    std::vector<std::string> states;
    for (std::size_t i = 0; i < n; ++i) states.push_back("q" + std::to_string(i + 1));
    std::vector<std::string> inputs(in_names.begin(), in_names.begin() + mi);
    std::vector<std::string> outputs(out_names.begin(), out_names.begin() + lo);

    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_pos(1, pool.size() - 1);
    std::bernoulli_distribution dead_row(0.15);
    std::uniform_int_distribution<std::size_t> col_n(0, n - 1);
    std::uniform_int_distribution<std::size_t> col_l(0, lo - 1);

    std::map<std::string, lingua::DegreeMatrix> delta;
    std::map<std::string, lingua::DegreeMatrix> lambda;
    for (const auto& a : inputs) {
        lingua::DegreeMatrix d(n, n), l(n, lo);
        for (std::size_t i = 0; i < n; ++i) {
            if (dead_row(rng)) continue;  // both rows stay zero
            for (std::size_t j = 0; j < n; ++j) d.set(i, j, pool[pick(rng)]);
            for (std::size_t j = 0; j < lo; ++j) l.set(i, j, pool[pick(rng)]);
            bool dpos = false, lpos = false;
            for (std::size_t j = 0; j < n; ++j) dpos = dpos || d.at(i, j) > 0;
            for (std::size_t j = 0; j < lo; ++j) lpos = lpos || l.at(i, j) > 0;
            if (!dpos) d.set(i, col_n(rng), pool[pick_pos(rng)]);
            if (!lpos) l.set(i, col_l(rng), pool[pick_pos(rng)]);
        }
        delta.emplace(a, std::move(d));
        lambda.emplace(a, std::move(l));
    }
    return lingua::Lfa(states, inputs, outputs, delta, lambda, states.front(), {});
}

// -------- truth-table reference for the formula calculus --------

inline bool formula_truth(const lingua::Formula& f,
                          const std::map<std::string, std::string>& picked) {
    using lingua::Formula;
    if (const auto* a = std::get_if<Formula::Atomic>(&f.node()))
        return picked.at(a->variable) == a->word;
    if (const auto* n = std::get_if<Formula::Not>(&f.node()))
        return !formula_truth(*n->operand, picked);
    if (const auto* c = std::get_if<Formula::And>(&f.node()))
        return formula_truth(*c->lhs, picked) && formula_truth(*c->rhs, picked);
    const auto& o = std::get<Formula::Or>(f.node());
    return formula_truth(*o.lhs, picked) || formula_truth(*o.rhs, picked);
}

inline double bf_formula_prob(const lingua::Formula& f,
                              const lingua::VariableCatalog& catalog,
                              const lingua::VariableValues& values) {
    std::vector<std::string> vars = f.variables();
    std::vector<std::vector<std::string>> words(vars.size());
    std::vector<std::vector<double>> probs(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto& lv = catalog.at(vars[i]);
        std::vector<double> dist = lingua::least_prejudiced(
            lingua::describe(lv, values.at(vars[i])));
        words[i] = lv.terms();
        probs[i] = dist;
    }
    double total = 0.0;
    std::map<std::string, std::string> picked;
    std::function<void(std::size_t, double)> walk = [&](std::size_t k, double p) {
        if (k == vars.size()) {
            if (formula_truth(f, picked)) total += p;
            return;
        }
        for (std::size_t j = 0; j < words[k].size(); ++j) {
            picked[vars[k]] = words[k][j];
            walk(k + 1, p * probs[k][j]);
        }
    };
    walk(0, 1.0);
    return total;
}

inline lingua::Formula::Ptr random_formula(
    std::mt19937& rng,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& vocab,
    int depth) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<std::size_t> pv(0, vocab.size() - 1);
    int k = depth <= 0 ? 0 : kind(rng);
    if (k == 0) {
        const auto& [var, words] = vocab[pv(rng)];
        std::uniform_int_distribution<std::size_t> pw(0, words.size() - 1);
        return lingua::Formula::atomic(var, words[pw(rng)]);
    }
    if (k == 1) return lingua::Formula::negation(random_formula(rng, vocab, depth - 1));
    auto lhs = random_formula(rng, vocab, depth - 1);
    auto rhs = random_formula(rng, vocab, depth - 1);
    if (k == 2) return lingua::Formula::conjunction(std::move(lhs), std::move(rhs));
    return lingua::Formula::disjunction(std::move(lhs), std::move(rhs));
}

// Plain trapezoid quadrature over a uniform grid.
inline double integrate(const std::function<double(double)>& f, double lo,
                        double hi, std::size_t steps = 200000) {
    double h = (hi - lo) / static_cast<double>(steps);
    double acc = 0.5 * (f(lo) + f(hi));
    for (std::size_t i = 1; i < steps; ++i) acc += f(lo + h * static_cast<double>(i));
    return acc * h;
}

}  // namespace testutil
