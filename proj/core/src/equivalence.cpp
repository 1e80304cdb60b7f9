#include "lingua/equivalence.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "lingua/errors.hpp"

namespace lingua {

namespace {

constexpr size_t kSaturated = std::numeric_limits<size_t>::max();

size_t sat_mul(size_t a, size_t b) {
    if (a == 0 || b == 0)
        return 0;
    if (a > kSaturated / b)
        return kSaturated;
    return a * b;
}

size_t sat_add(size_t a, size_t b) {
    if (a > kSaturated - b)
        return kSaturated;
    return a + b;
}

size_t sat_pow(size_t base, size_t exp) {
    size_t result = 1;
    for (size_t t = 0; t < exp; ++t)
        result = sat_mul(result, base);
    return result;
}

// sum over t = 1..k of (pairs_per_step)^t
size_t nominal_cost(size_t pairs_per_step, size_t k) {
    size_t total = 0, power = 1;
    for (size_t t = 1; t <= k; ++t) {
        power = sat_mul(power, pairs_per_step);
        total = sat_add(total, power);
        if (total == kSaturated)
            break;
    }
    return total;
}

// The two machines viewed through a shared alphabet: matrices of the
// second machine are re-indexed to the first machine's symbol order.
struct PairedMachines {
    const Lfa& m1;
    const Lfa& m2;
    std::vector<const DegreeMatrix*> d1, l1, d2, l2; // by m1 input index
    std::vector<size_t> col2;                        // m1 output index -> m2 column
    size_t n1, n2, symbols, letters;

    PairedMachines(const Lfa& a, const Lfa& b) : m1(a), m2(b) {
        auto as_set = [](const std::vector<std::string>& v) {
            return std::set<std::string>(v.begin(), v.end());
        };
        if (as_set(m1.inputs()) != as_set(m2.inputs()))
            throw ValidationError("machines do not share the input alphabet");
        if (as_set(m1.outputs()) != as_set(m2.outputs()))
            throw ValidationError("machines do not share the output alphabet");
        n1 = m1.states().size();
        n2 = m2.states().size();
        symbols = m1.inputs().size();
        letters = m1.outputs().size();
        for (const auto& sym : m1.inputs()) {
            d1.push_back(&m1.delta(sym));
            l1.push_back(&m1.lambda(sym));
            d2.push_back(&m2.delta(sym));
            l2.push_back(&m2.lambda(sym));
        }
        for (const auto& out : m1.outputs())
            col2.push_back(m2.output_index(out));
    }
};

std::vector<double> advance_row(const std::vector<double>& row, const DegreeMatrix& step) {
    std::vector<double> next(step.cols(), 0.0);
    for (size_t j = 0; j < step.cols(); ++j)
        for (size_t r = 0; r < row.size(); ++r)
            next[j] = std::max(next[j], std::min(row[r], step.at(r, j)));
    return next;
}

// Depth-first over input words of one exact length; output-word degrees
// for both machines ride along keyed by output indices, zero-on-both
// entries dropped. Symbol order follows the first machine's alphabet,
// so the first mismatch is lexicographically least.
struct LevelSearch {
    const PairedMachines& pm;
    std::string q1, q2;
    size_t target = 0;
    Word input;
    std::optional<EquivalenceWitness> found;

    using OutMap = std::map<std::vector<size_t>, std::pair<double, double>>;

    struct Node {
        std::vector<double> row1, row2;
        OutMap out;
    };

    void search(size_t depth, const Node& node) {
        if (found)
            return;
        if (depth == target) {
            for (const auto& [y, degrees] : node.out)
                if (degrees.first != degrees.second) {
                    EquivalenceWitness w;
                    w.state1 = q1;
                    w.state2 = q2;
                    w.input = input;
                    for (size_t b : y)
                        w.output.push_back(pm.m1.outputs()[b]);
                    w.degree1 = degrees.first;
                    w.degree2 = degrees.second;
                    found = std::move(w);
                    return;
                }
            return;
        }
        for (size_t s = 0; s < pm.symbols; ++s) {
            input.push_back(pm.m1.inputs()[s]);
            Node child;
            child.out = extend_outputs(node, s);
            if (!child.out.empty() || depth + 1 == target) {
                child.row1 = advance_row(node.row1, *pm.d1[s]);
                child.row2 = advance_row(node.row2, *pm.d2[s]);
                search(depth + 1, child);
            }
            input.pop_back();
            if (found)
                return;
        }
    }

    OutMap extend_outputs(const Node& node, size_t s) const {
        std::vector<double> reach1(pm.letters, 0.0), reach2(pm.letters, 0.0);
        for (size_t b = 0; b < pm.letters; ++b) {
            for (size_t r = 0; r < pm.n1; ++r)
                reach1[b] = std::max(reach1[b], std::min(node.row1[r], pm.l1[s]->at(r, b)));
            for (size_t r = 0; r < pm.n2; ++r)
                reach2[b] =
                    std::max(reach2[b], std::min(node.row2[r], pm.l2[s]->at(r, pm.col2[b])));
        }
        OutMap next;
        for (const auto& [y, degrees] : node.out)
            for (size_t b = 0; b < pm.letters; ++b) {
                double v1 = std::min(degrees.first, reach1[b]);
                double v2 = std::min(degrees.second, reach2[b]);
                if (v1 > 0.0 || v2 > 0.0) {
                    std::vector<size_t> key = y;
                    key.push_back(b);
                    next.emplace(std::move(key), std::make_pair(v1, v2));
                }
            }
        return next;
    }
};

std::optional<EquivalenceWitness> find_mismatch(const PairedMachines& pm, const std::string& q1,
                                                const std::string& q2, size_t level) {
    LevelSearch search{pm, q1, q2, level, {}, std::nullopt};
    LevelSearch::Node root;
    root.row1.assign(pm.n1, 0.0);
    root.row1[pm.m1.state_index(q1)] = 1.0;
    root.row2.assign(pm.n2, 0.0);
    root.row2[pm.m2.state_index(q2)] = 1.0;
    root.out[{}] = {1.0, 1.0};
    search.search(0, root);
    return search.found;
}

[[noreturn]] void budget_error(size_t needed, size_t budget) {
    std::ostringstream msg;
    msg << "enumeration budget exceeded: about " << needed
        << " word pairs to examine, budget " << budget;
    throw BudgetError(msg.str());
}

} // namespace

size_t default_horizon(const Lfa& m1, const Lfa& m2) {
    std::set<double> degrees = m1.degree_set();
    std::set<double> other = m2.degree_set();
    degrees.insert(other.begin(), other.end());
    return m1.states().size() * m2.states().size() * degrees.size();
}

EquivalenceVerdict k_equivalent(const Lfa& m1, const std::string& q1, const Lfa& m2,
                                const std::string& q2, size_t k, size_t budget) {
    m1.state_index(q1);
    m2.state_index(q2);
    PairedMachines pm(m1, m2);
    size_t needed = nominal_cost(pm.symbols * pm.letters, k);
    if (needed > budget)
        budget_error(needed, budget);
    for (size_t t = 1; t <= k; ++t)
        if (auto w = find_mismatch(pm, q1, q2, t))
            return {false, t, std::move(w)};
    return {true, k, std::nullopt};
}

EquivalenceVerdict equivalent_states(const Lfa& m1, const std::string& q1, const Lfa& m2,
                                     const std::string& q2, std::optional<size_t> horizon,
                                     size_t budget) {
    m1.state_index(q1);
    m2.state_index(q2);
    size_t h = horizon ? *horizon : default_horizon(m1, m2);
    PairedMachines pm(m1, m2);
    if ((&m1 == &m2 || m1.same_content(m2)) && q1 == q2)
        return {true, h, std::nullopt};
    size_t cumulative = 0;
    for (size_t t = 1; t <= h; ++t) {
        cumulative = sat_add(cumulative, sat_pow(pm.symbols * pm.letters, t));
        if (cumulative > budget)
            budget_error(cumulative, budget);
        if (auto w = find_mismatch(pm, q1, q2, t))
            return {false, t, std::move(w)};
    }
    return {true, h, std::nullopt};
}

EquivalenceVerdict machines_equivalent(const Lfa& m1, const Lfa& m2,
                                       std::optional<size_t> horizon, std::optional<size_t> k,
                                       size_t budget) {
    PairedMachines pm(m1, m2);
    size_t h = k ? *k : (horizon ? *horizon : default_horizon(m1, m2));
    if (m1.same_content(m2))
        return {true, h, std::nullopt};

    auto pair_verdict = [&](const std::string& a, const std::string& b) {
        if (k)
            return k_equivalent(m1, a, m2, b, *k, budget);
        return equivalent_states(m1, a, m2, b, h, budget);
    };
    auto scan = [&](bool forward) -> std::optional<EquivalenceVerdict> {
        const auto& own = forward ? m1.states() : m2.states();
        const auto& other = forward ? m2.states() : m1.states();
        for (const auto& q : own) {
            std::optional<EquivalenceWitness> first;
            bool matched = false;
            for (const auto& cand : other) {
                EquivalenceVerdict v =
                    forward ? pair_verdict(q, cand) : pair_verdict(cand, q);
                if (v.related) {
                    matched = true;
                    break;
                }
                if (!first)
                    first = v.witness;
            }
            if (!matched)
                return EquivalenceVerdict{false, h, std::move(first)};
        }
        return std::nullopt;
    };
    if (auto verdict = scan(true))
        return *verdict;
    if (auto verdict = scan(false))
        return *verdict;
    return {true, h, std::nullopt};
}

std::vector<std::vector<std::string>> partition_by_k_equivalence(const Lfa& m, size_t k,
                                                                 size_t budget) {
    std::vector<std::vector<std::string>> classes;
    for (const auto& s : m.states()) {
        bool placed = false;
        for (auto& cls : classes)
            if (k_equivalent(m, s, m, cls.front(), k, budget).related) {
                cls.push_back(s);
                placed = true;
                break;
            }
        if (!placed)
            classes.push_back({s});
    }
    return classes;
}

} // namespace lingua
