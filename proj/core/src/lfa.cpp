#include "lingua/lfa.hpp"

#include <algorithm>
#include <sstream>

#include "lingua/errors.hpp"

namespace lingua {

Word parse_word(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok)
        w.push_back(tok);
    return w;
}

namespace {

void check_unique_nonempty(const std::vector<std::string>& list, const char* what) {
    if (list.empty()) {
        std::ostringstream msg;
        msg << what << " list must not be empty";
        throw ValidationError(msg.str());
    }
    std::set<std::string> seen;
    for (const auto& s : list) {
        if (s.empty()) {
            std::ostringstream msg;
            msg << what << " name must not be empty";
            throw ValidationError(msg.str());
        }
        if (!seen.insert(s).second) {
            std::ostringstream msg;
            msg << "duplicate " << what << " name '" << s << "'";
            throw ValidationError(msg.str());
        }
    }
}

void check_matrix_map(const std::map<std::string, DegreeMatrix>& map,
                      const std::vector<std::string>& inputs, size_t rows, size_t cols,
                      const char* what) {
    for (const auto& sym : inputs) {
        auto it = map.find(sym);
        if (it == map.end()) {
            std::ostringstream msg;
            msg << what << " matrix missing for input '" << sym << "'";
            throw ValidationError(msg.str());
        }
        if (it->second.rows() != rows || it->second.cols() != cols) {
            std::ostringstream msg;
            msg << what << " matrix for input '" << sym << "' is " << it->second.rows() << "x"
                << it->second.cols() << ", expected " << rows << "x" << cols;
            throw ValidationError(msg.str());
        }
    }
    for (const auto& [sym, mat] : map)
        if (std::find(inputs.begin(), inputs.end(), sym) == inputs.end()) {
            std::ostringstream msg;
            msg << what << " matrix given for unknown input '" << sym << "'";
            throw ValidationError(msg.str());
        }
}

} // namespace

Lfa::Lfa(std::vector<std::string> states, std::vector<std::string> inputs,
         std::vector<std::string> outputs, std::map<std::string, DegreeMatrix> delta,
         std::map<std::string, DegreeMatrix> lambda, std::optional<std::string> initial,
         std::set<std::string> final_states)
    : states_(std::move(states)), inputs_(std::move(inputs)), outputs_(std::move(outputs)),
      delta_(std::move(delta)), lambda_(std::move(lambda)), initial_(std::move(initial)),
      final_states_(std::move(final_states)) {
    check_unique_nonempty(states_, "state");
    check_unique_nonempty(inputs_, "input");
    check_unique_nonempty(outputs_, "output");
    check_matrix_map(delta_, inputs_, states_.size(), states_.size(), "delta");
    check_matrix_map(lambda_, inputs_, states_.size(), outputs_.size(), "lambda");
    if (initial_ && std::find(states_.begin(), states_.end(), *initial_) == states_.end()) {
        std::ostringstream msg;
        msg << "initial state '" << *initial_ << "' is not a state";
        throw ValidationError(msg.str());
    }
    for (const auto& f : final_states_)
        if (std::find(states_.begin(), states_.end(), f) == states_.end()) {
            std::ostringstream msg;
            msg << "final state '" << f << "' is not a state";
            throw ValidationError(msg.str());
        }
}

size_t Lfa::index_in(const std::vector<std::string>& list, const std::string& name,
                     const char* what) const {
    auto it = std::find(list.begin(), list.end(), name);
    if (it == list.end()) {
        std::ostringstream msg;
        msg << "unknown " << what << " '" << name << "'";
        throw LookupError(msg.str());
    }
    return static_cast<size_t>(it - list.begin());
}

size_t Lfa::state_index(const std::string& name) const {
    return index_in(states_, name, "state");
}

size_t Lfa::input_index(const std::string& name) const {
    return index_in(inputs_, name, "input symbol");
}

size_t Lfa::output_index(const std::string& name) const {
    return index_in(outputs_, name, "output symbol");
}

const DegreeMatrix& Lfa::delta(const std::string& input) const {
    input_index(input);
    return delta_.at(input);
}

const DegreeMatrix& Lfa::lambda(const std::string& input) const {
    input_index(input);
    return lambda_.at(input);
}

double Lfa::delta(const std::string& from, const std::string& input,
                  const std::string& to) const {
    return delta(input).at(state_index(from), state_index(to));
}

double Lfa::lambda(const std::string& from, const std::string& input,
                   const std::string& output) const {
    return lambda(input).at(state_index(from), output_index(output));
}

std::set<double> Lfa::degree_set() const {
    std::set<double> degrees;
    for (const auto& [sym, mat] : delta_)
        degrees.insert(mat.entries().begin(), mat.entries().end());
    for (const auto& [sym, mat] : lambda_)
        degrees.insert(mat.entries().begin(), mat.entries().end());
    return degrees;
}

bool Lfa::same_content(const Lfa& other) const {
    return states_ == other.states_ && inputs_ == other.inputs_ && outputs_ == other.outputs_ &&
           delta_ == other.delta_ && lambda_ == other.lambda_;
}

LfaReport validate_lfa(const Lfa& m) {
    LfaReport report;
    for (const auto& q : m.states()) {
        size_t qi = m.state_index(q);
        for (const auto& x : m.inputs()) {
            const DegreeMatrix& d = m.delta(x);
            const DegreeMatrix& l = m.lambda(x);
            bool delta_positive = false;
            for (size_t j = 0; j < d.cols(); ++j)
                delta_positive = delta_positive || d.at(qi, j) > 0.0;
            bool lambda_positive = false;
            for (size_t j = 0; j < l.cols(); ++j)
                lambda_positive = lambda_positive || l.at(qi, j) > 0.0;
            if (delta_positive && !lambda_positive)
                report.violations.push_back({q, x, 1});
            if (lambda_positive && !delta_positive)
                report.violations.push_back({q, x, 2});
        }
    }
    return report;
}

DegreeMatrix delta_star(const Lfa& m, const Word& x) {
    DegreeMatrix acc = DegreeMatrix::identity(m.states().size());
    for (const auto& sym : x)
        acc = maxmin_compose(acc, m.delta(sym));
    return acc;
}

double delta_star(const Lfa& m, const std::string& from, const Word& x, const std::string& to) {
    return delta_star(m, x).at(m.state_index(from), m.state_index(to));
}

double lambda_star(const Lfa& m, const std::string& from, const Word& x, const Word& y) {
    size_t n = m.states().size();
    size_t q = m.state_index(from);
    for (const auto& sym : x)
        m.input_index(sym);
    for (const auto& sym : y)
        m.output_index(sym);
    if (x.size() != y.size())
        return 0.0;

    // deltarow tracks delta_star(from, prefix, .); lam tracks
    // lambda_star(from, prefix, output prefix).
    std::vector<double> deltarow(n, 0.0);
    deltarow[q] = 1.0;
    double lam = 1.0;
    for (size_t t = 0; t < x.size(); ++t) {
        const DegreeMatrix& step_l = m.lambda(x[t]);
        size_t b = m.output_index(y[t]);
        double reach = 0.0;
        for (size_t r = 0; r < n; ++r)
            reach = std::max(reach, std::min(deltarow[r], step_l.at(r, b)));
        lam = std::min(lam, reach);
        if (lam == 0.0)
            return 0.0;
        const DegreeMatrix& step_d = m.delta(x[t]);
        std::vector<double> next(n, 0.0);
        for (size_t j = 0; j < n; ++j)
            for (size_t r = 0; r < n; ++r)
                next[j] = std::max(next[j], std::min(deltarow[r], step_d.at(r, j)));
        deltarow = std::move(next);
    }
    return lam;
}

std::map<Word, double> run_outputs(const Lfa& m, const std::string& from, const Word& x,
                                   size_t max_len) {
    if (x.size() > max_len) {
        std::ostringstream msg;
        msg << "input word length " << x.size() << " exceeds the limit " << max_len;
        throw DomainError(msg.str());
    }
    size_t n = m.states().size();
    size_t q = m.state_index(from);
    for (const auto& sym : x)
        m.input_index(sym);

    std::vector<double> deltarow(n, 0.0);
    deltarow[q] = 1.0;
    std::map<Word, double> out;
    out[{}] = 1.0;
    for (const auto& sym : x) {
        const DegreeMatrix& step_l = m.lambda(sym);
        std::vector<double> reach(m.outputs().size(), 0.0);
        for (size_t b = 0; b < reach.size(); ++b)
            for (size_t r = 0; r < n; ++r)
                reach[b] = std::max(reach[b], std::min(deltarow[r], step_l.at(r, b)));
        std::map<Word, double> next_out;
        for (const auto& [y, lam] : out)
            for (size_t b = 0; b < reach.size(); ++b) {
                double v = std::min(lam, reach[b]);
                if (v > 0.0) {
                    Word ext = y;
                    ext.push_back(m.outputs()[b]);
                    next_out.emplace(std::move(ext), v);
                }
            }
        out = std::move(next_out);
        if (out.empty())
            return out;

        const DegreeMatrix& step_d = m.delta(sym);
        std::vector<double> next(n, 0.0);
        for (size_t j = 0; j < n; ++j)
            for (size_t r = 0; r < n; ++r)
                next[j] = std::max(next[j], std::min(deltarow[r], step_d.at(r, j)));
        deltarow = std::move(next);
    }
    return out;
}

DegreeMatrix fuzzified_step_matrix(const Lfa& m, const std::map<std::string, double>& weights) {
    for (const auto& [sym, w] : weights) {
        m.input_index(sym);
        if (!(w >= 0.0 && w <= 1.0)) {
            std::ostringstream msg;
            msg << "weight " << w << " for symbol '" << sym << "' outside [0, 1]";
            throw ValidationError(msg.str());
        }
    }
    size_t n = m.states().size();
    DegreeMatrix out(n, n);
    for (const auto& [sym, w] : weights) {
        if (w <= 0.0)
            continue;
        const DegreeMatrix& d = m.delta(sym);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                out.set(i, j, std::max(out.at(i, j), std::min(w, d.at(i, j))));
    }
    return out;
}

} // namespace lingua
