#include "lingua/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "lingua/errors.hpp"
#include "lingua/format.hpp"
#include "lingua/piecewise_linear.hpp"

namespace lingua {

namespace {

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
    std::ostringstream out;
    out << path;
    if (line >= 0)
        out << ":" << line + 1;
    out << ": " << msg;
    throw ValidationError(out.str());
}

[[noreturn]] void fail_at(const std::string& path, const YAML::Node& node,
                          const std::string& msg) {
    fail(path, node.IsDefined() ? node.Mark().line : -1, msg);
}

YAML::Node load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError(path + ": cannot open file");
    try {
        return YAML::Load(in);
    } catch (const YAML::Exception& e) {
        fail(path, e.mark.line, e.msg);
    }
}

void check_keys(const std::string& path, const YAML::Node& doc,
                const std::set<std::string>& allowed,
                const std::set<std::string>& required) {
    if (!doc.IsMap())
        fail_at(path, doc, "document must be a mapping");
    for (const auto& entry : doc) {
        std::string key = entry.first.as<std::string>();
        if (!allowed.count(key))
            fail_at(path, entry.first, "unknown key '" + key + "'");
    }
    for (const auto& key : required)
        if (!doc[key])
            fail(path, -1, "missing key '" + key + "'");
}

double as_number(const std::string& path, const YAML::Node& node, const char* what) {
    if (!node.IsScalar())
        fail_at(path, node, std::string(what) + " must be a number");
    try {
        return node.as<double>();
    } catch (const YAML::Exception&) {
        fail_at(path, node, std::string(what) + " must be a number");
    }
}

std::vector<std::string> as_string_list(const std::string& path, const YAML::Node& node,
                                        const char* what) {
    if (!node.IsSequence())
        fail_at(path, node, std::string(what) + " must be a list");
    std::vector<std::string> out;
    for (const auto& item : node) {
        if (!item.IsScalar())
            fail_at(path, item, std::string(what) + " entries must be names");
        out.push_back(item.as<std::string>());
    }
    return out;
}

PiecewiseLinear as_membership(const std::string& path, const YAML::Node& node,
                              const std::string& word) {
    if (!node.IsSequence())
        fail_at(path, node, "semantics of '" + word + "' must be a list of [x, y] pairs");
    std::vector<Knot> knots;
    for (const auto& item : node) {
        if (!item.IsSequence() || item.size() != 2)
            fail_at(path, item, "knot must be an [x, y] pair");
        knots.push_back({as_number(path, item[0], "knot x"), as_number(path, item[1], "knot y")});
    }
    try {
        return PiecewiseLinear(std::move(knots));
    } catch (const ValidationError& e) {
        fail_at(path, node, "semantics of '" + word + "': " + e.what());
    }
}

Interval as_interval(const std::string& path, const YAML::Node& node) {
    if (!node.IsSequence() || node.size() != 2)
        fail_at(path, node, "universe must be [lo, hi]");
    return {as_number(path, node[0], "universe bound"), as_number(path, node[1], "universe bound")};
}

LinguisticVariable parse_variable(const std::string& path, const YAML::Node& doc) {
    check_keys(path, doc, {"name", "universe", "terms", "semantics"},
               {"name", "universe", "terms", "semantics"});
    if (!doc["name"].IsScalar())
        fail_at(path, doc["name"], "name must be a scalar");
    std::string name = doc["name"].as<std::string>();
    Interval universe = as_interval(path, doc["universe"]);
    std::vector<std::string> terms = as_string_list(path, doc["terms"], "terms");
    const YAML::Node& sem = doc["semantics"];
    if (!sem.IsMap())
        fail_at(path, sem, "semantics must be a mapping word -> knots");
    std::map<std::string, PiecewiseLinear> semantics;
    for (const auto& entry : sem) {
        std::string word = entry.first.as<std::string>();
        semantics.emplace(word, as_membership(path, entry.second, word));
    }
    try {
        return LinguisticVariable(std::move(name), std::move(terms), universe,
                                  std::move(semantics));
    } catch (const ValidationError& e) {
        fail(path, -1, e.what());
    }
}

DegreeMatrix as_matrix(const std::string& path, const YAML::Node& node, size_t rows, size_t cols,
                       const std::string& what) {
    if (!node.IsSequence())
        fail_at(path, node, what + " must be a matrix (nested rows or a flat list)");
    std::vector<double> entries;
    if (node.size() > 0 && node[0].IsSequence()) {
        if (node.size() != rows)
            fail_at(path, node, what + ": expected " + std::to_string(rows) + " rows");
        for (const auto& row : node) {
            if (!row.IsSequence() || row.size() != cols)
                fail_at(path, row, what + ": each row needs " + std::to_string(cols) + " entries");
            for (const auto& cell : row)
                entries.push_back(as_number(path, cell, "matrix entry"));
        }
    } else {
        for (const auto& cell : node)
            entries.push_back(as_number(path, cell, "matrix entry"));
        if (entries.size() != rows * cols)
            fail_at(path, node,
                    what + ": expected " + std::to_string(rows * cols) + " entries, got " +
                        std::to_string(entries.size()));
    }
    try {
        return DegreeMatrix(rows, cols, std::move(entries));
    } catch (const ValidationError& e) {
        fail_at(path, node, what + ": " + e.what());
    }
}

std::map<std::string, DegreeMatrix> as_matrix_map(const std::string& path,
                                                  const YAML::Node& node, size_t rows,
                                                  size_t cols, const char* what) {
    if (!node.IsMap())
        fail_at(path, node, std::string(what) + " must be a mapping input -> matrix");
    std::map<std::string, DegreeMatrix> out;
    for (const auto& entry : node) {
        std::string sym = entry.first.as<std::string>();
        out.emplace(sym, as_matrix(path, entry.second, rows, cols,
                                   std::string(what) + " for input '" + sym + "'"));
    }
    return out;
}

} // namespace

LinguisticVariable load_variable(const std::string& path) {
    return parse_variable(path, load_document(path));
}

QuantifierVariable load_quantifier(const std::string& path) {
    LinguisticVariable base = load_variable(path);
    try {
        return QuantifierVariable(std::move(base));
    } catch (const ValidationError& e) {
        fail(path, -1, e.what());
    }
}

Lfa load_lfa(const std::string& path, bool enforce_conditions) {
    YAML::Node doc = load_document(path);
    check_keys(path, doc, {"states", "inputs", "outputs", "delta", "lambda", "initial", "final"},
               {"states", "inputs", "outputs", "delta", "lambda"});
    std::vector<std::string> states = as_string_list(path, doc["states"], "states");
    std::vector<std::string> inputs = as_string_list(path, doc["inputs"], "inputs");
    std::vector<std::string> outputs = as_string_list(path, doc["outputs"], "outputs");
    if (states.empty())
        fail_at(path, doc["states"], "states list must not be empty");
    auto delta = as_matrix_map(path, doc["delta"], states.size(), states.size(), "delta");
    auto lambda = as_matrix_map(path, doc["lambda"], states.size(), outputs.size(), "lambda");
    std::optional<std::string> initial;
    if (doc["initial"]) {
        if (!doc["initial"].IsScalar())
            fail_at(path, doc["initial"], "initial must be a state name");
        initial = doc["initial"].as<std::string>();
    }
    std::set<std::string> final_states;
    if (doc["final"]) {
        auto list = as_string_list(path, doc["final"], "final");
        final_states.insert(list.begin(), list.end());
    }
    Lfa machine = [&]() {
        try {
            return Lfa(std::move(states), std::move(inputs), std::move(outputs),
                       std::move(delta), std::move(lambda), std::move(initial),
                       std::move(final_states));
        } catch (const ValidationError& e) {
            fail(path, -1, e.what());
        }
    }();
    if (enforce_conditions) {
        LfaReport report = validate_lfa(machine);
        if (!report.ok()) {
            std::ostringstream msg;
            msg << "machine is not well formed:";
            for (const auto& v : report.violations)
                msg << "\n  " << format_violation(v);
            fail(path, -1, msg.str());
        }
    }
    return machine;
}

bool is_machine_file(const std::string& path) {
    YAML::Node doc = load_document(path);
    return doc.IsMap() && doc["states"];
}

SeriesDocument load_series(const std::string& path, const LinguisticVariable& variable) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError(path + ": cannot open file");
    SeriesDocument doc;
    doc.variable = variable.name();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        double v;
        std::string rest;
        if (!(ls >> v) || (ls >> rest))
            fail(path, lineno - 1, "expected one number per line");
        if (!variable.universe().contains(v)) {
            std::ostringstream msg;
            msg << "value " << v << " outside the universe [" << variable.universe().lo << ", "
                << variable.universe().hi << "] of " << variable.name();
            fail(path, lineno - 1, msg.str());
        }
        doc.values.push_back(v);
    }
    return doc;
}

} // namespace lingua
