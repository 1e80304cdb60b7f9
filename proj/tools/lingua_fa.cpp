// Command-line front end for linguistic variables and degree-weighted
// automata: validation, description and probability queries, machine
// runs, equivalence checks, and series tokenization.

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lingua/equivalence.hpp"
#include "lingua/errors.hpp"
#include "lingua/format.hpp"
#include "lingua/formula_eval.hpp"
#include "lingua/io.hpp"
#include "lingua/mass_assignment.hpp"
#include "lingua/quantifier.hpp"
#include "lingua/series.hpp"

namespace {

using namespace lingua;

// Exit codes: 0 success, 1 domain or validation failure, 2 usage
// error, 3 negative equivalence verdict.
constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotEquivalent = 3;

std::map<std::string, double> parse_grades(const std::vector<std::string>& entries) {
    std::map<std::string, double> grades;
    for (const auto& entry : entries) {
        std::istringstream in(entry);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                throw CLI::ValidationError("--grades", "expected word=degree, got '" + item + "'");
            std::string word = item.substr(0, eq);
            std::string rest = item.substr(eq + 1);
            std::istringstream vs(rest);
            double v;
            std::string tail;
            if (!(vs >> v) || (vs >> tail))
                throw CLI::ValidationError("--grades", "bad degree '" + rest + "'");
            grades[word] = v;
        }
    }
    return grades;
}

LinguisticDescription description_from(const LinguisticVariable& var,
                                       const std::optional<double>& value,
                                       const std::vector<std::string>& grade_args) {
    if (value)
        return describe(var, *value);
    return LinguisticDescription::from_grades(var, parse_grades(grade_args));
}

void print_mass_lines(const MassAssignment& ma) {
    for (const auto& line : format_mass_lines(ma))
        std::cout << "mass: " << line << "\n";
}

int cmd_validate(const std::string& file, bool as_quantifier) {
    if (is_machine_file(file)) {
        Lfa machine = load_lfa(file, /*enforce_conditions=*/false);
        LfaReport report = validate_lfa(machine);
        if (report.ok()) {
            std::cout << "valid\n";
            return kExitOk;
        }
        std::cout << "invalid:\n";
        for (const auto& v : report.violations)
            std::cout << format_violation(v) << "\n";
        return kExitDomain;
    }
    LinguisticVariable var = load_variable(file);
    if (as_quantifier) {
        QuantifierReport report = validate_quantifier(var);
        if (!report.ok()) {
            std::cout << "invalid:\n";
            for (const auto& issue : report.issues)
                std::cout << format_issue(issue) << "\n";
            return kExitDomain;
        }
    }
    std::cout << "valid\n";
    return kExitOk;
}

int cmd_describe(const std::string& file, double value, const std::string& var_name) {
    LinguisticVariable var = load_variable(file);
    if (!var_name.empty() && var_name != var.name())
        throw LookupError("variable '" + var_name + "' not found; file defines '" + var.name() +
                          "'");
    LinguisticDescription d = describe(var, value);
    std::cout << "variable: " << var.name() << "\n";
    std::cout << "value: " << value << "\n";
    std::cout << "description: " << format_description(d) << "\n";
    MassAssignment ma = mass_assignment(d);
    print_mass_lines(ma);
    if (ma.residual() > kDegreeTol) {
        std::cout << "prob: undefined (residual " << format_degree(ma.residual()) << ")\n";
        return kExitOk;
    }
    std::vector<double> prob = least_prejudiced(d);
    for (size_t i = 0; i < var.size(); ++i)
        if (prob[i] > 0.0)
            std::cout << "prob: " << var.terms()[i] << " " << format_degree(prob[i]) << "\n";
    return kExitOk;
}

int cmd_mass(const std::string& file, const std::optional<double>& value,
             const std::vector<std::string>& grade_args) {
    LinguisticVariable var = load_variable(file);
    print_mass_lines(mass_assignment(description_from(var, value, grade_args)));
    return kExitOk;
}

int cmd_prob(const std::string& file, const std::string& word,
             const std::optional<double>& value, const std::vector<std::string>& grade_args) {
    LinguisticVariable var = load_variable(file);
    LinguisticDescription d = description_from(var, value, grade_args);
    std::cout << format_degree(word_probability(word, d)) << "\n";
    return kExitOk;
}

int cmd_quantify(const std::string& file, double p) {
    QuantifierVariable q = load_quantifier(file);
    std::cout << format_description(q.quantify(p)) << "\n";
    return kExitOk;
}

int cmd_formula(const std::string& expr, const std::vector<std::string>& var_files,
                const std::vector<std::string>& value_args) {
    VariableCatalog catalog;
    for (const auto& file : var_files) {
        LinguisticVariable var = load_variable(file);
        std::string name = var.name();
        catalog.emplace(std::move(name), std::move(var));
    }
    VariableValues values;
    for (const auto& entry : value_args) {
        auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0)
            throw CLI::ValidationError("--value", "expected NAME=value, got '" + entry + "'");
        std::istringstream vs(entry.substr(eq + 1));
        double v;
        std::string tail;
        if (!(vs >> v) || (vs >> tail))
            throw CLI::ValidationError("--value", "bad value in '" + entry + "'");
        values[entry.substr(0, eq)] = v;
    }
    ParseResult parsed = parse_formula(expr);
    std::cout << "ascii: " << render_ascii(parsed) << "\n";
    std::cout << "unicode: " << render_unicode(parsed) << "\n";
    double p = std::holds_alternative<Formula::Ptr>(parsed)
                   ? eval_formula(*std::get<Formula::Ptr>(parsed), values, catalog)
                   : eval_conditional(std::get<ConditionalFormula>(parsed), values, catalog);
    std::cout << "prob: " << format_degree(p) << "\n";
    return kExitOk;
}

int cmd_run(const std::string& file, const std::string& from, const std::string& input,
            bool with_outputs, size_t max_len) {
    Lfa machine = load_lfa(file);
    machine.state_index(from);
    Word x = parse_word(input);
    std::cout << "delta_star:\n" << format_matrix(delta_star(machine, x));
    if (with_outputs) {
        auto outputs = run_outputs(machine, from, x, max_len);
        std::vector<std::pair<Word, double>> rows(outputs.begin(), outputs.end());
        std::stable_sort(rows.begin(), rows.end(),
                         [](const auto& a, const auto& b) { return a.second > b.second; });
        std::cout << "outputs from " << from << ":\n";
        for (const auto& [y, degree] : rows)
            std::cout << format_word(y) << " " << format_degree(degree) << "\n";
    }
    return kExitOk;
}

int cmd_equiv(const std::string& file1, const std::string& file2, std::optional<size_t> k,
              std::optional<size_t> horizon, size_t budget) {
    Lfa m1 = load_lfa(file1);
    Lfa m2 = load_lfa(file2);
    EquivalenceVerdict verdict = machines_equivalent(m1, m2, horizon, k, budget);
    if (verdict.related) {
        std::cout << "equivalent (horizon " << verdict.horizon << ")\n";
        return kExitOk;
    }
    std::cout << "not equivalent (horizon " << verdict.horizon << ")\n";
    if (verdict.witness) {
        const EquivalenceWitness& w = *verdict.witness;
        std::cout << "witness: states " << w.state1 << " vs " << w.state2 << ", x = "
                  << format_word(w.input) << ", y = " << format_word(w.output) << ", degrees "
                  << format_degree(w.degree1) << " vs " << format_degree(w.degree2) << "\n";
    }
    return kExitNotEquivalent;
}

int cmd_lingrun(const std::string& lfa_file, const std::string& vars_file,
                const std::string& series_file, const std::string& mode) {
    Lfa machine = load_lfa(lfa_file);
    LinguisticVariable var = load_variable(vars_file);
    SeriesDocument series = load_series(series_file, var);
    if (series.values.empty())
        std::cerr << "warning: empty series; result is the identity\n";
    if (mode == "argmax") {
        Word tokens = tokenize_argmax(var, series.values);
        std::cout << "tokens: " << format_word(tokens) << "\n";
        std::cout << "result:\n" << format_matrix(delta_star(machine, tokens));
    } else {
        std::cout << "result:\n" << format_matrix(fuzzy_fold(machine, var, series.values));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linguistic variables and degree-weighted automata"};
    app.require_subcommand(1);
    int code = kExitOk;

    auto* validate = app.add_subcommand("validate", "Check a definition file");
    {
        auto file = std::make_shared<std::string>();
        auto quant = std::make_shared<bool>(false);
        validate->add_option("file", *file, "Definition file")->required();
        validate->add_flag("--quantifier", *quant, "Apply the quantifier checks");
        validate->callback([&code, file, quant] { code = cmd_validate(*file, *quant); });
    }

    auto* describe_cmd = app.add_subcommand("describe", "Describe a value linguistically");
    {
        auto file = std::make_shared<std::string>();
        auto value = std::make_shared<double>();
        auto var_name = std::make_shared<std::string>();
        describe_cmd->add_option("file", *file, "Variable file")->required();
        describe_cmd->add_option("value", *value, "Value in the universe")->required();
        describe_cmd->add_option("--var", *var_name, "Expected variable name");
        describe_cmd->callback(
            [&code, file, value, var_name] { code = cmd_describe(*file, *value, *var_name); });
    }

    auto* mass = app.add_subcommand("mass", "Mass assignment of a description");
    {
        auto file = std::make_shared<std::string>();
        auto value = std::make_shared<std::optional<double>>();
        auto grades = std::make_shared<std::vector<std::string>>();
        mass->add_option("file", *file, "Variable file")->required();
        auto* vopt = mass->add_option("--value", *value, "Value in the universe");
        auto* gopt = mass->add_option("--grades", *grades, "word=degree[,word=degree...]");
        vopt->excludes(gopt);
        mass->callback([&code, mass, file, value, grades] {
            if (!value->has_value() && grades->empty())
                throw CLI::RequiredError("--value or --grades");
            code = cmd_mass(*file, *value, *grades);
        });
    }

    auto* prob = app.add_subcommand("prob", "Word probability under a description");
    {
        auto file = std::make_shared<std::string>();
        auto word = std::make_shared<std::string>();
        auto value = std::make_shared<std::optional<double>>();
        auto grades = std::make_shared<std::vector<std::string>>();
        prob->add_option("file", *file, "Variable file")->required();
        prob->add_option("word", *word, "Word from the term set")->required();
        auto* vopt = prob->add_option("--value", *value, "Value in the universe");
        auto* gopt = prob->add_option("--grades", *grades, "word=degree[,word=degree...]");
        vopt->excludes(gopt);
        prob->callback([&code, file, word, value, grades] {
            if (!value->has_value() && grades->empty())
                throw CLI::RequiredError("--value or --grades");
            code = cmd_prob(*file, *word, *value, *grades);
        });
    }

    auto* quantify = app.add_subcommand("quantify", "Describe a probability with quantifiers");
    {
        auto file = std::make_shared<std::string>();
        auto p = std::make_shared<double>();
        quantify->add_option("file", *file, "Quantifier file")->required();
        quantify->add_option("p", *p, "Probability in [0, 1]")->required();
        quantify->callback([&code, file, p] { code = cmd_quantify(*file, *p); });
    }

    auto* formula = app.add_subcommand("formula", "Parse and evaluate a formula");
    {
        auto expr = std::make_shared<std::string>();
        auto vars = std::make_shared<std::vector<std::string>>();
        auto values = std::make_shared<std::vector<std::string>>();
        formula->add_option("expr", *expr, "Formula, e.g. \"((A=x) & (B=y))\"")->required();
        formula->add_option("--vars", *vars, "Variable file (repeatable)");
        formula->add_option("--value", *values, "NAME=value (repeatable)");
        formula->callback(
            [&code, expr, vars, values] { code = cmd_formula(*expr, *vars, *values); });
    }

    auto* run = app.add_subcommand("run", "Run a machine on an input word");
    {
        auto file = std::make_shared<std::string>();
        auto from = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        auto outputs = std::make_shared<bool>(false);
        auto max_len = std::make_shared<size_t>(8);
        run->add_option("file", *file, "Machine file")->required();
        run->add_option("--from", *from, "Start state")->required();
        run->add_option("--input", *input, "Input word, symbols separated by spaces")
            ->required();
        run->add_flag("--outputs", *outputs, "Also list output words with degrees");
        run->add_option("--max-len", *max_len, "Input length cap for output enumeration");
        run->callback([&code, file, from, input, outputs, max_len] {
            code = cmd_run(*file, *from, *input, *outputs, *max_len);
        });
    }

    auto* equiv = app.add_subcommand("equiv", "Compare two machines");
    {
        auto file1 = std::make_shared<std::string>();
        auto file2 = std::make_shared<std::string>();
        auto k = std::make_shared<std::optional<size_t>>();
        auto horizon = std::make_shared<std::optional<size_t>>();
        auto budget = std::make_shared<size_t>(kDefaultEnumerationBudget);
        equiv->add_option("file1", *file1, "First machine file")->required();
        equiv->add_option("file2", *file2, "Second machine file")->required();
        auto* kopt = equiv->add_option("--k", *k, "Compare words of length <= k only");
        auto* hopt = equiv->add_option("--horizon", *horizon, "Horizon for the verdict");
        kopt->excludes(hopt);
        equiv->add_option("--budget", *budget, "Enumeration budget (word pairs)");
        equiv->callback([&code, file1, file2, k, horizon, budget] {
            code = cmd_equiv(*file1, *file2, *k, *horizon, *budget);
        });
    }

    auto* lingrun = app.add_subcommand("lingrun", "Fold a numeric series through a machine");
    {
        auto lfa_file = std::make_shared<std::string>();
        auto vars_file = std::make_shared<std::string>();
        auto series_file = std::make_shared<std::string>();
        auto mode = std::make_shared<std::string>();
        lingrun->add_option("lfa", *lfa_file, "Machine file")->required();
        lingrun->add_option("vars", *vars_file, "Variable file")->required();
        lingrun->add_option("series", *series_file, "Series file")->required();
        lingrun->add_option("--mode", *mode, "argmax or fuzzy")
            ->required()
            ->check(CLI::IsMember({"argmax", "fuzzy"}));
        lingrun->callback([&code, lfa_file, vars_file, series_file, mode] {
            code = cmd_lingrun(*lfa_file, *vars_file, *series_file, *mode);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const LookupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return code;
}
