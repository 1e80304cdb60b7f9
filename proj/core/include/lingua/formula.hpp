#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lingua/errors.hpp"

namespace lingua {

// Syntax error with the 0-based character offset where parsing failed.
class FormulaSyntaxError : public ValidationError {
public:
    FormulaSyntaxError(const std::string& what, size_t position)
        : ValidationError(what), position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

// A conditional whose head is not a plain variable-word test.
class ConditionalHeadError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Propositional formula over atomic tests (VAR = word). Immutable tree;
// subtrees are shared.
class Formula {
public:
    using Ptr = std::shared_ptr<const Formula>;

    struct Atomic {
        std::string variable;
        std::string word;
    };
    struct Not {
        Ptr operand;
    };
    struct And {
        Ptr lhs;
        Ptr rhs;
    };
    struct Or {
        Ptr lhs;
        Ptr rhs;
    };
    using Node = std::variant<Atomic, Not, And, Or>;

    static Ptr atomic(std::string variable, std::string word);
    static Ptr negation(Ptr operand);
    static Ptr conjunction(Ptr lhs, Ptr rhs);
    static Ptr disjunction(Ptr lhs, Ptr rhs);

    const Node& node() const { return node_; }

    // Variable names appearing in the formula, sorted, deduplicated.
    std::vector<std::string> variables() const;

private:
    explicit Formula(Node node) : node_(std::move(node)) {}
    Node node_;
};

bool operator==(const Formula& a, const Formula& b);
inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

// Conditional statement (head ? body): the head must be atomic.
struct ConditionalFormula {
    ConditionalFormula(Formula::Ptr head, Formula::Ptr body);
    Formula::Ptr head;
    Formula::Ptr body;
};

using ParseResult = std::variant<Formula::Ptr, ConditionalFormula>;

// Grammar (fully parenthesized):
//   formula     := atom | (! formula) | (formula & formula) | (formula | formula)
//   conditional := (atom ? formula)
//   atom        := (NAME = NAME)
// A conditional may appear only at top level.
ParseResult parse_formula(std::string_view text);

std::string render_ascii(const Formula& f);
std::string render_ascii(const ConditionalFormula& c);
std::string render_unicode(const Formula& f);
std::string render_unicode(const ConditionalFormula& c);
std::string render_ascii(const ParseResult& r);
std::string render_unicode(const ParseResult& r);

} // namespace lingua
