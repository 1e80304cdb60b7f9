#include "lingua/formula.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace lingua {

Formula::Ptr Formula::atomic(std::string variable, std::string word) {
    if (variable.empty() || word.empty())
        throw ValidationError("atomic formula needs a variable and a word");
    return Ptr(new Formula(Atomic{std::move(variable), std::move(word)}));
}

Formula::Ptr Formula::negation(Ptr operand) {
    if (!operand)
        throw ValidationError("negation of null formula");
    return Ptr(new Formula(Not{std::move(operand)}));
}

Formula::Ptr Formula::conjunction(Ptr lhs, Ptr rhs) {
    if (!lhs || !rhs)
        throw ValidationError("conjunction of null formula");
    return Ptr(new Formula(And{std::move(lhs), std::move(rhs)}));
}

Formula::Ptr Formula::disjunction(Ptr lhs, Ptr rhs) {
    if (!lhs || !rhs)
        throw ValidationError("disjunction of null formula");
    return Ptr(new Formula(Or{std::move(lhs), std::move(rhs)}));
}

namespace {

void collect_variables(const Formula& f, std::vector<std::string>& out) {
    if (const auto* a = std::get_if<Formula::Atomic>(&f.node()))
        out.push_back(a->variable);
    else if (const auto* n = std::get_if<Formula::Not>(&f.node()))
        collect_variables(*n->operand, out);
    else if (const auto* c = std::get_if<Formula::And>(&f.node())) {
        collect_variables(*c->lhs, out);
        collect_variables(*c->rhs, out);
    } else if (const auto* d = std::get_if<Formula::Or>(&f.node())) {
        collect_variables(*d->lhs, out);
        collect_variables(*d->rhs, out);
    }
}

} // namespace

std::vector<std::string> Formula::variables() const {
    std::vector<std::string> out;
    collect_variables(*this, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node().index() != b.node().index())
        return false;
    if (const auto* x = std::get_if<Formula::Atomic>(&a.node())) {
        const auto& y = std::get<Formula::Atomic>(b.node());
        return x->variable == y.variable && x->word == y.word;
    }
    if (const auto* x = std::get_if<Formula::Not>(&a.node()))
        return *x->operand == *std::get<Formula::Not>(b.node()).operand;
    if (const auto* x = std::get_if<Formula::And>(&a.node())) {
        const auto& y = std::get<Formula::And>(b.node());
        return *x->lhs == *y.lhs && *x->rhs == *y.rhs;
    }
    const auto& x = std::get<Formula::Or>(a.node());
    const auto& y = std::get<Formula::Or>(b.node());
    return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
}

ConditionalFormula::ConditionalFormula(Formula::Ptr h, Formula::Ptr b)
    : head(std::move(h)), body(std::move(b)) {
    if (!head || !body)
        throw ValidationError("conditional formula needs a head and a body");
    if (!std::holds_alternative<Formula::Atomic>(head->node()))
        throw ConditionalHeadError("conditional head must be atomic");
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParseResult parse() {
        Item item = parse_item(true);
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing input after formula");
        if (item.conditional)
            return std::move(*item.conditional);
        return std::move(item.formula);
    }

private:
    struct Item {
        Formula::Ptr formula;
        std::optional<ConditionalFormula> conditional;
    };

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream msg;
        msg << what << " at position " << pos_;
        throw FormulaSyntaxError(msg.str(), pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c, const char* what) {
        skip_ws();
        if (peek() != c)
            fail(std::string("expected ") + what);
        ++pos_;
    }

    static bool name_char(char c) {
        return c != '\0' && !std::isspace(static_cast<unsigned char>(c)) &&
               std::string_view("()!&|?=").find(c) == std::string_view::npos;
    }

    std::string parse_name(const char* what) {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && name_char(text_[pos_]))
            ++pos_;
        if (pos_ == start)
            fail(std::string("expected ") + what);
        return std::string(text_.substr(start, pos_ - start));
    }

    Item parse_item(bool top_level) {
        expect('(', "'('");
        skip_ws();
        if (peek() == '!') {
            ++pos_;
            Item inner = parse_item(false);
            expect(')', "')'");
            return {Formula::negation(std::move(inner.formula)), std::nullopt};
        }
        if (peek() == '(') {
            Item lhs = parse_item(false);
            skip_ws();
            char op = peek();
            size_t op_pos = pos_;
            if (op != '&' && op != '|' && op != '?')
                fail("expected '&', '|' or '?'");
            ++pos_;
            if (op == '?' && !top_level) {
                pos_ = op_pos;
                fail("conditional is allowed only at top level");
            }
            Item rhs = parse_item(false);
            expect(')', "')'");
            if (op == '&')
                return {Formula::conjunction(std::move(lhs.formula), std::move(rhs.formula)),
                        std::nullopt};
            if (op == '|')
                return {Formula::disjunction(std::move(lhs.formula), std::move(rhs.formula)),
                        std::nullopt};
            return {nullptr,
                    ConditionalFormula(std::move(lhs.formula), std::move(rhs.formula))};
        }
        std::string variable = parse_name("a variable name");
        expect('=', "'='");
        std::string word = parse_name("a word");
        expect(')', "')'");
        return {Formula::atomic(std::move(variable), std::move(word)), std::nullopt};
    }

    std::string_view text_;
    size_t pos_ = 0;
};

std::string render(const Formula& f, bool unicode) {
    if (const auto* a = std::get_if<Formula::Atomic>(&f.node()))
        return "(" + a->variable + "=" + a->word + ")";
    if (const auto* n = std::get_if<Formula::Not>(&f.node()))
        return "(" + std::string(unicode ? "¬" : "!") + render(*n->operand, unicode) + ")";
    if (const auto* c = std::get_if<Formula::And>(&f.node()))
        return "(" + render(*c->lhs, unicode) + (unicode ? " ∧ " : " & ") +
               render(*c->rhs, unicode) + ")";
    const auto& d = std::get<Formula::Or>(f.node());
    return "(" + render(*d.lhs, unicode) + (unicode ? " ∨ " : " | ") +
           render(*d.rhs, unicode) + ")";
}

} // namespace

ParseResult parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string render_ascii(const Formula& f) { return render(f, false); }

std::string render_unicode(const Formula& f) { return render(f, true); }

std::string render_ascii(const ConditionalFormula& c) {
    return "(" + render(*c.head, false) + " ? " + render(*c.body, false) + ")";
}

std::string render_unicode(const ConditionalFormula& c) {
    return "(" + render(*c.head, true) + " | " + render(*c.body, true) + ")";
}

std::string render_ascii(const ParseResult& r) {
    if (const auto* f = std::get_if<Formula::Ptr>(&r))
        return render_ascii(**f);
    return render_ascii(std::get<ConditionalFormula>(r));
}

std::string render_unicode(const ParseResult& r) {
    if (const auto* f = std::get_if<Formula::Ptr>(&r))
        return render_unicode(**f);
    return render_unicode(std::get<ConditionalFormula>(r));
}

} // namespace lingua
