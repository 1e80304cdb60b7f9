#include <doctest.h>

#include <lingua/errors.hpp>
#include <lingua/quantifier.hpp>

#include <map>

using lingua::Interval;
using lingua::LinguisticVariable;
using lingua::PiecewiseLinear;
using lingua::QuantifierIssue;
using lingua::QuantifierVariable;
using lingua::validate_quantifier;

namespace {

LinguisticVariable make_quantifiers() {
    std::map<std::string, PiecewiseLinear> sem;
    sem.emplace("none", PiecewiseLinear({{0, 1}, {0.25, 0}}));
    sem.emplace("few", PiecewiseLinear({{0, 0}, {0.25, 1}, {0.5, 0}}));
    sem.emplace("half", PiecewiseLinear({{0.25, 0}, {0.5, 1}, {0.75, 0}}));
    sem.emplace("most", PiecewiseLinear({{0.5, 0}, {0.75, 1}, {1, 0}}));
    sem.emplace("all", PiecewiseLinear({{0.75, 0}, {1, 1}}));
    return LinguisticVariable("QUANT", {"none", "few", "half", "most", "all"},
                              Interval{0, 1}, sem);
}

} // namespace

TEST_CASE("a symmetric five-word set validates") {
    auto report = validate_quantifier(make_quantifiers());
    CHECK(report.ok());
    CHECK_NOTHROW(QuantifierVariable(make_quantifiers()));
}

TEST_CASE("a two-word yes-no set validates") {
    std::map<std::string, PiecewiseLinear> sem;
    sem.emplace("no", PiecewiseLinear({{0, 1}, {1, 0}}));
    sem.emplace("yes", PiecewiseLinear({{0, 0}, {1, 1}}));
    LinguisticVariable v("ANSWER", {"no", "yes"}, Interval{0, 1}, sem);
    CHECK(validate_quantifier(v).ok());
    QuantifierVariable q(v);
    CHECK(q.antonym("no") == "yes");
    CHECK(q.antonym("yes") == "no");
}

TEST_CASE("wrong universe is reported first") {
    std::map<std::string, PiecewiseLinear> sem;
    sem.emplace("no", PiecewiseLinear({{0, 1}, {2, 0}}));
    sem.emplace("yes", PiecewiseLinear({{0, 0}, {2, 1}}));
    LinguisticVariable v("ANSWER", {"no", "yes"}, Interval{0, 2}, sem);
    auto report = validate_quantifier(v);
    REQUIRE(!report.ok());
    CHECK(report.issues.front().kind == QuantifierIssue::Kind::Universe);
    CHECK_THROWS_AS(QuantifierVariable{v}, lingua::ValidationError);
}

TEST_CASE("broken mirror symmetry is reported") {
    // few's peak pushed off its mirror position
    std::map<std::string, PiecewiseLinear> sem;
    sem.emplace("none", PiecewiseLinear({{0, 1}, {0.25, 0}}));
    sem.emplace("few", PiecewiseLinear({{0, 0}, {0.3, 1}, {0.5, 0}}));
    sem.emplace("half", PiecewiseLinear({{0.25, 0}, {0.5, 1}, {0.75, 0}}));
    sem.emplace("most", PiecewiseLinear({{0.5, 0}, {0.75, 1}, {1, 0}}));
    sem.emplace("all", PiecewiseLinear({{0.75, 0}, {1, 1}}));
    LinguisticVariable v("QUANT", {"none", "few", "half", "most", "all"},
                         Interval{0, 1}, sem);
    auto report = validate_quantifier(v);
    REQUIRE(!report.ok());
    bool symmetry_flagged = false;
    for (const auto& issue : report.issues)
        if (issue.kind == QuantifierIssue::Kind::AntonymSymmetry &&
            (issue.word == "few" || issue.word == "most"))
            symmetry_flagged = true;
    CHECK(symmetry_flagged);
}

TEST_CASE("coverage gaps are reported") {
    std::map<std::string, PiecewiseLinear> sem;
    sem.emplace("none", PiecewiseLinear({{0, 1}, {0.2, 0}}));
    sem.emplace("all", PiecewiseLinear({{0.8, 0}, {1, 1}}));
    LinguisticVariable v("QUANT", {"none", "all"}, Interval{0, 1}, sem);
    auto report = validate_quantifier(v);
    REQUIRE(!report.ok());
    bool coverage_flagged = false;
    for (const auto& issue : report.issues)
        if (issue.kind == QuantifierIssue::Kind::Coverage) coverage_flagged = true;
    CHECK(coverage_flagged);
}

TEST_CASE("antonyms mirror the word order") {
    QuantifierVariable q(make_quantifiers());
    CHECK(q.antonym("none") == "all");
    CHECK(q.antonym("few") == "most");
    CHECK(q.antonym("half") == "half");
    CHECK(q.antonym("most") == "few");
    CHECK(q.antonym("all") == "none");
    for (const auto& w : q.variable().terms()) CHECK(q.antonym(q.antonym(w)) == w);
    CHECK_THROWS_AS(q.antonym("several"), lingua::LookupError);
}

TEST_CASE("quantifying a proportion") {
    QuantifierVariable q(make_quantifiers());

    auto all = q.quantify(1.0);
    CHECK(all.grade("all") == 1.0);
    CHECK(all.grade("most") == 0.0);
    CHECK(all.grade("none") == 0.0);

    auto d = q.quantify(0.6);
    CHECK(d.grade("half") == doctest::Approx(0.6).epsilon(1e-9));
    CHECK(d.grade("most") == doctest::Approx(0.4).epsilon(1e-9));
    CHECK(d.grade("few") == 0.0);

    CHECK_THROWS_AS(q.quantify(-0.1), lingua::DomainError);
    CHECK_THROWS_AS(q.quantify(1.1), lingua::DomainError);
}

TEST_CASE("quantifier grades mirror under complementation") {
    QuantifierVariable q(make_quantifiers());
    const auto& terms = q.variable().terms();
    for (int i = 0; i <= 1000; ++i) {
        double p = static_cast<double>(i) / 1000.0;
        auto d = q.quantify(p);
        auto dc = q.quantify(1.0 - p);
        for (const auto& w : terms) {
            CHECK(d.grade(w) == doctest::Approx(dc.grade(q.antonym(w))).epsilon(1e-9));
        }
    }
}
