#include <doctest.h>

#include <lingua/errors.hpp>
#include <lingua/mass_assignment.hpp>

#include "helpers.hpp"

#include <random>

using lingua::FocalSet;
using lingua::LinguisticDescription;
using lingua::MassAssignment;
using lingua::mass_assignment;

namespace {
const double kTol = 1e-9;
}

TEST_CASE("two-level assignment splits exactly") {
    auto size = testutil::make_size();
    auto d = lingua::describe(size, 25);  // small/1 + medium/0.5
    auto ma = mass_assignment(d);
    REQUIRE(ma.focal_sets().size() == 2);
    CHECK(ma.focal_sets()[0].words == std::vector<std::string>{"small"});
    CHECK(ma.focal_sets()[0].mass == 0.5);
    CHECK(ma.focal_sets()[1].words == std::vector<std::string>{"small", "medium"});
    CHECK(ma.focal_sets()[1].mass == 0.5);
    CHECK(ma.residual() == 0.0);
    CHECK(ma.normalized());
}

TEST_CASE("four-level assignment") {
    auto salary = testutil::make_salary();
    auto d = LinguisticDescription::from_grades(
        salary,
        {{"low", 0.33}, {"moderate", 0.95}, {"good", 1.0}, {"verygood", 0.44}});
    auto ma = mass_assignment(d);
    REQUIRE(ma.focal_sets().size() == 4);

    CHECK(ma.focal_sets()[0].words == std::vector<std::string>{"good"});
    CHECK(ma.focal_sets()[0].mass == doctest::Approx(0.05).epsilon(kTol));

    CHECK(ma.focal_sets()[1].words == std::vector<std::string>{"moderate", "good"});
    CHECK(ma.focal_sets()[1].mass == doctest::Approx(0.51).epsilon(kTol));

    CHECK(ma.focal_sets()[2].words ==
          std::vector<std::string>{"moderate", "good", "verygood"});
    CHECK(ma.focal_sets()[2].mass == doctest::Approx(0.11).epsilon(kTol));

    CHECK(ma.focal_sets()[3].words ==
          std::vector<std::string>{"low", "moderate", "good", "verygood"});
    CHECK(ma.focal_sets()[3].mass == doctest::Approx(0.33).epsilon(kTol));

    CHECK(ma.residual() == doctest::Approx(0.0).epsilon(kTol));
}

TEST_CASE("single full grade puts all mass on one set") {
    auto size = testutil::make_size();
    auto d = LinguisticDescription::from_grades(size, {{"large", 1.0}});
    auto ma = mass_assignment(d);
    REQUIRE(ma.focal_sets().size() == 1);
    CHECK(ma.focal_sets()[0].words == std::vector<std::string>{"large"});
    CHECK(ma.focal_sets()[0].mass == 1.0);
}

TEST_CASE("empty description is all residual") {
    auto size = testutil::make_size();
    auto d = LinguisticDescription::from_grades(size, {});
    auto ma = mass_assignment(d);
    CHECK(ma.focal_sets().empty());
    CHECK(ma.residual() == 1.0);
    CHECK(!ma.normalized());
}

TEST_CASE("assignment constructor validation") {
    CHECK_THROWS_AS(MassAssignment({FocalSet{{"a"}, 0.5}}, 0.2),
                    lingua::ValidationError);  // sums to 0.7
    CHECK_THROWS_AS(MassAssignment({FocalSet{{"a"}, -0.1}, FocalSet{{"a", "b"}, 1.1}}, 0.0),
                    lingua::ValidationError);
    CHECK_THROWS_AS(MassAssignment({FocalSet{{}, 1.0}}, 0.0), lingua::ValidationError);
    CHECK_THROWS_AS(MassAssignment({FocalSet{{"a", "a"}, 1.0}}, 0.0),
                    lingua::ValidationError);
    // not nested
    CHECK_THROWS_AS(MassAssignment({FocalSet{{"a"}, 0.5}, FocalSet{{"b"}, 0.5}}, 0.0),
                    lingua::ValidationError);
    CHECK_NOTHROW(MassAssignment({FocalSet{{"a"}, 0.5}, FocalSet{{"a", "b"}, 0.5}}, 0.0));
    CHECK_NOTHROW(MassAssignment({}, 1.0));
}

TEST_CASE("least-prejudiced distribution of a salary description") {
    auto salary = testutil::make_salary();
    auto d = LinguisticDescription::from_grades(
        salary,
        {{"low", 0.33}, {"moderate", 0.95}, {"good", 1.0}, {"verygood", 0.44}});
    auto pr = lingua::least_prejudiced(d);
    REQUIRE(pr.size() == 4);
    CHECK(pr[0] == doctest::Approx(0.0825).epsilon(kTol));
    CHECK(pr[1] == doctest::Approx(0.51 / 2 + 0.11 / 3 + 0.33 / 4).epsilon(kTol));
    CHECK(pr[2] == doctest::Approx(0.42416666666666664).epsilon(kTol));
    CHECK(pr[3] == doctest::Approx(0.11916666666666667).epsilon(kTol));
    CHECK(pr[0] + pr[1] + pr[2] + pr[3] == doctest::Approx(1.0).epsilon(kTol));

    CHECK(lingua::word_probability("good", d) ==
          doctest::Approx(0.42416666666666664).epsilon(kTol));
}

TEST_CASE("distribution over a scale description tracks the value") {
    auto scale = testutil::make_scale();
    auto at = [&](double x) {
        return lingua::word_probability("medium", lingua::describe(scale, x));
    };
    // rises linearly to the plateau center, falls symmetrically
    CHECK(at(4) == doctest::Approx(0.5).epsilon(kTol));
    CHECK(at(5) == doctest::Approx(1.0).epsilon(kTol));
    CHECK(at(6.5) == doctest::Approx(0.25).epsilon(kTol));
    CHECK(at(3.5) == doctest::Approx(0.25).epsilon(kTol));
    for (double x = 3.0; x <= 5.0 + 1e-12; x += 0.25)
        CHECK(at(x) == doctest::Approx((x - 3) / 2).epsilon(kTol));
    for (double x = 5.0; x <= 7.0 + 1e-12; x += 0.25)
        CHECK(at(x) == doctest::Approx((7 - x) / 2).epsilon(kTol));
}

TEST_CASE("subnormal descriptions have no distribution") {
    auto size = testutil::make_size();
    auto d = LinguisticDescription::from_grades(size, {{"small", 0.9}});
    CHECK_THROWS_AS(lingua::least_prejudiced(d), lingua::DomainError);
    CHECK_THROWS_AS(lingua::word_probability("small", d), lingua::DomainError);
}

TEST_CASE("random descriptions keep the invariants") {
    auto scale = testutil::make_scale();
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ux(0.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        auto d = lingua::describe(scale, ux(rng));
        auto ma = mass_assignment(d);

        double sum = ma.residual();
        for (const auto& fs : ma.focal_sets()) {
            CHECK(fs.mass > 0.0);
            sum += fs.mass;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(kTol));

        // nested, growing strictly
        for (std::size_t i = 0; i + 1 < ma.focal_sets().size(); ++i) {
            const auto& inner = ma.focal_sets()[i].words;
            const auto& outer = ma.focal_sets()[i + 1].words;
            CHECK(inner.size() < outer.size());
            for (const auto& w : inner)
                CHECK(std::find(outer.begin(), outer.end(), w) != outer.end());
        }

        if (d.normalized()) {
            auto pr = lingua::least_prejudiced(d);
            double total = 0.0;
            for (double p : pr) total += p;
            CHECK(total == doctest::Approx(1.0).epsilon(kTol));
        }
    }
}
