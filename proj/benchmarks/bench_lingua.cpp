#include <lingua/degree_matrix.hpp>
#include <lingua/lfa.hpp>
#include <lingua/mass_assignment.hpp>
#include <lingua/linguistic_variable.hpp>
#include <lingua/description.hpp>

#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <string>
#include <vector>

namespace {

lingua::DegreeMatrix random_matrix(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    lingua::DegreeMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, u(rng));
    return m;
}

lingua::Lfa random_machine(std::mt19937& rng, std::size_t n) {
    std::vector<std::string> states, outputs{"u", "v"};
    for (std::size_t i = 0; i < n; ++i) states.push_back("q" + std::to_string(i + 1));
    std::uniform_real_distribution<double> u(0.1, 1.0);
    std::map<std::string, lingua::DegreeMatrix> delta, lambda;
    lingua::DegreeMatrix d(n, n), l(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) d.set(i, j, u(rng));
        for (std::size_t j = 0; j < 2; ++j) l.set(i, j, u(rng));
    }
    delta.emplace("a", d);
    lambda.emplace("a", l);
    return lingua::Lfa(states, {"a"}, outputs, delta, lambda);
}

void BM_MaxMinCompose(benchmark::State& state) {
    std::mt19937 rng(99);
    auto n = static_cast<std::size_t>(state.range(0));
    auto a = random_matrix(rng, n);
    auto b = random_matrix(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(lingua::maxmin_compose(a, b));
}
BENCHMARK(BM_MaxMinCompose)->Arg(8)->Arg(32)->Arg(128);

void BM_DeltaStar(benchmark::State& state) {
    std::mt19937 rng(7);
    auto m = random_machine(rng, static_cast<std::size_t>(state.range(0)));
    lingua::Word x(12, "a");
    for (auto _ : state) benchmark::DoNotOptimize(lingua::delta_star(m, x));
}
BENCHMARK(BM_DeltaStar)->Arg(4)->Arg(16)->Arg(64);

void BM_LambdaStar(benchmark::State& state) {
    std::mt19937 rng(13);
    auto m = random_machine(rng, static_cast<std::size_t>(state.range(0)));
    lingua::Word x(10, "a"), y;
    for (int i = 0; i < 10; ++i) y.push_back(i % 2 ? "u" : "v");
    for (auto _ : state)
        benchmark::DoNotOptimize(lingua::lambda_star(m, m.states().front(), x, y));
}
BENCHMARK(BM_LambdaStar)->Arg(4)->Arg(16)->Arg(64);

void BM_MassAssignment(benchmark::State& state) {
    std::vector<std::string> terms;
    std::map<std::string, double> grades;
    auto n = static_cast<std::size_t>(state.range(0));
    std::map<std::string, lingua::PiecewiseLinear> semantics;
    for (std::size_t i = 0; i < n; ++i) {
        terms.push_back("w" + std::to_string(i + 1));
        semantics.emplace(terms.back(), lingua::PiecewiseLinear(
            std::vector<lingua::Knot>{{0.0, 0.0}, {1.0, 1.0}}));
        grades[terms.back()] = static_cast<double>(n - i) / static_cast<double>(n);
    }
    lingua::LinguisticVariable var("V", terms, {0.0, 1.0}, semantics);
    auto d = lingua::LinguisticDescription::from_grades(var, grades);
    for (auto _ : state) benchmark::DoNotOptimize(lingua::mass_assignment(d));
}
BENCHMARK(BM_MassAssignment)->Arg(4)->Arg(16)->Arg(64);

} // namespace

BENCHMARK_MAIN();
