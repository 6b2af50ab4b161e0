// Serial reference loop against the OpenMP loop, and the two bracket routes.

#include <benchmark/benchmark.h>

#include "ulie/freelie.hpp"
#include "ulie/verify.hpp"

namespace {

using namespace ulie;

VerifyOptions options(const benchmark::State& state) {
    VerifyOptions opt;
    opt.max_length = static_cast<unsigned>(state.range(0));
    opt.samples = 50;
    return opt;
}

void BM_VerifySerial(benchmark::State& state) {
    const VerifyOptions opt = options(state);
    for (auto _ : state) benchmark::DoNotOptimize(verify_presentation_serial(opt).ok());
}

void BM_VerifyParallel(benchmark::State& state) {
    const VerifyOptions opt = options(state);
    for (auto _ : state) benchmark::DoNotOptimize(verify_presentation(opt).ok());
}

// Pairs of regular words whose lengths add up to at most range(0).
std::vector<std::pair<LieElement, LieElement>> bracket_pairs(std::size_t total) {
    std::vector<std::pair<LieElement, LieElement>> out;
    const auto words = enumerate_regular(total - 1);
    for (const auto& a : words) {
        for (const auto& b : words) {
            if (a.length() + b.length() <= total) out.emplace_back(LieElement::basis(a), LieElement::basis(b));
        }
    }
    return out;
}

void BM_BracketRecursive(benchmark::State& state) {
    const auto pairs = bracket_pairs(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        for (const auto& [f, g] : pairs) benchmark::DoNotOptimize(lie_bracket(f, g).size());
    }
}

void BM_BracketByExpansion(benchmark::State& state) {
    const auto pairs = bracket_pairs(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        for (const auto& [f, g] : pairs) benchmark::DoNotOptimize(lie_bracket_by_expansion(f, g).size());
    }
}

}  // namespace

BENCHMARK(BM_VerifySerial)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketRecursive)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketByExpansion)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
