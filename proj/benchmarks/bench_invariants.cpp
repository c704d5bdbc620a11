#include <benchmark/benchmark.h>

#include "twobridge/conway.hpp"
#include "twobridge/enumerate.hpp"
#include "twobridge/gauss_forms.hpp"
#include "twobridge/jones.hpp"
#include "twobridge/obstruction.hpp"
#include "twobridge/seifert.hpp"

namespace {

const tb::ConwayForm& sample_form() {
    static const tb::ConwayForm k =
        tb::ConwayForm::parse("C[6,-2,2,-4,4,-2,2,-6]");
    return k;
}

void BM_determinant(benchmark::State& state) {
    const auto& k = sample_form();
    for (auto _ : state) {
        benchmark::DoNotOptimize(k.determinant());
    }
}
BENCHMARK(BM_determinant);

void BM_a2_gauss(benchmark::State& state) {
    const auto& k = sample_form();
    for (auto _ : state) {
        benchmark::DoNotOptimize(tb::a2_gauss(k));
    }
}
BENCHMARK(BM_a2_gauss);

void BM_four_v3_gauss(benchmark::State& state) {
    const auto& k = sample_form();
    for (auto _ : state) {
        benchmark::DoNotOptimize(tb::four_v3_gauss(k));
    }
}
BENCHMARK(BM_four_v3_gauss);

void BM_conway_polynomial(benchmark::State& state) {
    const auto& k = sample_form();
    for (auto _ : state) {
        benchmark::DoNotOptimize(tb::conway_polynomial(k));
    }
}
BENCHMARK(BM_conway_polynomial);

void BM_jones_polynomial(benchmark::State& state) {
    const auto& k = sample_form();
    for (auto _ : state) {
        benchmark::DoNotOptimize(tb::jones_polynomial(k));
    }
}
BENCHMARK(BM_jones_polynomial);

void BM_total_signature(benchmark::State& state) {
    const auto& k = sample_form();
    for (auto _ : state) {
        benchmark::DoNotOptimize(tb::total_signature(k, 12));
    }
}
BENCHMARK(BM_total_signature);

void BM_verdict(benchmark::State& state) {
    const auto& k = sample_form();
    for (auto _ : state) {
        benchmark::DoNotOptimize(tb::verdict(k));
    }
}
BENCHMARK(BM_verdict);

void BM_enumerate(benchmark::State& state) {
    tb::EnumerationSpec spec;
    spec.max_complexity = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long n = 0;
        tb::enumerate(spec, [&](const tb::ConwayForm& k) {
            benchmark::DoNotOptimize(k.determinant());
            ++n;
        });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_enumerate)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
