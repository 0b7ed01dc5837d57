#include "gl11/gl11.hpp"

#include <benchmark/benchmark.h>

using namespace gl11;

namespace {

const Mode arb = Mode::arbitrary(Q(1, 2), Q(1, 3));

StdObject kac(Q alpha, long a) { return StdObject::kac(WeightComponent(alpha), WeightComponent(a), Parity(0)); }

template <class F>
void braiding_of_projectives(benchmark::State& state, const F& f) {
    const auto P = make_std(f, StdObject::proj(1, WeightComponent(0), Parity(0)));
    const auto PP = tensor(f, P, P);
    for (auto _ : state) benchmark::DoNotOptimize(braiding(f, PP, P));
}

void BM_BraidingNumeric(benchmark::State& s) { braiding_of_projectives(s, NumericField(arb)); }
void BM_BraidingExactR3(benchmark::State& s) { braiding_of_projectives(s, ExactField(Mode::rou_odd(3))); }

template <class F>
void trefoil_value(benchmark::State& state, const F& f) {
    const MorseWord w = trefoil(Color::of(kac(Q(1, 4), 0)));
    for (auto _ : state) benchmark::DoNotOptimize(fprime(f, w));
}

void BM_TrefoilNumeric(benchmark::State& s) { trefoil_value(s, NumericField(arb)); }
void BM_TrefoilExactR3(benchmark::State& s) { trefoil_value(s, ExactField(Mode::rou_odd(3))); }

void BM_KirbyPairNumeric(benchmark::State& state) {
    const NumericField f(arb);
    const auto [plain, blown] = kirby_one_pair(kac(Q(1, 3), 0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(cgp(f, blown).value);
}

void BM_VerlindeSurgery(benchmark::State& state) {
    const NumericField f(arb);
    SurfaceData s;
    s.genus = static_cast<int>(state.range(0));
    const Degree beta{WeightComponent(Q(1, 5)), WeightComponent(0)};
    for (auto _ : state) benchmark::DoNotOptimize(verlinde_surgery(f, s, beta).value);
}

void BM_VerlindeClosed(benchmark::State& state) {
    const NumericField f(arb);
    SurfaceData s;
    s.genus = static_cast<int>(state.range(0));
    const Degree beta{WeightComponent(Q(1, 5)), WeightComponent(0)};
    for (auto _ : state) benchmark::DoNotOptimize(verlinde_closed(f, s, beta));
}

void BM_TorusMcgExactR3(benchmark::State& state) {
    const ExactField f(Mode::rou_odd(3));
    for (auto _ : state) benchmark::DoNotOptimize(torus_mcg(f).S_);
}

void BM_GradedDimsR3(benchmark::State& state) {
    const Mode m = Mode::rou_odd(3);
    for (auto _ : state) benchmark::DoNotOptimize(graded_dims(m, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_BraidingNumeric);
BENCHMARK(BM_BraidingExactR3);
BENCHMARK(BM_TrefoilNumeric);
BENCHMARK(BM_TrefoilExactR3);
BENCHMARK(BM_KirbyPairNumeric);
BENCHMARK(BM_VerlindeSurgery)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerlindeClosed)->DenseRange(1, 5);
BENCHMARK(BM_TorusMcgExactR3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GradedDimsR3)->DenseRange(1, 4);

BENCHMARK_MAIN();
