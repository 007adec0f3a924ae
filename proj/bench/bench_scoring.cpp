// Serial reference vs OpenMP kernels. Build with -DCMAKE_BUILD_TYPE=Release;
// run ./bench_scoring from the build tree.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "childci/assets.hpp"
#include "childci/pipeline.hpp"
#include "childci/raster.hpp"
#include "childci/rng.hpp"
#include "childci/synth.hpp"
#include "childci/types.hpp"

using namespace childci;

namespace {

const Assets& assets() {
    static const Assets a = default_assets();
    return a;
}

std::vector<StylusStroke> scribble(int strokes, int samples) {
    Rng rng(42);
    std::vector<StylusStroke> out;
    for (int s = 0; s < strokes; ++s) {
        StylusStroke stroke;
        std::int64_t t = 0;
        for (int i = 0; i < samples; ++i) {
            stroke.samples.push_back({t += 15, rng.uniform(0, 1280), rng.uniform(0, 800), std::nullopt});
        }
        out.push_back(std::move(stroke));
    }
    return out;
}

std::vector<SessionLog> corpus(int n) {
    std::vector<SessionLog> sessions;
    for (int i = 0; i < n; ++i) {
        sessions.push_back(generate_session(SkillProfile::from_skill(0.2 + 0.6 * i / std::max(1, n - 1)),
                                            assets(), derive_seed(7, static_cast<std::uint64_t>(i))));
    }
    return sessions;
}

void BM_rasterize_serial(benchmark::State& state) {
    const auto strokes = scribble(static_cast<int>(state.range(0)), 64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rasterize(strokes, {1280, 800}, 512, 512, 4));
    }
}
BENCHMARK(BM_rasterize_serial)->Arg(8)->Arg(32);

void BM_rasterize_parallel(benchmark::State& state) {
    const auto strokes = scribble(static_cast<int>(state.range(0)), 64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rasterize_parallel(strokes, {1280, 800}, 512, 512, 4));
    }
}
BENCHMARK(BM_rasterize_parallel)->Arg(8)->Arg(32);

void BM_score_sessions_serial(benchmark::State& state) {
    const auto sessions = corpus(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(score_sessions_serial(sessions, assets()));
    }
}
BENCHMARK(BM_score_sessions_serial)->Arg(4)->Arg(16);

void BM_score_sessions_parallel(benchmark::State& state) {
    const auto sessions = corpus(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(score_sessions(sessions, assets()));
    }
}
BENCHMARK(BM_score_sessions_parallel)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
