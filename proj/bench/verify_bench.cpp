// Compares the level-parallel verifier kernel against the serial reference
// on covers that stress the subdivision (tight ratios, irregular bodies).

#include <benchmark/benchmark.h>

#include <random>

#include "homcov/compose.hpp"
#include "homcov/covering.hpp"

using namespace homcov;

namespace {

ConvexBody irregular_tetra(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ConvexBody b;
    do {
        std::vector<Vec> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(Vec(u(rng), u(rng), u(rng)));
        b = convex_hull(pts, 3);
    } while (b.affine_dim() < 3 || b.vertices().size() < 4);
    // recenter at the vertex average
    std::vector<Vec> moved;
    const Vec z = interior_point(b);
    for (const auto& v : b.vertices()) moved.push_back(v - z);
    return convex_hull(moved, 3);
}

HomothetCover tight_cover(const ConvexBody& tetra) {
    HullDecomposition decomp;
    decomp.ambient_dim = 3;
    const auto& v = tetra.vertices();
    for (int i = 0; i < 2; ++i) {
        HullDecomposition::Part part;
        part.body = convex_hull({v[static_cast<size_t>(2 * i)], v[static_cast<size_t>(2 * i + 1)]}, 3);
        part.cover = segment_cover(part.body, 2);
        decomp.parts.push_back(std::move(part));
    }
    HomothetCover cover = compose_cover(decomp);
    cover.gamma += 1e-6;
    return cover;
}

void bm_verify_parallel(benchmark::State& state) {
    const ConvexBody body = irregular_tetra(static_cast<std::uint64_t>(state.range(0)));
    const HomothetCover cover = tight_cover(body);
    for (auto _ : state) {
        auto v = verify_cover(body, cover, 1e-3 * body.diameter());
        benchmark::DoNotOptimize(v);
        if (v.kind != VerdictKind::Covered) state.SkipWithError("not covered");
    }
}

void bm_verify_serial(benchmark::State& state) {
    const ConvexBody body = irregular_tetra(static_cast<std::uint64_t>(state.range(0)));
    const HomothetCover cover = tight_cover(body);
    for (auto _ : state) {
        auto v = verify_cover_serial(body, cover, 1e-3 * body.diameter());
        benchmark::DoNotOptimize(v);
        if (v.kind != VerdictKind::Covered) state.SkipWithError("not covered");
    }
}

}  // namespace

BENCHMARK(bm_verify_parallel)->Arg(1)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_verify_serial)->Arg(1)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
