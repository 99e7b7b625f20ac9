// Benchmarks for the exact kernels: Smith normal form on boundary-like
// matrices, totalization assembly, and the Verdier decider on polygon
// posets. Build with -DCMAKE_BUILD_TYPE=Release.

#include <random>

#include <benchmark/benchmark.h>

#include "verdier/corpus.hpp"
#include "verdier/duality.hpp"
#include "verdier/simplicial.hpp"
#include "verdier/snf.hpp"

using namespace verdier;

namespace {

IntMatrix boundary_like(int rows, int cols, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::vector<Triplet> ts;
    for (int c = 0; c < cols; ++c) {
        // a few +-1 entries per column, like a simplicial boundary
        const int nnz = 3 + static_cast<int>(rng() % 2);
        for (int k = 0; k < nnz; ++k)
            ts.push_back({static_cast<int>(rng() % rows), c, (rng() % 2) ? 1LL : -1LL});
    }
    return IntMatrix::from_triplets(rows, cols, std::move(ts));
}

void BM_InvariantFactorsBoundary(benchmark::State& state) {
    const IntMatrix m = boundary_like(static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(0) * 2), 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(invariant_factors(m));
}
BENCHMARK(BM_InvariantFactorsBoundary)->Arg(100)->Arg(300);

void BM_SdPoincareHomology(benchmark::State& state) {
    // the acceptance-scale workload: reduced homology of the barycentric
    // subdivision of the bundled homology sphere (9424 faces)
    const SimplicialComplex k = poincare_sphere_complex();
    const SimplicialComplex sd = order_complex(face_poset(k));
    for (auto _ : state) {
        const ChainComplex chains = sd.boundary_matrices(Ring::integers());
        benchmark::DoNotOptimize(homology(chains).is_zero());
    }
}
BENCHMARK(BM_SdPoincareHomology);

void BM_SmithDecompositionDense(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<std::vector<long long>> rows(8, std::vector<long long>(8));
    for (auto& r : rows)
        for (auto& v : r)
            v = static_cast<long long>(rng() % 9) - 4;
    const IntMatrix m = IntMatrix::from_rows(rows);
    for (auto _ : state)
        benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithDecompositionDense);

void BM_HolimConstant(benchmark::State& state) {
    const FinitePoset p = boundary_simplex_poset(3);
    const Diagram f = constant_diagram(p, ChainComplex::concentrated(Ring::integers(), 0, 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(holim(f).complex().total_rank());
}
BENCHMARK(BM_HolimConstant);

void BM_VerdierPolygon(benchmark::State& state) {
    const FinitePoset p = polygon_poset(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_verdier(p).verdict);
}
BENCHMARK(BM_VerdierPolygon)->Arg(4)->Arg(8)->Arg(12);

void BM_GorensteinPolygon(benchmark::State& state) {
    const FinitePoset p = polygon_poset(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_gorenstein_star_poset(p).verdict);
}
BENCHMARK(BM_GorensteinPolygon)->Arg(4)->Arg(8)->Arg(12);

} // namespace

BENCHMARK_MAIN();
