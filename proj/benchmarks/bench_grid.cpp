#include <benchmark/benchmark.h>

#include <array>
#include <cstdlib>
#include <vector>

#include "covertex/checks.hpp"
#include "covertex/grid.hpp"
#include "covertex/lattice.hpp"
#include "covertex/models.hpp"

using namespace covertex;

namespace {

// The identity grid both kernels must produce, element for element.
std::vector<Check> cb_grid_serial(const VertexCoalgebra& V,
                                  const std::vector<std::array<long, 3>>& cube) {
    return grid_map_serial<Check>(cube.size(), [&](std::size_t i) {
        return check_cb(V, cube[i][0], cube[i][1], cube[i][2]);
    });
}

std::vector<Check> cb_grid_parallel(const VertexCoalgebra& V,
                                    const std::vector<std::array<long, 3>>& cube,
                                    int jobs) {
    return grid_map<Check>(
        cube.size(),
        [&](std::size_t i) { return check_cb(V, cube[i][0], cube[i][1], cube[i][2]); },
        jobs);
}

bool same_grid(const std::vector<Check>& a, const std::vector<Check>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].failures != b[i].failures || a[i].cases != b[i].cases) return false;
    }
    return true;
}

void bm_cb_grid(benchmark::State& state) {
    const long m = state.range(0);
    const int jobs = static_cast<int>(state.range(1));
    const VertexCoalgebra V = dual_differential(m);
    const auto cube = effective_window(V).cube();

    if (!same_grid(cb_grid_serial(V, cube), cb_grid_parallel(V, cube, 4))) {
        state.SkipWithError("parallel grid disagrees with serial reference");
        return;
    }

    for (auto _ : state) {
        auto grid = jobs == 0 ? cb_grid_serial(V, cube) : cb_grid_parallel(V, cube, jobs);
        benchmark::DoNotOptimize(grid.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(cube.size()));
    state.SetLabel(jobs == 0 ? "serial reference" : "parallel");
}

void bm_cross_validate(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    const VertexCoalgebra V = dual_differential(2);
    const LatticeOutcome out = propagate(V.name, Box3{-6, 6}, 20, true, true);
    if (!out.complete()) {
        state.SkipWithError("propagation did not cover the box");
        return;
    }
    for (auto _ : state) {
        Check c = cross_validate(V, out.cert, jobs);
        if (!c.passed()) {
            state.SkipWithError("cross-validation failed");
            return;
        }
        benchmark::DoNotOptimize(c.cases);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<long>(out.cert.steps.size()));
}

}  // namespace

// range(0) = truncation order m, range(1) = jobs (0 = serial reference path).
BENCHMARK(bm_cb_grid)
    ->ArgsProduct({{4, 5}, {0, 1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond);

// range(0) = jobs for replaying one 87k-step certificate against the model.
BENCHMARK(bm_cross_validate)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
