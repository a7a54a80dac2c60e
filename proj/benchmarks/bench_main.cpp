/*
   Copyright 2026 The twotier Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "twotier/bounds.hpp"
#include "twotier/montecarlo.hpp"

using namespace twotier;

static void BM_BuildRealization(benchmark::State& state)
{
    SystemParams p;
    std::uint64_t k = 0;
    for (auto _ : state) {
        RngStream rng(1, k++);
        benchmark::DoNotOptimize(build_realization_with_covered_mu(p, 700, rng));
    }
}
BENCHMARK(BM_BuildRealization);

static void BM_SirAtMbs(benchmark::State& state)
{
    SystemParams p;
    RngStream rng(2);
    const auto net = build_realization(p, std::nullopt, rng);
    const auto users = net.users_of(Server::mbs());
    for (auto _ : state) {
        benchmark::DoNotOptimize(sir_mu_at_mbs(net, UserRef::macro(users[0]), p, {}, rng));
    }
}
BENCHMARK(BM_SirAtMbs);

static void BM_PartitionAreas(benchmark::State& state)
{
    const auto grid = geometry::QuantizationGrid::uniform(0.1, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(geometry::partition_areas(700, 1000, grid));
    }
}
BENCHMARK(BM_PartitionAreas)->Arg(8)->Arg(32)->Arg(128);

static void BM_OutageBoundsAtFap(benchmark::State& state)
{
    SystemParams p;
    const auto grid = geometry::QuantizationGrid::uniform(p.kappa, 32);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounds::outage_bounds_at_fap(p, 700, grid));
    }
}
BENCHMARK(BM_OutageBoundsAtFap);

static void BM_AvgOutageBounds(benchmark::State& state)
{
    SystemParams p;
    const auto grid = geometry::QuantizationGrid::uniform(p.kappa, 32);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounds::avg_outage_bounds_at_fap(p, grid, 128));
    }
}
BENCHMARK(BM_AvgOutageBounds);

static void BM_EstimateOutageAtFap(benchmark::State& state)
{
    SystemParams p;
    mc::McOptions o;
    o.trials = 1000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::estimate_outage_at_fap(p, 700, o));
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_EstimateOutageAtFap)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
