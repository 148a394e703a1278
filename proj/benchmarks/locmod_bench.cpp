#include <benchmark/benchmark.h>

#include "locmod/harness.hpp"
#include "locmod/localization.hpp"
#include "locmod/properties.hpp"

using namespace locmod;

namespace {

RingPtr ring_for(std::int64_t n) {
    return n == 16 ? product_ring(make_zn(2), make_zn(8)) : make_zn(static_cast<std::size_t>(n));
}

void BM_SubmoduleLattice(benchmark::State& state) {
    const auto ring = ring_for(state.range(0));
    for (auto _ : state) {
        const auto m = regular_module(ring);
        benchmark::DoNotOptimize(m->submodules().size());
    }
}
BENCHMARK(BM_SubmoduleLattice)->Arg(6)->Arg(12)->Arg(16)->Arg(36)->Arg(64);

void BM_LocalizeRegular(benchmark::State& state) {
    const auto ring = make_zn(static_cast<std::size_t>(state.range(0)));
    const auto sets = enumerate_multiplicative_sets(*ring);
    const auto m = regular_module(ring);
    for (auto _ : state)
        for (ElementSet s : sets) {
            const auto lr = localize_ring(ring, MultiplicativeSet::make(ring, s));
            benchmark::DoNotOptimize(localize_module(m, lr)->module()->size());
        }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * sets.size()));
}
BENCHMARK(BM_LocalizeRegular)->Arg(6)->Arg(8)->Arg(12);

void BM_NotPrimeSets(benchmark::State& state) {
    const auto m = regular_module(make_zn(static_cast<std::size_t>(state.range(0))));
    const auto subs = enumerate_submodules(m);
    for (auto _ : state)
        for (const auto& n : subs)
            if (n.elements() != m->all()) benchmark::DoNotOptimize(not_prime_set(n).elements.bits());
}
BENCHMARK(BM_NotPrimeSets)->Arg(12)->Arg(36)->Arg(64);

void BM_Sweep(benchmark::State& state, const char* id) {
    const auto config = named_corpus("small");
    for (auto _ : state) benchmark::DoNotOptimize(sweep(id, config).instances_examined);
}
BENCHMARK_CAPTURE(BM_Sweep, prime_transfer, "3.11")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, essential_transfer, "3.17")->Unit(benchmark::kMillisecond);

void BM_SweepStandardAll(benchmark::State& state) {
    auto config = standard_corpus_config();
    config.jobs = static_cast<std::size_t>(state.range(0));
    const auto ids = default_proposition_ids();
    for (auto _ : state) benchmark::DoNotOptimize(sweep_many(ids, config).size());
}
BENCHMARK(BM_SweepStandardAll)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
