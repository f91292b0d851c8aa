#include <benchmark/benchmark.h>

#include <memory>

#include "civ/datasets.hpp"
#include "civ/encoded_vector.hpp"
#include "civ/workloads.hpp"

using namespace civ;

namespace {

constexpr uint64_t n = uint64_t(1) << 20;

const IntVector& sorted_data() {
    static const IntVector x = gen_sorted(n, s9_max_value, 1);
    return x;
}

std::vector<CodecId> codecs() {
    auto v = compressed_variants();
    v.insert(v.begin(), CodecId{Codec::plain, false});
    return v;
}

// Built vectors are cached per codec so setup stays out of the timed loop.
const EncodedVector& encoded(int64_t k) {
    static std::vector<std::unique_ptr<EncodedVector>> cache(codecs().size());
    if (!cache[k]) cache[k] = std::make_unique<EncodedVector>(EncodedVector::build(sorted_data(), codecs()[k]));
    return *cache[k];
}

void BM_access(benchmark::State& state) {
    const auto& v = encoded(state.range(0));
    state.SetLabel(v.codec().name());
    SplitMix64 rng(3);
    for (auto _ : state) benchmark::DoNotOptimize(v[rng.below(n)]);
    state.SetItemsProcessed(state.iterations());
}

void BM_next(benchmark::State& state) {
    const auto& v = encoded(state.range(0));
    state.SetLabel(v.codec().name());
    for (auto _ : state) benchmark::DoNotOptimize(run_workload(v, {WorkloadKind::seqsum, n, 0}).checksum);
    state.SetItemsProcessed(state.iterations() * int64_t(n));
}

void BM_binsearch(benchmark::State& state) {
    const auto& v = encoded(state.range(0));
    state.SetLabel(v.codec().name());
    SplitMix64 rng(5);
    for (auto _ : state) benchmark::DoNotOptimize(binary_search(v, rng.up_to(s9_max_value)));
    state.SetItemsProcessed(state.iterations());
}

void each_codec(benchmark::internal::Benchmark* b) {
    for (int64_t k = 0; k < int64_t(codecs().size()); ++k) b->Arg(k);
}

}  // namespace

BENCHMARK(BM_access)->Apply(each_codec);
BENCHMARK(BM_next)->Apply(each_codec)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_binsearch)->Apply(each_codec);

BENCHMARK_MAIN();
