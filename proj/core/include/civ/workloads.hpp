#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "civ/encoded_vector.hpp"
#include "civ/rng.hpp"

namespace civ {

enum class WorkloadKind { binsearch, seqsum, randsum };

std::string_view workload_name(WorkloadKind k);
std::optional<WorkloadKind> parse_workload(std::string_view name);

struct WorkloadSpec {
    WorkloadKind kind = WorkloadKind::seqsum;
    uint64_t ops = 0;
    uint64_t seed = 1;
};

struct WorkloadResult {
    uint64_t checksum = 0;  // wrapping sum of values (sums) or found indices (binsearch)
    uint64_t ops_done = 0;
};

/// Upper end of the uniform target range for binary searches.
inline constexpr uint64_t binsearch_target_max = uint64_t(1) << 30;

/*
 * Lower bound over a non-decreasing vector using only access(): smallest i
 * with x_i >= target, or n. At most ceil(log2 n) + 1 accesses; *accesses is
 * incremented per call when non-null.
 */
template <typename Vec>
uint64_t binary_search(const Vec& v, uint64_t target, uint64_t* accesses = nullptr) {
    uint64_t lo = 0, len = v.size();
    while (len > 0) {
        uint64_t half = len / 2;
        uint64_t mid = lo + half;
        if (accesses) ++*accesses;
        if (v.access(mid).value < target) {
            lo = mid + 1;
            len -= half + 1;
        } else {
            len = half;
        }
    }
    return lo;
}

template <typename Vec>
WorkloadResult run_binsearch(const Vec& v, uint64_t ops, uint64_t seed) {
    SplitMix64 rng(seed);
    WorkloadResult r;
    for (uint64_t q = 0; q < ops; ++q) r.checksum += binary_search(v, rng.up_to(binsearch_target_max));
    r.ops_done = ops;
    return r;
}

/// Sum of x_0..x_{m-1} via one access(0) and m - 1 next() calls. Throws if m > n.
template <typename Vec>
WorkloadResult run_seqsum(const Vec& v, uint64_t m, uint64_t /*seed*/ = 0) {
    if (m > v.size()) throw QueryError("seqsum: m exceeds vector length");
    WorkloadResult r;
    if (m == 0) return r;
    auto [first, cursor] = v.access(0);
    r.checksum = first;
    for (uint64_t k = 1; k < m; ++k) r.checksum += *cursor.next();
    r.ops_done = m;
    return r;
}

/// Sum of m entries at seeded uniform positions (with repetition), each via access().
template <typename Vec>
WorkloadResult run_randsum(const Vec& v, uint64_t m, uint64_t seed) {
    WorkloadResult r;
    if (m == 0) return r;
    if (v.size() == 0) throw QueryError("randsum: empty vector");
    SplitMix64 rng(seed);
    for (uint64_t k = 0; k < m; ++k) r.checksum += v.access(rng.below(v.size())).value;
    r.ops_done = m;
    return r;
}

template <typename Vec>
WorkloadResult run_workload(const Vec& v, const WorkloadSpec& spec) {
    switch (spec.kind) {
        case WorkloadKind::binsearch: return run_binsearch(v, spec.ops, spec.seed);
        case WorkloadKind::seqsum: return run_seqsum(v, spec.ops, spec.seed);
        case WorkloadKind::randsum: return run_randsum(v, spec.ops, spec.seed);
    }
    return {};
}

/// Dispatches once on the codec, then runs the concrete-typed loop.
inline WorkloadResult run_workload(const EncodedVector& v, const WorkloadSpec& spec) {
    return v.visit([&](const auto& concrete) { return run_workload(concrete, spec); });
}

}  // namespace civ
