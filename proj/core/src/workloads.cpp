#include "civ/workloads.hpp"

namespace civ {

std::string_view workload_name(WorkloadKind k) {
    switch (k) {
        case WorkloadKind::binsearch: return "binsearch";
        case WorkloadKind::seqsum: return "seqsum";
        case WorkloadKind::randsum: return "randsum";
    }
    return "?";
}

std::optional<WorkloadKind> parse_workload(std::string_view name) {
    for (auto k : {WorkloadKind::binsearch, WorkloadKind::seqsum, WorkloadKind::randsum})
        if (workload_name(k) == name) return k;
    return std::nullopt;
}

}  // namespace civ
