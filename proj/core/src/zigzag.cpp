#include "civ/codecs/zigzag.hpp"

namespace civ {

std::vector<uint64_t> zigzag_differences(std::span<const uint64_t> x) {
    std::vector<uint64_t> out(x.size());
    uint64_t prev = 0;
    for (uint64_t i = 0; i < x.size(); ++i) {
        out[i] = zigzag_map(static_cast<int64_t>(x[i] - prev));
        prev = x[i];
    }
    return out;
}

}  // namespace civ
