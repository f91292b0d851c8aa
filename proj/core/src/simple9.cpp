#include "civ/codecs/simple9.hpp"

#include <string>

namespace civ {

S9Block s9_pack_block(std::span<const uint64_t> pending) {
    if (pending.empty()) throw ContractViolation("s9_pack_block: nothing to pack");
    if (pending[0] > s9_max_value) throw BuildError("s9: value " + std::to_string(pending[0]) + " exceeds 28 bits");
    for (uint32_t sel = 0; sel < s9_layouts.size(); ++sel) {
        const auto [count, width] = s9_layouts[sel];
        uint32_t take = static_cast<uint32_t>(std::min<uint64_t>(count, pending.size()));
        uint64_t limit = low_mask(width);
        bool fits = true;
        for (uint32_t k = 0; k < take && fits; ++k) fits = pending[k] <= limit;
        if (!fits) continue;
        uint32_t payload = 0;
        for (uint32_t k = 0; k < take; ++k) payload |= static_cast<uint32_t>(pending[k]) << (k * width);
        return {sel, (payload << 4) | sel, take};
    }
    // Unreachable: the 1x28 layout always fits pending[0].
    throw ContractViolation("s9_pack_block: no layout");
}

Simple9Vector Simple9Vector::build(std::span<const uint64_t> x, const CodecParams& params) {
    for (uint64_t i = 0; i < x.size(); ++i)
        if (x[i] > s9_max_value)
            throw BuildError("s9: value at index " + std::to_string(i) + " exceeds 28 bits");
    Simple9Vector v;
    v.m_n = x.size();
    v.m_h = params.h;
    std::vector<uint64_t> offsets;
    offsets.reserve(x.size() / params.h + 1);
    std::vector<uint32_t> words;
    uint64_t i = 0;
    while (i < x.size()) {
        S9Block blk = s9_pack_block(x.subspan(i));
        uint32_t width = s9_layouts[blk.selector].width;
        // First sampled entry inside this word, if any.
        uint64_t first = (i + v.m_h - 1) / v.m_h * v.m_h;
        for (uint64_t e = first; e < i + blk.consumed; e += v.m_h)
            offsets.push_back(words.size() * 32 + 4 + (e - i) * width);
        words.push_back(blk.word);
        i += blk.consumed;
    }
    v.m_words.reserve(words.size() * 32);
    for (uint32_t w : words) v.m_words.append_unchecked(w, 32);
    v.m_samples = make_samples(offsets, v.m_words.size());
    return v;
}

}  // namespace civ
