#pragma once

#include <vector>

#include "civ/codecs/common.hpp"

namespace civ {

struct GammaCode {
    static constexpr const char* name = "gamma";
    static void put(BitBuffer& b, uint64_t x) { gamma_put(b, x); }
    static uint64_t get(BitReader& r) { return gamma_get(r); }
};

struct DeltaCode {
    static constexpr const char* name = "delta";
    static void put(BitBuffer& b, uint64_t x) { delta_put(b, x); }
    static uint64_t get(BitReader& r) { return delta_get(r); }
};

/*
 * Concatenated Elias codewords of x + 1, with the bit offset of every h-th
 * entry sampled. access(i) decodes at most h codewords.
 */
template <typename Code>
class EliasVector {
public:
    class Cursor {
    public:
        Cursor() = default;
        Cursor(const EliasVector* v, BitReader r, uint64_t next) : m_v(v), m_reader(r), m_next(next) {}
        uint64_t index() const { return m_next; }
        std::optional<uint64_t> next() {
            if (m_next >= m_v->m_n) return std::nullopt;
            ++m_next;
            return Code::get(m_reader) - 1;
        }

    private:
        const EliasVector* m_v = nullptr;
        BitReader m_reader;
        uint64_t m_next = 0;
    };

    EliasVector() = default;

    static EliasVector build(std::span<const uint64_t> x, const CodecParams& params) {
        require_shiftable(x, Code::name);
        EliasVector v;
        v.m_n = x.size();
        v.m_h = params.h;
        std::vector<uint64_t> offsets;
        offsets.reserve(x.size() / params.h + 1);
        for (uint64_t i = 0; i < x.size(); ++i) {
            if (i % params.h == 0) offsets.push_back(v.m_payload.size());
            Code::put(v.m_payload, x[i] + 1);
        }
        v.m_payload.shrink_to_fit();
        v.m_samples = make_samples(offsets, v.m_payload.size());
        return v;
    }

    uint64_t size() const { return m_n; }
    uint64_t sampling() const { return m_h; }
    /// Bit offset of entry s * h in the payload.
    uint64_t sample_offset(uint64_t s) const { return m_samples[s]; }

    Access<Cursor> access(uint64_t i) const {
        check_index(i, m_n);
        BitReader r(m_payload, m_samples[i / m_h]);
        for (uint64_t k = i % m_h; k > 0; --k) Code::get(r);
        uint64_t value = Code::get(r) - 1;
        return {value, Cursor(this, r, i + 1)};
    }

    Space space() const { return {m_payload.size(), m_samples.bit_size(), 0}; }

    template <typename Visitor>
    void visit(Visitor& v) {
        v(m_n);
        v(m_h);
        v(m_payload);
        v(m_samples);
        if (m_h == 0 || m_samples.size() != (m_n + m_h - 1) / m_h) throw FormatError("elias: bad sampling");
        for (uint64_t s = 0; s < m_samples.size(); ++s)
            if (m_samples[s] > m_payload.size()) throw FormatError("elias: sample past payload");
    }

private:
    uint64_t m_n = 0;
    uint64_t m_h = 1;
    BitBuffer m_payload;
    IntArray m_samples;
};

using GammaVector = EliasVector<GammaCode>;
using DeltaVector = EliasVector<DeltaCode>;

}  // namespace civ
