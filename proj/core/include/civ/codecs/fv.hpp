#pragma once

#include <vector>

#include "civ/codecs/common.hpp"

namespace civ {

/*
 * Ferragina-Venturini layout. Entry i is stored as x_i + 1 in exactly
 * bit_length(x_i + 1) bits. Its start offset is the absolute offset of its
 * block (every h entries) plus a per-entry relative offset of
 * ceil(log2(h * maxlen)) bits, so access is O(1).
 */
class FvVector {
public:
    class Cursor {
    public:
        Cursor() = default;
        Cursor(const FvVector* v, uint64_t next, uint64_t offset) : m_v(v), m_next(next), m_offset(offset) {}
        uint64_t index() const { return m_next; }
        std::optional<uint64_t> next() {
            if (m_next >= m_v->m_n) return std::nullopt;
            uint64_t end = m_v->offset(++m_next);
            uint64_t value = m_v->m_payload.get_bits(m_offset, end - m_offset) - 1;
            m_offset = end;
            return value;
        }

    private:
        const FvVector* m_v = nullptr;
        uint64_t m_next = 0;
        uint64_t m_offset = 0;
    };

    FvVector() = default;

    static FvVector build(std::span<const uint64_t> x, const CodecParams& params) {
        require_shiftable(x, "fv");
        FvVector v;
        v.m_n = x.size();
        v.m_h = params.h;
        uint64_t maxlen = 1;
        for (uint64_t e : x) maxlen = std::max(maxlen, bit_length(e + 1));
        std::vector<uint64_t> abs, rel;
        abs.reserve(x.size() / params.h + 1);
        rel.reserve(x.size());
        uint64_t block_start = 0;
        for (uint64_t i = 0; i < x.size(); ++i) {
            if (i % params.h == 0) {
                block_start = v.m_payload.size();
                abs.push_back(block_start);
            }
            rel.push_back(v.m_payload.size() - block_start);
            v.m_payload.append_unchecked(x[i] + 1, bit_length(x[i] + 1));
        }
        v.m_payload.shrink_to_fit();
        v.m_abs = make_samples(abs, v.m_payload.size());
        v.m_rel = IntArray(ceil_log2(params.h * maxlen), rel);
        return v;
    }

    uint64_t size() const { return m_n; }

    /// Start offset of entry i; offset(n) is the payload length.
    uint64_t offset(uint64_t i) const {
        if (i == m_n) return m_payload.size();
        return m_abs[i / m_h] + m_rel[i];
    }

    Access<Cursor> access(uint64_t i) const {
        check_index(i, m_n);
        uint64_t begin = offset(i), end = offset(i + 1);
        return {m_payload.get_bits(begin, end - begin) - 1, Cursor(this, i + 1, end)};
    }

    Space space() const { return {m_payload.size(), m_abs.bit_size(), m_rel.bit_size()}; }

    template <typename Visitor>
    void visit(Visitor& v) {
        v(m_n);
        v(m_h);
        v(m_payload);
        v(m_abs);
        v(m_rel);
        if (m_h == 0 || m_abs.size() != (m_n + m_h - 1) / m_h || m_rel.size() != m_n)
            throw FormatError("fv: inconsistent layout");
        for (uint64_t i = 0; i < m_n; ++i) {
            uint64_t b = offset(i), e = offset(i + 1);
            if (e <= b || e > m_payload.size() || e - b > 64) throw FormatError("fv: bad offsets");
        }
    }

private:
    uint64_t m_n = 0;
    uint64_t m_h = 1;
    BitBuffer m_payload;
    IntArray m_abs;
    IntArray m_rel;
};

}  // namespace civ
