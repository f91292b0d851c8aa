#pragma once

#include <algorithm>

#include "civ/codecs/common.hpp"

namespace civ {

/// Uncompressed baseline: every entry in the smallest of 8/16/32/64 bits covering the maximum.
class PlainVector {
public:
    class Cursor {
    public:
        Cursor() = default;
        Cursor(const PlainVector* v, uint64_t next) : m_v(v), m_next(next) {}
        uint64_t index() const { return m_next; }
        std::optional<uint64_t> next() {
            if (m_next >= m_v->m_n) return std::nullopt;
            return m_v->m_values[m_next++];
        }

    private:
        const PlainVector* m_v = nullptr;
        uint64_t m_next = 0;
    };

    PlainVector() = default;

    static PlainVector build(std::span<const uint64_t> x, const CodecParams& = {}) {
        PlainVector v;
        v.m_n = x.size();
        uint64_t m = x.empty() ? 0 : *std::max_element(x.begin(), x.end());
        v.m_values = IntArray(plain_width_for(m), x);
        return v;
    }

    uint64_t size() const { return m_n; }
    uint64_t width() const { return m_values.width(); }
    uint64_t operator[](uint64_t i) const { return m_values[i]; }

    Access<Cursor> access(uint64_t i) const {
        check_index(i, m_n);
        return {m_values[i], Cursor(this, i + 1)};
    }

    Space space() const { return {m_values.bit_size(), 0, 0}; }

    template <typename Visitor>
    void visit(Visitor& v) {
        v(m_n);
        v(m_values);
        if (m_values.size() != m_n) throw FormatError("plain: length mismatch");
    }

private:
    uint64_t m_n = 0;
    IntArray m_values{8};
};

}  // namespace civ
