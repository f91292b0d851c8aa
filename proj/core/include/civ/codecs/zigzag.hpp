#pragma once

#include <vector>

#include "civ/codecs/common.hpp"

namespace civ {

/// -1 -> 1, 1 -> 2, -2 -> 3, 2 -> 4, ...
inline constexpr uint64_t zigzag_map(int64_t d) {
    return (static_cast<uint64_t>(d) << 1) ^ static_cast<uint64_t>(d >> 63);
}

inline constexpr int64_t zigzag_unmap(uint64_t u) {
    return static_cast<int64_t>(u >> 1) ^ -static_cast<int64_t>(u & 1);
}

/// Largest value the differenced variants accept, so every difference d has |d| < 2^62.
inline constexpr uint64_t zigzag_value_limit = (uint64_t(1) << 62) - 1;

/// zigzag(x_i - x_{i-1}) with x_{-1} = 0.
std::vector<uint64_t> zigzag_differences(std::span<const uint64_t> x);

/*
 * ZigZag-of-differences variant over any base codec. The base stores the
 * mapped differences with sampling step h; this layer samples the original
 * value at every h-th entry, so access(i) starts from x_{h * floor(i / h)}
 * and adds at most h - 1 decoded differences.
 */
template <typename Base>
class ZigZagVector {
public:
    class Cursor {
    public:
        Cursor() = default;
        Cursor(typename Base::Cursor base, uint64_t value) : m_base(std::move(base)), m_value(value) {}
        uint64_t index() const { return m_base.index(); }
        std::optional<uint64_t> next() {
            auto u = m_base.next();
            if (!u) return std::nullopt;
            m_value += static_cast<uint64_t>(zigzag_unmap(*u));
            return m_value;
        }

    private:
        typename Base::Cursor m_base;
        uint64_t m_value = 0;
    };

    ZigZagVector() = default;

    static ZigZagVector build(std::span<const uint64_t> x, const CodecParams& params) {
        for (uint64_t i = 0; i < x.size(); ++i)
            if (x[i] > zigzag_value_limit)
                throw BuildError("zigzag: value at index " + std::to_string(i) + " exceeds 2^62 - 1");
        ZigZagVector v;
        v.m_h = params.h;
        std::vector<uint64_t> samples;
        samples.reserve(x.size() / params.h + 1);
        for (uint64_t i = 0; i < x.size(); i += params.h) samples.push_back(x[i]);
        v.m_values = IntArray(64, samples);
        auto diffs = zigzag_differences(x);
        v.m_base = Base::build(diffs, params);
        return v;
    }

    uint64_t size() const { return m_base.size(); }
    const Base& base() const { return m_base; }

    Access<Cursor> access(uint64_t i) const {
        check_index(i, size());
        const uint64_t s = i / m_h;
        auto [ignored, base_cursor] = m_base.access(s * m_h);
        uint64_t value = m_values[s];
        for (uint64_t k = s * m_h; k < i; ++k) value += static_cast<uint64_t>(zigzag_unmap(*base_cursor.next()));
        return {value, Cursor(std::move(base_cursor), value)};
    }

    Space space() const {
        Space s = m_base.space();
        s.samples += m_values.bit_size();
        return s;
    }

    template <typename Visitor>
    void visit(Visitor& v) {
        v(m_h);
        v(m_values);
        v(m_base);
        if (m_h == 0 || m_values.size() != (size() + m_h - 1) / m_h) throw FormatError("zigzag: bad sampling");
    }

private:
    uint64_t m_h = 1;
    IntArray m_values{64};
    Base m_base;
};

}  // namespace civ
