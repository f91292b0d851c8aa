#pragma once

#include <vector>

#include "civ/codecs/common.hpp"
#include "civ/rank_bitvector.hpp"

namespace civ {

/// Chunk widths b_1..b_L, low-order chunk first.
using DacPlan = std::vector<uint64_t>;

/// Exact size in bits of a DAC built over x with the given plan.
uint64_t dac_plan_cost(std::span<const uint64_t> x, const DacPlan& plan);

/// Plan minimizing dac_plan_cost, found by dynamic programming over the bit-length histogram.
DacPlan dac_plan_levels(std::span<const uint64_t> x);

/// The plan with every level b bits wide, the top level trimmed to the maximum bit length.
DacPlan dac_fixed_plan(uint64_t b, uint64_t max_bits);

/// Bit length of the largest value, at least 1.
uint64_t dac_max_bits(std::span<const uint64_t> x);

/*
 * Directly addressable codes: level l stores the b_l-bit chunk of every value
 * that reaches it, plus (below the top level) a continuation bit with rank
 * support mapping an entry to its position in level l + 1.
 */
class DacVector {
public:
    class Cursor {
    public:
        Cursor() = default;
        Cursor(const DacVector* v, uint64_t next);
        uint64_t index() const { return m_next; }
        std::optional<uint64_t> next() {
            if (m_next >= m_v->m_n) return std::nullopt;
            ++m_next;
            uint64_t value = 0, shift = 0;
            const uint64_t levels = m_v->m_chunks.size();
            for (uint64_t l = 0;; ++l) {
                uint64_t idx = m_pos[l]++;
                value |= m_v->m_chunks[l][idx] << shift;
                if (l + 1 == levels || !m_v->m_cont[l][idx]) break;
                shift += m_v->m_chunks[l].width();
            }
            return value;
        }

    private:
        const DacVector* m_v = nullptr;
        std::vector<uint64_t> m_pos;
        uint64_t m_next = 0;
    };

    DacVector() = default;

    /// Uses params.dac_widths when non-empty, else the optimizer plan.
    static DacVector build(std::span<const uint64_t> x, const CodecParams& params);
    static DacVector build(std::span<const uint64_t> x, const DacPlan& plan);

    uint64_t size() const { return m_n; }
    DacPlan plan() const;
    uint64_t levels() const { return m_chunks.size(); }
    /// Entries reaching level l.
    uint64_t level_size(uint64_t l) const { return m_chunks[l].size(); }
    uint64_t chunk(uint64_t l, uint64_t idx) const { return m_chunks[l][idx]; }
    /// Continuation bit of the idx-th entry of level l (false on the top level).
    bool continues(uint64_t l, uint64_t idx) const { return l + 1 < m_chunks.size() && m_cont[l][idx]; }

    uint64_t get(uint64_t i) const {
        uint64_t value = 0, shift = 0;
        const uint64_t levels = m_chunks.size();
        for (uint64_t l = 0;; ++l) {
            value |= m_chunks[l][i] << shift;
            if (l + 1 == levels || !m_cont[l][i]) break;
            shift += m_chunks[l].width();
            i = m_cont[l].rank1(i);
        }
        return value;
    }

    Access<Cursor> access(uint64_t i) const {
        check_index(i, m_n);
        return {get(i), Cursor(this, i + 1)};
    }

    Space space() const;

    template <typename Visitor>
    void visit(Visitor& v) {
        v(m_n);
        uint64_t levels = m_chunks.size();
        v(levels);
        if (levels == 0 || levels > 64) throw FormatError("dac: bad level count");
        m_chunks.resize(levels);
        m_cont.resize(levels - 1);
        for (auto& c : m_chunks) v(c);
        for (auto& c : m_cont) v(c);
        validate();
    }

private:
    void validate() const;

    uint64_t m_n = 0;
    std::vector<IntArray> m_chunks;
    std::vector<RankBitvector> m_cont;
};

}  // namespace civ
