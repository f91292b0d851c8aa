#pragma once

#include <vector>

#include "civ/codecs/common.hpp"
#include "civ/sd_vector.hpp"

namespace civ {

/*
 * Run-length vector: heads H[0..r) hold the value of each maximal run in
 * minimal fixed width, and a sparse bitvector B over [0, n) marks the first
 * position of every run. x_i = H[rank1(B, i + 1) - 1].
 */
class RlVector {
public:
    class Cursor {
    public:
        Cursor() = default;
        Cursor(const RlVector* v, uint64_t next) : m_v(v), m_next(next) {
            if (next >= v->m_n) return;
            // Run holding `next`, and the iterator parked on the following run start.
            m_run = v->m_starts.rank1(next + 1) - 1;
            m_value = v->m_heads[m_run];
            m_boundary = v->m_starts.ones_from(m_run + 1);
        }
        uint64_t index() const { return m_next; }
        std::optional<uint64_t> next() {
            if (m_next >= m_v->m_n) return std::nullopt;
            if (m_next == m_boundary.value()) {
                m_value = m_v->m_heads[++m_run];
                m_boundary.advance();
            }
            ++m_next;
            return m_value;
        }

    private:
        const RlVector* m_v = nullptr;
        uint64_t m_next = 0;
        uint64_t m_run = 0;
        uint64_t m_value = 0;
        SparseBitvector::OnesIterator m_boundary;
    };

    RlVector() = default;

    static RlVector build(std::span<const uint64_t> x, const CodecParams& = {}) {
        RlVector v;
        v.m_n = x.size();
        std::vector<uint64_t> starts, heads;
        uint64_t max_head = 0;
        for (uint64_t i = 0; i < x.size(); ++i) {
            if (i == 0 || x[i] != x[i - 1]) {
                starts.push_back(i);
                heads.push_back(x[i]);
                max_head = std::max(max_head, x[i]);
            }
        }
        v.m_heads = IntArray(std::max<uint64_t>(1, bit_length(max_head)), heads);
        v.m_starts = SparseBitvector::build(starts, x.size());
        return v;
    }

    uint64_t size() const { return m_n; }
    uint64_t runs() const { return m_heads.size(); }
    const IntArray& heads() const { return m_heads; }
    const SparseBitvector& starts() const { return m_starts; }

    Access<Cursor> access(uint64_t i) const {
        check_index(i, m_n);
        return {m_heads[m_starts.rank1(i + 1) - 1], Cursor(this, i + 1)};
    }

    /// Heads are payload; the run-start bitvector and its select samples are auxiliary.
    Space space() const { return {m_heads.bit_size(), 0, m_starts.bit_size()}; }

    template <typename Visitor>
    void visit(Visitor& v) {
        v(m_n);
        v(m_heads);
        v(m_starts);
        if (m_starts.universe() != m_n || m_starts.ones() != m_heads.size() || (m_n > 0 && m_starts.ones() == 0) ||
            (m_n > 0 && m_starts.select1(0) != 0))
            throw FormatError("rl: inconsistent layout");
    }

private:
    uint64_t m_n = 0;
    IntArray m_heads;
    SparseBitvector m_starts;
};

}  // namespace civ
