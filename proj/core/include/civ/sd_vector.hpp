#pragma once

#include <cstdint>
#include <span>

#include "civ/bitio.hpp"

namespace civ {

/*
 * Elias-Fano sparse bitvector (sdarray layout). Each set position p is split
 * into l = floor(log2(n / r)) low bits, stored verbatim, and a high part
 * p >> l, stored as a one at position (p >> l) + k in the `high` bitvector.
 * Select over `high` is accelerated by sampling the position of every 64th
 * one and every 64th zero.
 */
class SparseBitvector {
public:
    static constexpr uint64_t sample_rate = 64;

    SparseBitvector() = default;

    /// positions must be strictly increasing and < universe.
    static SparseBitvector build(std::span<const uint64_t> positions, uint64_t universe);

    uint64_t universe() const { return m_n; }
    uint64_t ones() const { return m_r; }
    uint64_t low_width() const { return m_l; }

    /// Number of set positions p < i, for 0 <= i <= universe().
    uint64_t rank1(uint64_t i) const;

    /// Position of the (k+1)-th set bit, 0 <= k < ones().
    uint64_t select1(uint64_t k) const;

    bool operator[](uint64_t i) const;

    /// Bits spent on low parts and the high bitvector.
    uint64_t payload_bits() const { return m_low.bit_size() + m_high.size(); }
    /// Bits spent on select samples.
    uint64_t sample_bits() const { return m_sel1.bit_size() + m_sel0.bit_size(); }
    uint64_t bit_size() const { return payload_bits() + sample_bits(); }

    /// Walks set positions in increasing order starting from the k-th one.
    class OnesIterator {
    public:
        OnesIterator() = default;
        OnesIterator(const SparseBitvector* v, uint64_t k);
        /// Position of the current one; undefined when k == ones().
        uint64_t value() const { return m_value; }
        uint64_t rank() const { return m_k; }
        void advance();

    private:
        void load();

        const SparseBitvector* m_v = nullptr;
        uint64_t m_k = 0;
        uint64_t m_high_pos = 0;
        uint64_t m_value = 0;
    };

    OnesIterator ones_from(uint64_t k) const { return OnesIterator(this, k); }

    template <typename Visitor>
    void visit(Visitor& v) {
        v(m_n);
        v(m_r);
        v(m_l);
        v(m_low);
        v(m_high);
        v(m_sel1);
        v(m_sel0);
        validate();
    }

private:
    uint64_t select1_high(uint64_t k) const;
    uint64_t select0_high(uint64_t k) const;
    uint64_t next_one_high(uint64_t from) const;
    void validate() const;

    uint64_t m_n = 0;
    uint64_t m_r = 0;
    uint64_t m_l = 0;
    IntArray m_low;
    BitBuffer m_high;
    IntArray m_sel1;
    IntArray m_sel0;
};

}  // namespace civ
