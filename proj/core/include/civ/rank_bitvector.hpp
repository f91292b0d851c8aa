#pragma once

#include <bit>
#include <cstdint>

#include "civ/bitio.hpp"

namespace civ {

/*
 * Plain bitvector with a one-level rank directory: the number of ones
 * before every 512-bit block, in fixed width bit_length(size).
 */
class RankBitvector {
public:
    static constexpr uint64_t block_bits = 512;

    RankBitvector() = default;
    explicit RankBitvector(BitBuffer bits) : m_bits(std::move(bits)) { build_directory(); }

    /// Directory cost for a bitvector of len bits, in bits.
    static uint64_t directory_bits(uint64_t len) { return (len / block_bits + 1) * bit_length(len); }

    uint64_t size() const { return m_bits.size(); }
    bool operator[](uint64_t i) const { return m_bits.get_bit(i); }

    /// Ones in [0, i), 0 <= i <= size().
    uint64_t rank1(uint64_t i) const {
        uint64_t b = i / block_bits;
        uint64_t r = m_dir[b];
        auto words = m_bits.words();
        uint64_t w = b * (block_bits / 64);
        uint64_t end = i >> 6;
        for (; w < end; ++w) r += std::popcount(words[w]);
        if (i & 63) r += std::popcount(words[end] & low_mask(i & 63));
        return r;
    }

    uint64_t bit_size() const { return m_bits.size(); }
    uint64_t directory_bit_size() const { return m_dir.bit_size(); }
    const BitBuffer& bits() const { return m_bits; }

    template <typename Visitor>
    void visit(Visitor& v) {
        v(m_bits);
        v(m_dir);
        if (m_dir.size() != m_bits.size() / block_bits + 1) throw FormatError("RankBitvector: bad directory");
    }

private:
    void build_directory() {
        m_dir = IntArray(bit_length(m_bits.size()));
        uint64_t ones = 0;
        auto words = m_bits.words();
        for (uint64_t w = 0; w < words.size(); ++w) {
            if (w % (block_bits / 64) == 0) m_dir.push_back(ones);
            ones += std::popcount(words[w]);
        }
        while (m_dir.size() < m_bits.size() / block_bits + 1) m_dir.push_back(ones);
    }

    BitBuffer m_bits;
    IntArray m_dir;
};

}  // namespace civ
