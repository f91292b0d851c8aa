#pragma once

#include <array>
#include <vector>

#include "civ/codecs/common.hpp"

namespace civ {

/*
 * PForDelta block layout, LSB-first:
 *   header   b (7 bits) | exception count (9 bits) | high width hw (7 bits)
 *   slots    len * b bits, the low b bits of every value
 *   patches  count * (position (pos_bits) + high part (hw bits))
 * An exception is a value >= 2^b; its bits above b live in the patch list.
 */
struct PforHeader {
    static constexpr uint64_t b_bits = 7;
    static constexpr uint64_t count_bits = 9;
    static constexpr uint64_t hw_bits = 7;
    static constexpr uint64_t bits = b_bits + count_bits + hw_bits;

    uint64_t b = 0;
    uint64_t exceptions = 0;
    uint64_t high_width = 0;
};

struct PforBlockInfo {
    PforHeader header;
    uint64_t bits;  // total encoded size including header
};

/// Smallest b whose exception count stays within floor(frac * len).
uint64_t pfd_choose_width(std::span<const uint64_t> block, double exception_frac);

/// Max exceptions allowed for a block of len entries.
uint64_t pfd_max_exceptions(uint64_t len, double exception_frac);

/// Appends one encoded block to out. block.size() <= 256.
PforBlockInfo pfd_encode_block(BitBuffer& out, std::span<const uint64_t> block, double exception_frac);

/// Decodes a block of len entries starting at bit offset into out; returns its encoded size.
uint64_t pfd_decode_block(const BitBuffer& in, uint64_t offset, uint64_t len, uint64_t* out);

PforHeader pfd_read_header(const BitBuffer& in, uint64_t offset);

/// Bits needed for a patch position inside a block of block_len entries.
inline uint64_t pfd_position_bits(uint64_t block_len) { return std::max<uint64_t>(1, ceil_log2(block_len)); }

class PforVector {
public:
    static constexpr uint64_t max_block = 256;

    class Cursor {
    public:
        Cursor() = default;
        Cursor(const PforVector* v, uint64_t next, uint64_t block_offset)
            : m_v(v), m_next(next), m_block_offset(block_offset) {}
        uint64_t index() const { return m_next; }
        std::optional<uint64_t> next() {
            if (m_next >= m_v->m_n) return std::nullopt;
            uint64_t pos = m_next % m_v->m_block;
            if (!m_loaded || pos == 0) {
                if (m_loaded) m_block_offset += m_block_bits;
                uint64_t len = std::min(m_v->m_block, m_v->m_n - (m_next - pos));
                m_block_bits = pfd_decode_block(m_v->m_payload, m_block_offset, len, m_buf.data());
                m_loaded = true;
            }
            ++m_next;
            return m_buf[pos];
        }

    private:
        const PforVector* m_v = nullptr;
        uint64_t m_next = 0;
        uint64_t m_block_offset = 0;  // offset of the block holding entry m_next
        uint64_t m_block_bits = 0;
        bool m_loaded = false;
        std::array<uint64_t, max_block> m_buf{};
    };

    PforVector() = default;

    static PforVector build(std::span<const uint64_t> x, const CodecParams& params);

    uint64_t size() const { return m_n; }
    uint64_t block_length() const { return m_block; }
    /// Header of every block, in order (for inspection and tests).
    std::vector<PforHeader> headers() const;

    Access<Cursor> access(uint64_t i) const;

    Space space() const { return {m_payload.size(), m_samples.bit_size(), 0}; }

    template <typename Visitor>
    void visit(Visitor& v) {
        v(m_n);
        v(m_h);
        v(m_block);
        v(m_payload);
        v(m_samples);
        validate();
    }

private:
    uint64_t block_bits(uint64_t offset, uint64_t len) const;
    void validate() const;

    uint64_t m_n = 0;
    uint64_t m_h = 1024;
    uint64_t m_block = 128;
    BitBuffer m_payload;
    IntArray m_samples;
};

}  // namespace civ
