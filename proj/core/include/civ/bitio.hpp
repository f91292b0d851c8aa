#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "civ/errors.hpp"

namespace civ {

inline constexpr uint64_t low_mask(uint64_t k) { return k >= 64 ? ~uint64_t(0) : (uint64_t(1) << k) - 1; }

/// Number of bits in the binary representation of x (0 for x = 0).
inline constexpr uint64_t bit_length(uint64_t x) { return 64 - std::countl_zero(x); }

/// floor(log2 x) for x >= 1.
inline constexpr uint64_t floor_log2(uint64_t x) { return 63 - std::countl_zero(x); }

/// ceil(log2 x) for x >= 1; 0 for x <= 1.
inline constexpr uint64_t ceil_log2(uint64_t x) { return x <= 1 ? 0 : bit_length(x - 1); }

/*
 * Append-only bit sequence stored LSB-first in 64-bit words. Bits at
 * positions >= size() in the last word are always zero, and the word count
 * is exactly ceil(size() / 64).
 */
class BitBuffer {
public:
    BitBuffer() = default;

    uint64_t size() const { return m_size; }
    bool empty() const { return m_size == 0; }
    std::span<const uint64_t> words() const { return m_words; }

    void reserve(uint64_t bits) { m_words.reserve((bits + 63) / 64); }

    /// Append the k low bits of value (0 <= k <= 64, value < 2^k).
    void write_bits(uint64_t value, uint64_t k) {
        if (k > 64) throw ContractViolation("write_bits: width exceeds 64");
        if (k < 64 && (value >> k) != 0) throw ContractViolation("write_bits: value does not fit width");
        append_unchecked(value, k);
    }

    void append_unchecked(uint64_t value, uint64_t k) {
        if (k == 0) return;
        uint64_t off = m_size & 63;
        if (off == 0) {
            m_words.push_back(value);
        } else {
            m_words.back() |= value << off;
            if (off + k > 64) m_words.push_back(value >> (64 - off));
        }
        m_size += k;
    }

    void push_back(bool bit) { append_unchecked(bit ? 1 : 0, 1); }

    /// Overwrite k bits at pos (pos + k <= size()).
    void set_bits(uint64_t pos, uint64_t value, uint64_t k) {
        if (k == 0) return;
        uint64_t w = pos >> 6, off = pos & 63;
        uint64_t mask = low_mask(k);
        value &= mask;
        m_words[w] = (m_words[w] & ~(mask << off)) | (value << off);
        if (off + k > 64) {
            uint64_t rem = off + k - 64;
            m_words[w + 1] = (m_words[w + 1] & ~low_mask(rem)) | (value >> (64 - off));
        }
    }

    /// Read k bits (0 <= k <= 64) starting at pos; pos + k <= size().
    uint64_t get_bits(uint64_t pos, uint64_t k) const {
        if (k == 0) return 0;
        uint64_t w = pos >> 6, off = pos & 63;
        uint64_t v = m_words[w] >> off;
        if (off + k > 64) v |= m_words[w + 1] << (64 - off);
        return v & low_mask(k);
    }

    bool get_bit(uint64_t pos) const { return (m_words[pos >> 6] >> (pos & 63)) & 1; }

    /// Up to 64 bits starting at pos, zero-filled past the end.
    uint64_t peek64(uint64_t pos) const {
        uint64_t w = pos >> 6, off = pos & 63;
        uint64_t v = w < m_words.size() ? m_words[w] >> off : 0;
        if (off != 0 && w + 1 < m_words.size()) v |= m_words[w + 1] << (64 - off);
        return v;
    }

    /// Rebuild from raw words; trailing garbage beyond bits is rejected.
    static BitBuffer from_words(std::vector<uint64_t> words, uint64_t bits) {
        if (words.size() != (bits + 63) / 64) throw FormatError("bit buffer: word count does not match bit length");
        if ((bits & 63) != 0 && (words.back() >> (bits & 63)) != 0)
            throw FormatError("bit buffer: nonzero padding bits");
        BitBuffer b;
        b.m_words = std::move(words);
        b.m_size = bits;
        return b;
    }

    void shrink_to_fit() { m_words.shrink_to_fit(); }

    friend bool operator==(const BitBuffer&, const BitBuffer&) = default;

private:
    std::vector<uint64_t> m_words;
    uint64_t m_size = 0;
};

/// Sequential reader over a frozen BitBuffer. Cheap to copy.
class BitReader {
public:
    BitReader() = default;
    explicit BitReader(const BitBuffer& buf, uint64_t pos = 0) : m_buf(&buf), m_pos(pos) {
        if (pos > buf.size()) throw ContractViolation("BitReader: position past end");
    }

    uint64_t position() const { return m_pos; }
    void seek(uint64_t pos) { m_pos = pos; }
    void skip(uint64_t k) { m_pos += k; }
    const BitBuffer* buffer() const { return m_buf; }

    uint64_t read_bits(uint64_t k) {
        if (m_pos + k > m_buf->size()) throw QueryError("BitReader: read past end");
        uint64_t v = m_buf->get_bits(m_pos, k);
        m_pos += k;
        return v;
    }

    /// Count zeros up to and including the next one bit; returns the zero count.
    uint64_t read_unary() {
        uint64_t zeros = 0;
        for (;;) {
            if (m_pos >= m_buf->size()) throw QueryError("BitReader: unterminated unary code");
            uint64_t w = m_buf->peek64(m_pos);
            if (w != 0) {
                uint64_t tz = std::countr_zero(w);
                m_pos += tz + 1;
                if (m_pos > m_buf->size()) throw QueryError("BitReader: unterminated unary code");
                return zeros + tz;
            }
            uint64_t step = 64 - (m_pos & 63);
            zeros += step;
            m_pos += step;
        }
    }

private:
    const BitBuffer* m_buf = nullptr;
    uint64_t m_pos = 0;
};

inline void write_bits(BitBuffer& buf, uint64_t value, uint64_t k) { buf.write_bits(value, k); }

/* Elias gamma: floor(log2 x) zeros, a one, then the floor(log2 x) bits below the MSB. */
inline uint64_t gamma_length(uint64_t x) { return 2 * floor_log2(x) + 1; }

inline void gamma_put(BitBuffer& buf, uint64_t x) {
    if (x == 0) throw ContractViolation("gamma_put: zero has no gamma codeword");
    uint64_t l = floor_log2(x);
    if (l < 32) {
        buf.append_unchecked((x & low_mask(l)) << (l + 1) | (uint64_t(1) << l), 2 * l + 1);
    } else {
        buf.append_unchecked(0, l);
        buf.append_unchecked(1, 1);
        buf.append_unchecked(x & low_mask(l), l);
    }
}

inline uint64_t gamma_get(BitReader& r) {
    uint64_t l = r.read_unary();
    if (l > 63) throw FormatError("gamma_get: codeword too long");
    return (uint64_t(1) << l) | r.read_bits(l);
}

/* Elias delta: gamma(floor(log2 x) + 1), then the floor(log2 x) bits below the MSB. */
inline uint64_t delta_length(uint64_t x) {
    uint64_t l = floor_log2(x);
    return l + gamma_length(l + 1);
}

inline void delta_put(BitBuffer& buf, uint64_t x) {
    if (x == 0) throw ContractViolation("delta_put: zero has no delta codeword");
    uint64_t l = floor_log2(x);
    gamma_put(buf, l + 1);
    buf.append_unchecked(x & low_mask(l), l);
}

inline uint64_t delta_get(BitReader& r) {
    uint64_t l = gamma_get(r) - 1;
    if (l > 63) throw FormatError("delta_get: codeword too long");
    return (uint64_t(1) << l) | r.read_bits(l);
}

/// Fixed-width packed integer array on top of a BitBuffer.
class IntArray {
public:
    IntArray() = default;
    explicit IntArray(uint64_t width) : m_width(width) {
        if (width > 64) throw ContractViolation("IntArray: width exceeds 64");
    }
    IntArray(uint64_t width, std::span<const uint64_t> values) : IntArray(width) {
        m_bits.reserve(width * values.size());
        for (uint64_t v : values) push_back(v);
    }

    void push_back(uint64_t v) {
        m_bits.write_bits(v, m_width);
        ++m_size;
    }
    uint64_t operator[](uint64_t i) const { return m_bits.get_bits(i * m_width, m_width); }
    uint64_t size() const { return m_size; }
    uint64_t width() const { return m_width; }
    uint64_t bit_size() const { return m_bits.size(); }
    const BitBuffer& bits() const { return m_bits; }

    template <typename Visitor>
    void visit(Visitor& v) {
        v(m_width);
        v(m_size);
        v(m_bits);
        if (m_width > 64 || m_bits.size() != m_width * m_size) throw FormatError("IntArray: inconsistent layout");
    }

    friend bool operator==(const IntArray&, const IntArray&) = default;

private:
    uint64_t m_width = 0;
    uint64_t m_size = 0;
    BitBuffer m_bits;
};

}  // namespace civ
