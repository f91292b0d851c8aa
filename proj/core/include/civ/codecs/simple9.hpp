#pragma once

#include <array>
#include <vector>

#include "civ/codecs/common.hpp"

namespace civ {

struct S9Layout {
    uint32_t count;
    uint32_t width;
};

/// Selector -> (values per word, bits per value), densest first.
inline constexpr std::array<S9Layout, 9> s9_layouts = {
    {{28, 1}, {14, 2}, {9, 3}, {7, 4}, {5, 5}, {4, 7}, {3, 9}, {2, 14}, {1, 28}}};

inline constexpr uint64_t s9_max_value = (uint64_t(1) << 28) - 1;

struct S9Block {
    uint32_t selector;
    uint32_t word;
    uint32_t consumed;
};

/*
 * Packs a prefix of pending into one 32-bit word: selector in bits 0..3,
 * values from bit 4 upward. Picks the densest layout whose width covers the
 * values it would consume; a short tail is padded with zeros.
 */
S9Block s9_pack_block(std::span<const uint64_t> pending);

/// Decodes count values of the word into out; returns the layout.
inline S9Layout s9_unpack_word(uint32_t word, uint64_t* out) {
    S9Layout lay = s9_layouts[word & 15];
    uint32_t payload = word >> 4;
    for (uint32_t k = 0; k < lay.count; ++k) out[k] = (payload >> (k * lay.width)) & low_mask(lay.width);
    return lay;
}

class Simple9Vector {
public:
    class Cursor {
    public:
        Cursor() = default;
        Cursor(const Simple9Vector* v, uint64_t next, uint64_t word, uint32_t slot)
            : m_v(v), m_next(next), m_word(word), m_slot(slot) {
            if (next < v->m_n) load();
        }
        uint64_t index() const { return m_next; }
        std::optional<uint64_t> next() {
            if (m_next >= m_v->m_n) return std::nullopt;
            if (m_slot == m_layout.count) {
                ++m_word;
                m_slot = 0;
                load();
            }
            ++m_next;
            return (m_payload >> (m_slot++ * m_layout.width)) & low_mask(m_layout.width);
        }

    private:
        void load() {
            uint32_t w = m_v->word(m_word);
            m_layout = s9_layouts[w & 15];
            m_payload = w >> 4;
        }

        const Simple9Vector* m_v = nullptr;
        uint64_t m_next = 0;
        uint64_t m_word = 0;
        uint32_t m_slot = 0;
        uint32_t m_payload = 0;
        S9Layout m_layout{1, 28};
    };

    Simple9Vector() = default;

    static Simple9Vector build(std::span<const uint64_t> x, const CodecParams& params);

    uint64_t size() const { return m_n; }
    uint64_t word_count() const { return m_words.size() / 32; }
    uint32_t word(uint64_t k) const {
        auto w = m_words.words();
        return static_cast<uint32_t>(w[k >> 1] >> ((k & 1) * 32));
    }

    Access<Cursor> access(uint64_t i) const {
        check_index(i, m_n);
        uint64_t off = m_samples[i / m_h];
        uint64_t w = off >> 5;
        uint32_t wv = word(w);
        S9Layout lay = s9_layouts[wv & 15];
        uint32_t slot = ((off & 31) - 4) / lay.width;
        // Skip whole words until the one holding entry i.
        for (uint64_t skip = i % m_h; skip > 0;) {
            uint32_t left = lay.count - slot;
            if (skip < left) {
                slot += skip;
                break;
            }
            skip -= left;
            wv = word(++w);
            lay = s9_layouts[wv & 15];
            slot = 0;
        }
        uint64_t value = ((wv >> 4) >> (slot * lay.width)) & low_mask(lay.width);
        return {value, Cursor(this, i + 1, w, slot + 1)};
    }

    Space space() const { return {m_words.size(), m_samples.bit_size(), 0}; }

    template <typename Visitor>
    void visit(Visitor& v);

private:
    uint64_t m_n = 0;
    uint64_t m_h = 1;
    BitBuffer m_words;  // 32-bit words, two per 64-bit storage word
    IntArray m_samples;
};

template <typename Visitor>
void Simple9Vector::visit(Visitor& v) {
    v(m_n);
    v(m_h);
    v(m_words);
    v(m_samples);
    if (m_h == 0 || m_words.size() % 32 != 0 || m_samples.size() != (m_n + m_h - 1) / m_h)
        throw FormatError("s9: inconsistent layout");
    uint64_t capacity = 0;
    for (uint64_t k = 0; k < word_count(); ++k) {
        if ((word(k) & 15) >= s9_layouts.size()) throw FormatError("s9: bad selector");
        capacity += s9_layouts[word(k) & 15].count;
    }
    if (capacity < m_n) throw FormatError("s9: payload shorter than length");
    for (uint64_t s = 0; s < m_samples.size(); ++s) {
        uint64_t off = m_samples[s];
        if ((off >> 5) >= word_count() || (off & 31) < 4) throw FormatError("s9: bad sample");
    }
}

}  // namespace civ
