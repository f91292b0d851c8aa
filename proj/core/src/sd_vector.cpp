#include "civ/sd_vector.hpp"

#include <bit>
#include <string>

namespace civ {

namespace {

// Position of the (k+1)-th one in w; w must hold more than k ones.
inline uint64_t select_in_word(uint64_t w, uint64_t k) {
    uint64_t shift = 0;
    for (;;) {
        uint64_t c = std::popcount(w & 0xff);
        if (k < c) break;
        k -= c;
        w >>= 8;
        shift += 8;
    }
    for (uint64_t i = 0; i < k; ++i) w &= w - 1;
    return shift + std::countr_zero(w);
}

bool degenerate(uint64_t n, uint64_t r) { return r == 0 || r == n; }

}  // namespace

SparseBitvector SparseBitvector::build(std::span<const uint64_t> positions, uint64_t universe) {
    SparseBitvector v;
    v.m_n = universe;
    v.m_r = positions.size();
    for (uint64_t k = 0; k < positions.size(); ++k) {
        if (positions[k] >= universe)
            throw BuildError("SparseBitvector: position " + std::to_string(positions[k]) + " out of range at index " +
                             std::to_string(k));
        if (k > 0 && positions[k] <= positions[k - 1])
            throw BuildError("SparseBitvector: positions not strictly increasing at index " + std::to_string(k));
    }
    if (degenerate(v.m_n, v.m_r)) return v;

    v.m_l = floor_log2(v.m_n / v.m_r);
    v.m_low = IntArray(v.m_l);
    uint64_t high_len = v.m_r + (v.m_n >> v.m_l) + 1;
    v.m_high.reserve(high_len);
    uint64_t sample_width = bit_length(high_len);
    v.m_sel1 = IntArray(sample_width);
    v.m_sel0 = IntArray(sample_width);

    uint64_t pos = 0;  // next bit to write in high
    uint64_t zeros = 0;
    auto emit_zero = [&] {
        if (zeros % sample_rate == 0) v.m_sel0.push_back(pos);
        v.m_high.push_back(false);
        ++zeros;
        ++pos;
    };
    for (uint64_t k = 0; k < positions.size(); ++k) {
        uint64_t p = positions[k];
        v.m_low.push_back(p & low_mask(v.m_l));
        uint64_t target = (p >> v.m_l) + k;
        while (pos < target) emit_zero();
        if (k % sample_rate == 0) v.m_sel1.push_back(pos);
        v.m_high.push_back(true);
        ++pos;
    }
    while (pos < high_len) emit_zero();
    v.m_high.shrink_to_fit();
    return v;
}

void SparseBitvector::validate() const {
    if (m_r > m_n) throw FormatError("SparseBitvector: more ones than universe");
    if (degenerate(m_n, m_r)) {
        if (m_l != 0 || m_low.size() != 0 || !m_high.empty()) throw FormatError("SparseBitvector: bad degenerate layout");
        return;
    }
    uint64_t high_len = m_r + (m_n >> m_l) + 1;
    if (m_l != floor_log2(m_n / m_r) || m_low.size() != m_r || m_low.width() != m_l || m_high.size() != high_len ||
        m_sel1.size() != (m_r + sample_rate - 1) / sample_rate ||
        m_sel0.size() != (high_len - m_r + sample_rate - 1) / sample_rate)
        throw FormatError("SparseBitvector: inconsistent layout");
}

uint64_t SparseBitvector::select1_high(uint64_t k) const {
    uint64_t pos = m_sel1[k / sample_rate];
    uint64_t rem = k % sample_rate;
    auto words = m_high.words();
    uint64_t w = pos >> 6;
    uint64_t cur = words[w] & ~low_mask(pos & 63);
    for (;;) {
        uint64_t c = std::popcount(cur);
        if (rem < c) return (w << 6) + select_in_word(cur, rem);
        rem -= c;
        cur = words[++w];
    }
}

uint64_t SparseBitvector::select0_high(uint64_t k) const {
    uint64_t pos = m_sel0[k / sample_rate];
    uint64_t rem = k % sample_rate;
    auto words = m_high.words();
    uint64_t w = pos >> 6;
    uint64_t cur = ~words[w] & ~low_mask(pos & 63);
    for (;;) {
        uint64_t c = std::popcount(cur);
        if (rem < c) return (w << 6) + select_in_word(cur, rem);
        rem -= c;
        cur = ~words[++w];
    }
}

uint64_t SparseBitvector::next_one_high(uint64_t from) const {
    auto words = m_high.words();
    uint64_t w = from >> 6;
    uint64_t cur = words[w] & ~low_mask(from & 63);
    while (cur == 0) cur = words[++w];
    return (w << 6) + std::countr_zero(cur);
}

uint64_t SparseBitvector::rank1(uint64_t i) const {
    if (i > m_n) throw ContractViolation("rank1: index past universe");
    if (m_r == 0) return 0;
    if (m_r == m_n) return i;
    if (i == m_n) return m_r;
    uint64_t hi = i >> m_l;
    uint64_t lo = i & low_mask(m_l);
    // Ones with high part < hi precede the hi-th zero of `high`.
    uint64_t begin = hi == 0 ? 0 : select0_high(hi - 1) - (hi - 1);
    uint64_t end = select0_high(hi) - hi;
    while (begin < end) {
        uint64_t mid = begin + (end - begin) / 2;
        if (m_low[mid] < lo)
            begin = mid + 1;
        else
            end = mid;
    }
    return begin;
}

uint64_t SparseBitvector::select1(uint64_t k) const {
    if (k >= m_r) throw QueryError("select1: rank " + std::to_string(k) + " >= ones " + std::to_string(m_r));
    if (m_r == m_n) return k;
    return ((select1_high(k) - k) << m_l) | m_low[k];
}

bool SparseBitvector::operator[](uint64_t i) const {
    if (i >= m_n) throw QueryError("SparseBitvector: index out of range");
    uint64_t r = rank1(i);
    return r < m_r && select1(r) == i;
}

SparseBitvector::OnesIterator::OnesIterator(const SparseBitvector* v, uint64_t k) : m_v(v), m_k(k) {
    if (k > v->m_r) throw QueryError("ones_from: rank past end");
    if (k < v->m_r && v->m_r != v->m_n) m_high_pos = v->select1_high(k);
    load();
}

void SparseBitvector::OnesIterator::load() {
    if (m_k >= m_v->m_r) {
        m_value = m_v->m_n;
        return;
    }
    if (m_v->m_r == m_v->m_n) {
        m_value = m_k;
        return;
    }
    m_value = ((m_high_pos - m_k) << m_v->m_l) | m_v->m_low[m_k];
}

void SparseBitvector::OnesIterator::advance() {
    ++m_k;
    if (m_k < m_v->m_r && m_v->m_r != m_v->m_n) m_high_pos = m_v->next_one_high(m_high_pos + 1);
    load();
}

}  // namespace civ
