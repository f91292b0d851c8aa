#include "civ/codecs/pfor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace civ {

uint64_t pfd_max_exceptions(uint64_t len, double exception_frac) {
    return static_cast<uint64_t>(std::floor(exception_frac * static_cast<double>(len) + 1e-9));
}

uint64_t pfd_choose_width(std::span<const uint64_t> block, double exception_frac) {
    std::array<uint64_t, 65> hist{};
    for (uint64_t v : block) ++hist[bit_length(v)];
    const uint64_t allowed = pfd_max_exceptions(block.size(), exception_frac);
    // exceptions(b) = values with bit length > b
    uint64_t above = block.size();
    for (uint64_t b = 0; b <= 64; ++b) {
        above -= hist[b];
        if (above <= allowed) return b;
    }
    return 64;
}

PforBlockInfo pfd_encode_block(BitBuffer& out, std::span<const uint64_t> block, double exception_frac) {
    if (block.empty()) throw ContractViolation("pfd_encode_block: empty block");
    if (block.size() > PforVector::max_block) throw ContractViolation("pfd_encode_block: block too long");
    PforHeader h;
    h.b = pfd_choose_width(block, exception_frac);
    uint64_t max_high = 0;
    for (uint64_t v : block) {
        if (bit_length(v) > h.b) {
            ++h.exceptions;
            max_high = std::max(max_high, v >> h.b);
        }
    }
    h.high_width = bit_length(max_high);
    const uint64_t start = out.size();
    out.append_unchecked(h.b, PforHeader::b_bits);
    out.append_unchecked(h.exceptions, PforHeader::count_bits);
    out.append_unchecked(h.high_width, PforHeader::hw_bits);
    for (uint64_t v : block) out.append_unchecked(v & low_mask(h.b), h.b);
    const uint64_t pos_bits = pfd_position_bits(block.size());
    for (uint64_t k = 0; k < block.size(); ++k) {
        if (bit_length(block[k]) > h.b) {
            out.append_unchecked(k, pos_bits);
            out.append_unchecked(block[k] >> h.b, h.high_width);
        }
    }
    return {h, out.size() - start};
}

PforHeader pfd_read_header(const BitBuffer& in, uint64_t offset) {
    PforHeader h;
    h.b = in.get_bits(offset, PforHeader::b_bits);
    h.exceptions = in.get_bits(offset + PforHeader::b_bits, PforHeader::count_bits);
    h.high_width = in.get_bits(offset + PforHeader::b_bits + PforHeader::count_bits, PforHeader::hw_bits);
    return h;
}

uint64_t pfd_decode_block(const BitBuffer& in, uint64_t offset, uint64_t len, uint64_t* out) {
    PforHeader h = pfd_read_header(in, offset);
    uint64_t pos = offset + PforHeader::bits;
    for (uint64_t k = 0; k < len; ++k, pos += h.b) out[k] = in.get_bits(pos, h.b);
    const uint64_t pos_bits = pfd_position_bits(len);
    for (uint64_t e = 0; e < h.exceptions; ++e) {
        uint64_t k = in.get_bits(pos, pos_bits);
        out[k] |= in.get_bits(pos + pos_bits, h.high_width) << h.b;
        pos += pos_bits + h.high_width;
    }
    return pos - offset;
}

PforVector PforVector::build(std::span<const uint64_t> x, const CodecParams& params) {
    if (params.pfd_block == 0 || params.pfd_block > max_block || params.h % params.pfd_block != 0)
        throw ContractViolation("pfd: sampling step must be a multiple of a block length in 1..256");
    PforVector v;
    v.m_n = x.size();
    v.m_h = params.h;
    v.m_block = params.pfd_block;
    std::vector<uint64_t> offsets;
    offsets.reserve(x.size() / params.h + 1);
    for (uint64_t i = 0; i < x.size(); i += v.m_block) {
        if (i % v.m_h == 0) offsets.push_back(v.m_payload.size());
        pfd_encode_block(v.m_payload, x.subspan(i, std::min(v.m_block, x.size() - i)), params.pfd_exception_frac);
    }
    v.m_payload.shrink_to_fit();
    v.m_samples = make_samples(offsets, v.m_payload.size());
    return v;
}

uint64_t PforVector::block_bits(uint64_t offset, uint64_t len) const {
    PforHeader h = pfd_read_header(m_payload, offset);
    return PforHeader::bits + len * h.b + h.exceptions * (pfd_position_bits(len) + h.high_width);
}

Access<PforVector::Cursor> PforVector::access(uint64_t i) const {
    check_index(i, m_n);
    uint64_t offset = m_samples[i / m_h];
    uint64_t first = i / m_h * m_h;
    for (uint64_t b = first; b + m_block <= i; b += m_block) offset += block_bits(offset, m_block);
    const uint64_t block_begin = i / m_block * m_block;
    const uint64_t len = std::min(m_block, m_n - block_begin);
    const uint64_t k = i - block_begin;
    PforHeader h = pfd_read_header(m_payload, offset);
    uint64_t value = m_payload.get_bits(offset + PforHeader::bits + k * h.b, h.b);
    const uint64_t pos_bits = pfd_position_bits(len);
    uint64_t pos = offset + PforHeader::bits + len * h.b;
    for (uint64_t e = 0; e < h.exceptions; ++e, pos += pos_bits + h.high_width) {
        uint64_t p = m_payload.get_bits(pos, pos_bits);
        if (p == k) {
            value |= m_payload.get_bits(pos + pos_bits, h.high_width) << h.b;
            break;
        }
        if (p > k) break;
    }
    // The cursor re-decodes the block lazily, only if next() is called.
    uint64_t next_offset = offset;
    if (k + 1 == len) next_offset += block_bits(offset, len);
    return {value, Cursor(this, i + 1, next_offset)};
}

std::vector<PforHeader> PforVector::headers() const {
    std::vector<PforHeader> out;
    uint64_t offset = 0;
    for (uint64_t i = 0; i < m_n; i += m_block) {
        out.push_back(pfd_read_header(m_payload, offset));
        offset += block_bits(offset, std::min(m_block, m_n - i));
    }
    return out;
}

void PforVector::validate() const {
    if (m_block == 0 || m_block > max_block || m_h == 0 || m_h % m_block != 0)
        throw FormatError("pfd: bad block/sampling parameters");
    if (m_samples.size() != (m_n + m_h - 1) / m_h) throw FormatError("pfd: bad sample count");
    uint64_t offset = 0;
    for (uint64_t i = 0; i < m_n; i += m_block) {
        if (i % m_h == 0 && m_samples[i / m_h] != offset) throw FormatError("pfd: sample mismatch");
        if (offset + PforHeader::bits > m_payload.size()) throw FormatError("pfd: truncated block");
        PforHeader h = pfd_read_header(m_payload, offset);
        if (h.b > 64 || h.high_width > 64 || h.b + h.high_width > 64) throw FormatError("pfd: bad header");
        offset += block_bits(offset, std::min(m_block, m_n - i));
        if (offset > m_payload.size()) throw FormatError("pfd: truncated block");
    }
    if (offset != m_payload.size()) throw FormatError("pfd: trailing payload");
}

}  // namespace civ
