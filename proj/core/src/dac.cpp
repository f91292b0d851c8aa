#include "civ/codecs/dac.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace civ {

namespace {

// above[c] = number of values whose bit length exceeds c.
std::array<uint64_t, 65> bits_histogram_suffix(std::span<const uint64_t> x) {
    std::array<uint64_t, 66> hist{};
    for (uint64_t v : x) ++hist[bit_length(v)];
    std::array<uint64_t, 65> above{};
    uint64_t acc = 0;
    for (int c = 64; c >= 0; --c) {
        above[c] = acc;
        acc += hist[c];
    }
    return above;
}

// Values stored in the level whose chunk starts at bit c.
uint64_t level_count(const std::array<uint64_t, 65>& above, uint64_t n, uint64_t c) { return c == 0 ? n : above[c]; }

// A level of m entries that is not the top one pays a continuation bit per entry plus the rank directory.
uint64_t continuation_cost(uint64_t m) { return m + RankBitvector::directory_bits(m); }

}  // namespace

uint64_t dac_max_bits(std::span<const uint64_t> x) {
    uint64_t m = 0;
    for (uint64_t v : x) m = std::max(m, v);
    return std::max<uint64_t>(1, bit_length(m));
}

uint64_t dac_plan_cost(std::span<const uint64_t> x, const DacPlan& plan) {
    auto above = bits_histogram_suffix(x);
    uint64_t n = x.size();
    uint64_t cost = 0, c = 0;
    for (size_t l = 0; l < plan.size(); ++l) {
        uint64_t m = level_count(above, n, c);
        cost += m * plan[l];
        if (l + 1 < plan.size()) cost += continuation_cost(m);
        c += plan[l];
    }
    return cost;
}

DacPlan dac_plan_levels(std::span<const uint64_t> x) {
    const uint64_t top = dac_max_bits(x);
    const uint64_t n = x.size();
    auto above = bits_histogram_suffix(x);

    // best[c]: cheapest encoding of bits [c, top) for the values reaching a level starting at c.
    constexpr uint64_t inf = std::numeric_limits<uint64_t>::max();
    std::vector<uint64_t> best(top + 1, inf), cut(top + 1, top);
    best[top] = 0;
    for (int64_t c = int64_t(top) - 1; c >= 0; --c) {
        uint64_t m = level_count(above, n, c);
        best[c] = m * (top - c);
        cut[c] = top;
        for (uint64_t e = c + 1; e < top; ++e) {
            uint64_t cost = m * (e - c) + continuation_cost(m) + best[e];
            if (cost < best[c]) {
                best[c] = cost;
                cut[c] = e;
            }
        }
    }
    DacPlan plan;
    for (uint64_t c = 0; c < top; c = cut[c]) plan.push_back(cut[c] - c);
    return plan;
}

DacPlan dac_fixed_plan(uint64_t b, uint64_t max_bits) {
    if (b == 0) throw ContractViolation("dac_fixed_plan: width must be >= 1");
    DacPlan plan;
    for (uint64_t c = 0; c < max_bits; c += b) plan.push_back(std::min(b, max_bits - c));
    return plan;
}

DacVector DacVector::build(std::span<const uint64_t> x, const CodecParams& params) {
    return build(x, params.dac_widths.empty() ? dac_plan_levels(x) : params.dac_widths);
}

DacVector DacVector::build(std::span<const uint64_t> x, const DacPlan& plan) {
    if (plan.empty()) throw ContractViolation("dac: empty plan");
    uint64_t covered = 0;
    for (uint64_t b : plan) {
        if (b == 0 || b > 64) throw ContractViolation("dac: level widths must lie in 1..64");
        covered += b;
    }
    uint64_t top = dac_max_bits(x);
    if (covered < top) {
        for (uint64_t i = 0; i < x.size(); ++i)
            if (bit_length(x[i]) > covered)
                throw BuildError("dac: value at index " + std::to_string(i) + " needs more bits than the plan covers");
    }

    DacVector v;
    v.m_n = x.size();
    const size_t levels = plan.size();
    v.m_chunks.reserve(levels);
    for (uint64_t b : plan) v.m_chunks.emplace_back(b);
    std::vector<BitBuffer> cont(levels - 1);

    for (uint64_t value : x) {
        uint64_t c = 0;
        uint64_t len = bit_length(value);
        for (size_t l = 0; l < levels; ++l) {
            v.m_chunks[l].push_back((value >> c) & low_mask(plan[l]));
            c += plan[l];
            if (l + 1 == levels) break;
            bool more = len > c;
            cont[l].push_back(more);
            if (!more) break;
        }
    }
    v.m_cont.reserve(cont.size());
    for (auto& b : cont) v.m_cont.emplace_back(std::move(b));
    return v;
}

DacPlan DacVector::plan() const {
    DacPlan p;
    for (const auto& c : m_chunks) p.push_back(c.width());
    return p;
}

Space DacVector::space() const {
    Space s;
    for (const auto& c : m_chunks) s.payload += c.bit_size();
    for (const auto& c : m_cont) {
        s.aux += c.bit_size() + c.directory_bit_size();
    }
    return s;
}

void DacVector::validate() const {
    if (m_chunks.empty() || m_chunks[0].size() != m_n) throw FormatError("dac: level 0 length mismatch");
    for (size_t l = 0; l + 1 < m_chunks.size(); ++l) {
        if (m_cont[l].size() != m_chunks[l].size()) throw FormatError("dac: continuation length mismatch");
        if (m_cont[l].rank1(m_cont[l].size()) != m_chunks[l + 1].size())
            throw FormatError("dac: level sizes inconsistent with continuation bits");
    }
    for (const auto& c : m_chunks)
        if (c.width() == 0) throw FormatError("dac: zero-width level");
}

DacVector::Cursor::Cursor(const DacVector* v, uint64_t next) : m_v(v), m_pos(v->m_chunks.size()), m_next(next) {
    if (next >= v->m_n) return;
    m_pos[0] = next;
    for (size_t l = 0; l + 1 < m_pos.size(); ++l) m_pos[l + 1] = v->m_cont[l].rank1(m_pos[l]);
}

}  // namespace civ
