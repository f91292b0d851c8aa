#include "civ/datasets.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "civ/codec_id.hpp"
#include "civ/errors.hpp"
#include "civ/rng.hpp"

namespace civ {

IntVector gen_sorted(uint64_t n, uint64_t max, uint64_t seed) {
    SplitMix64 rng(seed);
    IntVector x(n);
    for (auto& v : x) v = rng.up_to(max);
    std::sort(x.begin(), x.end());
    return x;
}

TextInput::TextInput(std::span<const uint8_t> bytes) {
    m_symbols.reserve(bytes.size() + 1);
    for (uint8_t b : bytes) m_symbols.push_back(uint32_t(b) + 1);
    m_symbols.push_back(0);
}

TextInput::TextInput(std::string_view text)
    : TextInput(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(text.data()), text.size())) {}

std::vector<uint64_t> suffix_array(const TextInput& t) {
    const auto& s = t.symbols();
    const uint64_t n = s.size();
    std::vector<uint64_t> sa(n), rank(n), tmp(n), second(n);
    if (n == 0) return sa;
    // Ranks stay below buckets: symbol values first, then dense ranks below n.
    uint64_t buckets = uint64_t(*std::max_element(s.begin(), s.end())) + 1;
    std::vector<uint64_t> count(std::max(buckets, n));

    for (uint64_t i = 0; i < n; ++i) rank[i] = s[i];
    // Initial order by first symbol.
    for (uint64_t i = 0; i < n; ++i) ++count[rank[i]];
    for (uint64_t c = 1; c < buckets; ++c) count[c] += count[c - 1];
    for (uint64_t i = n; i-- > 0;) sa[--count[rank[i]]] = i;

    for (uint64_t k = 1;; k <<= 1) {
        // Order by second key: suffixes without one first, then by sa.
        uint64_t p = 0;
        for (uint64_t i = n - std::min(k, n); i < n; ++i) second[p++] = i;
        for (uint64_t j = 0; j < n; ++j)
            if (sa[j] >= k) second[p++] = sa[j] - k;
        // Stable counting sort by first key.
        std::fill(count.begin(), count.begin() + buckets, 0);
        for (uint64_t i = 0; i < n; ++i) ++count[rank[i]];
        for (uint64_t c = 1; c < buckets; ++c) count[c] += count[c - 1];
        for (uint64_t j = n; j-- > 0;) sa[--count[rank[second[j]]]] = second[j];

        auto key2 = [&](uint64_t i) -> uint64_t { return i + k < n ? rank[i + k] + 1 : 0; };
        tmp[sa[0]] = 0;
        for (uint64_t j = 1; j < n; ++j) {
            uint64_t a = sa[j - 1], b = sa[j];
            bool same = rank[a] == rank[b] && key2(a) == key2(b);
            tmp[b] = tmp[a] + (same ? 0 : 1);
        }
        rank.swap(tmp);
        buckets = rank[sa[n - 1]] + 1;
        if (rank[sa[n - 1]] == n - 1 || k >= n) break;
    }
    return sa;
}

std::vector<uint64_t> inverse_permutation(std::span<const uint64_t> sa) {
    std::vector<uint64_t> isa(sa.size());
    for (uint64_t i = 0; i < sa.size(); ++i) isa[sa[i]] = i;
    return isa;
}

IntVector bwt(const TextInput& t, std::span<const uint64_t> sa) {
    const auto& s = t.symbols();
    const uint64_t n = s.size();
    IntVector out(n);
    for (uint64_t i = 0; i < n; ++i) {
        uint32_t sym = s[sa[i] == 0 ? n - 1 : sa[i] - 1];
        out[i] = sym == 0 ? 0 : sym - 1;
    }
    return out;
}

IntVector lcp(const TextInput& t, std::span<const uint64_t> sa) {
    const auto& s = t.symbols();
    const uint64_t n = s.size();
    IntVector out(n, 0);
    auto isa = inverse_permutation(sa);
    uint64_t h = 0;
    for (uint64_t i = 0; i < n; ++i) {
        if (isa[i] == 0) {
            h = 0;
            continue;
        }
        uint64_t j = sa[isa[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        out[isa[i]] = h;
        if (h > 0) --h;
    }
    return out;
}

IntVector psi(std::span<const uint64_t> sa) {
    const uint64_t n = sa.size();
    auto isa = inverse_permutation(sa);
    IntVector out(n);
    for (uint64_t i = 0; i < n; ++i) out[i] = isa[(sa[i] + 1) % n];
    return out;
}

IntVector bwt(const TextInput& t) { return bwt(t, suffix_array(t)); }
IntVector lcp(const TextInput& t) { return lcp(t, suffix_array(t)); }
IntVector psi(const TextInput& t) { return psi(suffix_array(t)); }

DatasetStats stats(std::span<const uint64_t> x) {
    if (x.empty()) throw std::invalid_argument("stats: empty vector");
    DatasetStats st;
    __uint128_t sum = 0;
    uint64_t best_mag = 0;
    st.runs = 1;
    for (uint64_t i = 0; i < x.size(); ++i) {
        st.max_val = std::max(st.max_val, x[i]);
        sum += x[i];
        if (i == 0) continue;
        if (x[i] != x[i - 1]) ++st.runs;
        uint64_t mag = x[i] >= x[i - 1] ? x[i] - x[i - 1] : x[i - 1] - x[i];
        if (mag > best_mag) {
            best_mag = mag;
            st.max_diff = x[i] >= x[i - 1] ? static_cast<int64_t>(mag) : -static_cast<int64_t>(mag);
        }
    }
    st.avg_val = static_cast<uint64_t>((sum + x.size() / 2) / x.size());
    return st;
}

std::string format_stats(const DatasetStats& s) {
    std::ostringstream os;
    os << "max val\t" << s.max_val << '\n'
       << "avg val\t" << s.avg_val << '\n'
       << "max diff\t" << s.max_diff << '\n'
       << "runs\t" << s.runs << '\n';
    return os.str();
}

namespace {

constexpr std::array<char, 4> ivec_magic = {'I', 'V', 'E', 'C'};

}

void write_ivec(std::ostream& out, std::span<const uint64_t> x) {
    uint64_t m = x.empty() ? 0 : *std::max_element(x.begin(), x.end());
    const uint64_t width = plain_width_for(m);
    const uint64_t bytes = width / 8;
    out.write(ivec_magic.data(), 4);
    out.put(static_cast<char>(width));
    std::vector<char> buf(8);
    uint64_t n = x.size();
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((n >> (8 * i)) & 0xff);
    out.write(buf.data(), 8);
    buf.resize(bytes * std::min<uint64_t>(x.size(), 1 << 16));
    for (uint64_t i = 0; i < x.size();) {
        uint64_t chunk = std::min<uint64_t>(x.size() - i, 1 << 16);
        for (uint64_t k = 0; k < chunk; ++k)
            for (uint64_t b = 0; b < bytes; ++b) buf[k * bytes + b] = static_cast<char>((x[i + k] >> (8 * b)) & 0xff);
        out.write(buf.data(), static_cast<std::streamsize>(chunk * bytes));
        i += chunk;
    }
    if (!out) throw std::runtime_error("ivec: write failed");
}

IntVector read_ivec(std::istream& in) {
    std::array<char, 4> m;
    if (!in.read(m.data(), 4) || m != ivec_magic) throw FormatError("ivec: bad magic");
    char wc;
    if (!in.get(wc)) throw FormatError("ivec: truncated header");
    const uint64_t width = static_cast<uint8_t>(wc);
    if (width != 8 && width != 16 && width != 32 && width != 64) throw FormatError("ivec: bad width");
    std::array<unsigned char, 8> nb;
    if (!in.read(reinterpret_cast<char*>(nb.data()), 8)) throw FormatError("ivec: truncated header");
    uint64_t n = 0;
    for (int i = 0; i < 8; ++i) n |= uint64_t(nb[i]) << (8 * i);
    const uint64_t bytes = width / 8;
    IntVector x;
    x.reserve(std::min<uint64_t>(n, uint64_t(1) << 28));
    std::vector<unsigned char> buf(bytes << 16);
    for (uint64_t i = 0; i < n;) {
        uint64_t chunk = std::min<uint64_t>(n - i, 1 << 16);
        if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(chunk * bytes)))
            throw FormatError("ivec: truncated payload");
        for (uint64_t k = 0; k < chunk; ++k) {
            uint64_t v = 0;
            for (uint64_t b = 0; b < bytes; ++b) v |= uint64_t(buf[k * bytes + b]) << (8 * b);
            x.push_back(v);
        }
        i += chunk;
    }
    return x;
}

void write_ivec_file(const std::filesystem::path& path, std::span<const uint64_t> x) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_ivec(out, x);
}

IntVector read_ivec_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_ivec(in);
}

std::vector<uint8_t> read_text_file(const std::filesystem::path& path, uint64_t limit) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<uint8_t> out;
    char buf[1 << 16];
    while (limit == 0 || out.size() < limit) {
        uint64_t want = sizeof buf;
        if (limit != 0) want = std::min<uint64_t>(want, limit - out.size());
        in.read(buf, static_cast<std::streamsize>(want));
        std::streamsize got = in.gcount();
        if (got <= 0) break;
        out.insert(out.end(), buf, buf + got);
    }
    return out;
}

}  // namespace civ
