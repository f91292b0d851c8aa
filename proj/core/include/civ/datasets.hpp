#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace civ {

using IntVector = std::vector<uint64_t>;

/// n values uniform in [0, max] from SplitMix64(seed), sorted ascending.
IntVector gen_sorted(uint64_t n, uint64_t max, uint64_t seed);

inline constexpr uint64_t sorted_default_max = uint64_t(1) << 30;

/*
 * Raw text with an implicit terminator. Bytes are remapped to 1..256 and the
 * terminator, appended at the end, is 0, so it sorts before every symbol.
 */
class TextInput {
public:
    explicit TextInput(std::span<const uint8_t> bytes);
    explicit TextInput(std::string_view text);

    /// Length including the terminator.
    uint64_t size() const { return m_symbols.size(); }
    const std::vector<uint32_t>& symbols() const { return m_symbols; }

private:
    std::vector<uint32_t> m_symbols;
};

/// Suffix array by prefix doubling with radix-sorted rank pairs, O(n log n).
std::vector<uint64_t> suffix_array(const TextInput& t);

std::vector<uint64_t> inverse_permutation(std::span<const uint64_t> sa);

/*
 * bwt[i] = t[sa[i] - 1] (wrapping to the terminator when sa[i] = 0). Symbols
 * are reported as their original byte values and the terminator as 0, so
 * byte-range texts yield 8-bit vectors.
 */
IntVector bwt(const TextInput& t, std::span<const uint64_t> sa);

/// Kasai: lcp[0] = 0, lcp[i] = lcp(suffix sa[i-1], suffix sa[i]).
IntVector lcp(const TextInput& t, std::span<const uint64_t> sa);

/// psi[i] = isa[(sa[i] + 1) mod n]; 0-based, a permutation of 0..n-1.
IntVector psi(std::span<const uint64_t> sa);

IntVector bwt(const TextInput& t);
IntVector lcp(const TextInput& t);
IntVector psi(const TextInput& t);

struct DatasetStats {
    uint64_t max_val = 0;
    uint64_t avg_val = 0;   // round-half-up integer mean
    int64_t max_diff = 0;   // signed successive difference of largest magnitude, first on ties
    uint64_t runs = 0;
};

/// Throws std::invalid_argument on an empty vector.
DatasetStats stats(std::span<const uint64_t> x);

/// Table-style rendering: one "name value" row per statistic.
std::string format_stats(const DatasetStats& s);

/*
 * IVEC file: "IVEC", width byte (8/16/32/64), n as 8 bytes little-endian,
 * then n values little-endian in that width. Writers pick the smallest width
 * covering the maximum.
 */
void write_ivec(std::ostream& out, std::span<const uint64_t> x);
IntVector read_ivec(std::istream& in);
void write_ivec_file(const std::filesystem::path& path, std::span<const uint64_t> x);
IntVector read_ivec_file(const std::filesystem::path& path);

/// First `limit` bytes of a file (all of it when limit is 0).
std::vector<uint8_t> read_text_file(const std::filesystem::path& path, uint64_t limit = 0);

}  // namespace civ
