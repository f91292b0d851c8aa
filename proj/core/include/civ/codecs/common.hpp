#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "civ/bitio.hpp"
#include "civ/codec_id.hpp"
#include "civ/errors.hpp"

namespace civ {

/// Bit accounting of one encoded structure.
struct Space {
    uint64_t payload = 0;
    uint64_t samples = 0;
    uint64_t aux = 0;
    uint64_t total() const { return payload + samples + aux; }
};

template <typename Cursor>
struct Access {
    uint64_t value;
    Cursor cursor;
};

inline void check_index(uint64_t i, uint64_t n) {
    if (i >= n) throw QueryError("access: index " + std::to_string(i) + " out of range for length " + std::to_string(n));
}

/// Elias codes and FV need x + 1 to be representable.
inline void require_shiftable(std::span<const uint64_t> x, const char* codec) {
    for (uint64_t i = 0; i < x.size(); ++i)
        if (x[i] == ~uint64_t(0))
            throw BuildError(std::string(codec) + ": value at index " + std::to_string(i) +
                             " is 2^64-1 and cannot be shifted by one");
}

/// Offsets of every h-th entry, fixed width bit_length(total payload bits).
inline IntArray make_samples(std::span<const uint64_t> offsets, uint64_t payload_bits) {
    return IntArray(bit_length(payload_bits), offsets);
}

}  // namespace civ
