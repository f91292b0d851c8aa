#pragma once

#include <iosfwd>
#include <memory>
#include <variant>

#include "civ/codecs/dac.hpp"
#include "civ/codecs/elias.hpp"
#include "civ/codecs/fv.hpp"
#include "civ/codecs/pfor.hpp"
#include "civ/codecs/plain.hpp"
#include "civ/codecs/rl.hpp"
#include "civ/codecs/simple9.hpp"
#include "civ/codecs/zigzag.hpp"

namespace civ {

using AnyVector = std::variant<PlainVector, GammaVector, DeltaVector, DacVector, FvVector, Simple9Vector, RlVector,
                               PforVector, ZigZagVector<GammaVector>, ZigZagVector<DeltaVector>,
                               ZigZagVector<DacVector>, ZigZagVector<FvVector>, ZigZagVector<Simple9Vector>,
                               ZigZagVector<PforVector>>;

template <typename V>
using CursorOf = typename V::Cursor;

/// Cursor over whichever codec an EncodedVector holds.
class AnyCursor {
public:
    using Variant = std::variant<CursorOf<PlainVector>, CursorOf<GammaVector>, CursorOf<DeltaVector>,
                                 CursorOf<DacVector>, CursorOf<FvVector>, CursorOf<Simple9Vector>, CursorOf<RlVector>,
                                 CursorOf<PforVector>, CursorOf<ZigZagVector<GammaVector>>,
                                 CursorOf<ZigZagVector<DeltaVector>>, CursorOf<ZigZagVector<DacVector>>,
                                 CursorOf<ZigZagVector<FvVector>>, CursorOf<ZigZagVector<Simple9Vector>>,
                                 CursorOf<ZigZagVector<PforVector>>>;

    AnyCursor() = default;
    template <typename C>
    explicit AnyCursor(C c) : m_cursor(std::move(c)) {}

    /// Next entry, or nullopt at the end of the vector.
    std::optional<uint64_t> next() {
        return std::visit([](auto& c) { return c.next(); }, m_cursor);
    }
    uint64_t index() const {
        return std::visit([](const auto& c) { return c.index(); }, m_cursor);
    }

private:
    Variant m_cursor;
};

/*
 * One built compressed integer vector. Immutable after construction and safe
 * to share across threads. Cursors point into it: it must outlive them and
 * must not be moved while any exist.
 */
class EncodedVector {
public:
    EncodedVector() = default;

    /// Builds x with the given codec. Throws BuildError naming the offending index.
    static EncodedVector build(std::span<const uint64_t> x, CodecId codec, const CodecParams& params);
    static EncodedVector build(std::span<const uint64_t> x, CodecId codec) {
        return build(x, codec, CodecParams::defaults_for(codec));
    }

    CodecId codec() const { return m_codec; }
    const CodecParams& params() const { return m_params; }
    uint64_t size() const { return m_n; }
    /// Width of the plain baseline for the source data.
    uint64_t plain_width() const { return m_plain_width; }

    struct Entry {
        uint64_t value;
        AnyCursor cursor;
    };

    /// x_i plus a cursor positioned at i + 1. Throws QueryError if i >= size().
    Entry access(uint64_t i) const {
        return std::visit(
            [&](const auto& v) {
                auto [value, cursor] = v.access(i);
                return Entry{value, AnyCursor(std::move(cursor))};
            },
            m_vector);
    }

    /// Value only, no cursor.
    uint64_t operator[](uint64_t i) const {
        return std::visit([&](const auto& v) { return v.access(i).value; }, m_vector);
    }

    /// Decodes all entries through access(0) and next().
    std::vector<uint64_t> decode() const;

    Space space() const {
        return std::visit([](const auto& v) { return v.space(); }, m_vector);
    }

    const AnyVector& variant() const { return m_vector; }

    /// Calls f with the concrete codec structure (for templated hot loops).
    template <typename F>
    decltype(auto) visit(F&& f) const {
        return std::visit(std::forward<F>(f), m_vector);
    }

    void save(std::ostream& out) const;
    static EncodedVector load(std::istream& in);

private:
    CodecId m_codec;
    CodecParams m_params;
    uint64_t m_n = 0;
    uint64_t m_plain_width = 8;
    AnyVector m_vector;
};

/// Exact per-component bit accounting against the plain baseline.
SizeReport size_report(const EncodedVector& v);

}  // namespace civ
