#include "civ/encoded_vector.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <istream>
#include <ostream>

namespace civ {

namespace {

template <typename V>
AnyVector build_as(std::span<const uint64_t> x, const CodecParams& p) {
    return V::build(x, p);
}

AnyVector build_variant(std::span<const uint64_t> x, CodecId id, const CodecParams& p) {
    if (!id.zigzag) {
        switch (id.codec) {
            case Codec::plain: return build_as<PlainVector>(x, p);
            case Codec::gamma: return build_as<GammaVector>(x, p);
            case Codec::delta: return build_as<DeltaVector>(x, p);
            case Codec::dac: return build_as<DacVector>(x, p);
            case Codec::fv: return build_as<FvVector>(x, p);
            case Codec::s9: return build_as<Simple9Vector>(x, p);
            case Codec::rl: return build_as<RlVector>(x, p);
            case Codec::pfd: return build_as<PforVector>(x, p);
        }
    } else {
        switch (id.codec) {
            case Codec::gamma: return build_as<ZigZagVector<GammaVector>>(x, p);
            case Codec::delta: return build_as<ZigZagVector<DeltaVector>>(x, p);
            case Codec::dac: return build_as<ZigZagVector<DacVector>>(x, p);
            case Codec::fv: return build_as<ZigZagVector<FvVector>>(x, p);
            case Codec::s9: return build_as<ZigZagVector<Simple9Vector>>(x, p);
            case Codec::pfd: return build_as<ZigZagVector<PforVector>>(x, p);
            default: break;
        }
    }
    throw ContractViolation("unsupported codec " + id.name());
}

// Default-constructed alternative matching a codec id, for loading.
AnyVector empty_variant(CodecId id) {
    if (!id.valid()) throw FormatError("unsupported codec variant");
    static constexpr std::array<size_t, 8> direct = {0, 1, 2, 3, 4, 5, 6, 7};
    static constexpr std::array<size_t, 8> zz = {0, 8, 9, 10, 11, 12, 0, 13};
    size_t index = id.zigzag ? zz[static_cast<size_t>(id.codec)] : direct[static_cast<size_t>(id.codec)];
    AnyVector v;
    auto make = [&]<size_t... I>(std::index_sequence<I...>) {
        ((index == I ? (v.emplace<I>(), true) : false) || ...);
    };
    make(std::make_index_sequence<std::variant_size_v<AnyVector>>{});
    return v;
}

void put_u64(std::ostream& out, uint64_t x) {
    std::array<char, 8> b;
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xff);
    out.write(b.data(), 8);
}

uint64_t get_u64(std::istream& in) {
    std::array<unsigned char, 8> b;
    if (!in.read(reinterpret_cast<char*>(b.data()), 8)) throw FormatError("civ: truncated input");
    uint64_t x = 0;
    for (int i = 0; i < 8; ++i) x |= uint64_t(b[i]) << (8 * i);
    return x;
}

uint8_t get_u8(std::istream& in) {
    char c;
    if (!in.get(c)) throw FormatError("civ: truncated input");
    return static_cast<uint8_t>(c);
}

struct ComponentWriter {
    std::ostream& out;

    void operator()(uint64_t& x) {
        put_u64(out, 64);
        put_u64(out, x);
    }
    void operator()(BitBuffer& b) {
        put_u64(out, b.size());
        for (uint64_t w : b.words()) put_u64(out, w);
    }
    template <typename T>
    void operator()(T& t) {
        t.visit(*this);
    }
};

struct ComponentReader {
    std::istream& in;

    void operator()(uint64_t& x) {
        if (get_u64(in) != 64) throw FormatError("civ: scalar component must be 64 bits");
        x = get_u64(in);
    }
    void operator()(BitBuffer& b) {
        uint64_t bits = get_u64(in);
        uint64_t words = (bits + 63) / 64;
        // Guard against absurd lengths before allocating.
        if (words > (uint64_t(1) << 40)) throw FormatError("civ: component too large");
        std::vector<uint64_t> w;
        w.reserve(words);
        for (uint64_t i = 0; i < words; ++i) w.push_back(get_u64(in));
        b = BitBuffer::from_words(std::move(w), bits);
    }
    template <typename T>
    void operator()(T& t) {
        t.visit(*this);
    }
};

constexpr std::array<char, 4> magic = {'C', 'I', 'V', '1'};

}  // namespace

EncodedVector EncodedVector::build(std::span<const uint64_t> x, CodecId codec, const CodecParams& params) {
    params.validate(codec);
    EncodedVector v;
    v.m_codec = codec;
    v.m_params = params;
    v.m_n = x.size();
    uint64_t m = x.empty() ? 0 : *std::max_element(x.begin(), x.end());
    v.m_plain_width = plain_width_for(m);
    v.m_vector = build_variant(x, codec, params);
    if (codec.codec == Codec::dac) {
        // Record the plan actually used.
        v.m_params.dac_widths = std::visit(
            [](const auto& e) -> DacPlan {
                using T = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<T, DacVector>) return e.plan();
                else if constexpr (std::is_same_v<T, ZigZagVector<DacVector>>) return e.base().plan();
                else return {};
            },
            v.m_vector);
    }
    return v;
}

std::vector<uint64_t> EncodedVector::decode() const {
    std::vector<uint64_t> out;
    out.reserve(m_n);
    if (m_n == 0) return out;
    auto [first, cursor] = access(0);
    out.push_back(first);
    while (auto x = cursor.next()) out.push_back(*x);
    return out;
}

void EncodedVector::save(std::ostream& out) const {
    out.write(magic.data(), magic.size());
    out.put(static_cast<char>(m_codec.codec));
    out.put(static_cast<char>(m_codec.zigzag ? 1 : 0));
    put_u64(out, m_n);
    // params block
    put_u64(out, m_params.h);
    put_u64(out, m_params.pfd_block);
    put_u64(out, std::bit_cast<uint64_t>(m_params.pfd_exception_frac));
    out.put(static_cast<char>(m_plain_width));
    out.put(static_cast<char>(m_params.dac_widths.size()));
    for (uint64_t b : m_params.dac_widths) out.put(static_cast<char>(b));
    ComponentWriter w{out};
    std::visit([&](const auto& v) { w(const_cast<std::decay_t<decltype(v)>&>(v)); }, m_vector);
    if (!out) throw std::runtime_error("civ: write failed");
}

EncodedVector EncodedVector::load(std::istream& in) {
    std::array<char, 4> m;
    if (!in.read(m.data(), 4) || m != magic) throw FormatError("civ: bad magic");
    EncodedVector v;
    uint8_t codec = get_u8(in);
    uint8_t flags = get_u8(in);
    if (codec >= all_codecs.size() || flags > 1) throw FormatError("civ: bad codec id or flags");
    v.m_codec = CodecId{static_cast<Codec>(codec), flags == 1};
    v.m_n = get_u64(in);
    v.m_params.h = get_u64(in);
    v.m_params.pfd_block = get_u64(in);
    v.m_params.pfd_exception_frac = std::bit_cast<double>(get_u64(in));
    v.m_plain_width = get_u8(in);
    if (v.m_plain_width != 8 && v.m_plain_width != 16 && v.m_plain_width != 32 && v.m_plain_width != 64)
        throw FormatError("civ: bad plain width");
    uint8_t levels = get_u8(in);
    for (uint8_t l = 0; l < levels; ++l) v.m_params.dac_widths.push_back(get_u8(in));
    try {
        v.m_params.validate(v.m_codec);
    } catch (const ContractViolation& e) {
        throw FormatError(std::string("civ: bad params: ") + e.what());
    }
    v.m_vector = empty_variant(v.m_codec);
    ComponentReader r{in};
    std::visit([&](auto& e) { r(e); }, v.m_vector);
    uint64_t n = std::visit([](const auto& e) { return e.size(); }, v.m_vector);
    if (n != v.m_n) throw FormatError("civ: length mismatch");
    return v;
}

SizeReport size_report(const EncodedVector& v) {
    Space s = v.space();
    SizeReport r;
    r.payload_bits = s.payload;
    r.sample_bits = s.samples;
    r.aux_bits = s.aux;
    r.total_bits = s.total();
    r.plain_bits = v.size() * v.plain_width();
    r.ratio_percent = r.plain_bits == 0 ? 0.0 : 100.0 * double(r.total_bits) / double(r.plain_bits);
    return r;
}

}  // namespace civ
