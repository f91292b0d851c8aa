#include "civ/codec_id.hpp"

#include "civ/errors.hpp"

namespace civ {

namespace {

constexpr std::array<std::string_view, 8> names = {"plain", "gamma", "delta", "dac", "fv", "s9", "rl", "pfd"};

}

std::string CodecId::name() const {
    std::string s(names[static_cast<size_t>(codec)]);
    if (zigzag) s += "_zz";
    return s;
}

std::optional<CodecId> CodecId::parse(std::string_view name) {
    CodecId id;
    constexpr std::string_view suffix = "_zz";
    if (name.size() > suffix.size() && name.substr(name.size() - suffix.size()) == suffix) {
        id.zigzag = true;
        name.remove_suffix(suffix.size());
    }
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
            id.codec = static_cast<Codec>(i);
            if (!id.valid()) return std::nullopt;
            return id;
        }
    }
    return std::nullopt;
}

std::vector<CodecId> compressed_variants() {
    std::vector<CodecId> out;
    for (bool zz : {false, true}) {
        for (Codec c : all_codecs) {
            CodecId id{c, zz};
            if (c != Codec::plain && id.valid()) out.push_back(id);
        }
    }
    return out;
}

CodecParams CodecParams::defaults_for(CodecId id) {
    CodecParams p;
    p.h = id.codec == Codec::pfd ? default_pfd_sampling : default_sampling;
    return p;
}

void CodecParams::validate(CodecId id) const {
    if (!id.valid()) throw ContractViolation("codec " + id.name() + " is not a supported variant");
    if (h == 0) throw ContractViolation("sampling step must be >= 1");
    for (uint64_t b : dac_widths)
        if (b == 0 || b > 64) throw ContractViolation("DAC level widths must lie in 1..64");
    if (!(pfd_exception_frac > 0.0 && pfd_exception_frac <= 1.0))
        throw ContractViolation("pfd exception fraction must lie in (0, 1]");
    if (pfd_block == 0 || pfd_block > 256) throw ContractViolation("pfd block length must lie in 1..256");
    if (id.codec == Codec::pfd && h % pfd_block != 0)
        throw ContractViolation("pfd sampling step must be a multiple of the block length");
}

uint64_t plain_width_for(uint64_t max_value) {
    if (max_value <= 0xff) return 8;
    if (max_value <= 0xffff) return 16;
    if (max_value <= 0xffffffffULL) return 32;
    return 64;
}

}  // namespace civ
