#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace civ {

enum class Codec : uint8_t { plain = 0, gamma = 1, delta = 2, dac = 3, fv = 4, s9 = 5, rl = 6, pfd = 7 };

inline constexpr std::array<Codec, 8> all_codecs = {Codec::plain, Codec::gamma, Codec::delta, Codec::dac,
                                                    Codec::fv,    Codec::s9,    Codec::rl,    Codec::pfd};

/// A codec plus the ZigZag-of-differences flag. rl has no differenced variant.
struct CodecId {
    Codec codec = Codec::plain;
    bool zigzag = false;

    std::string name() const;
    /// Parses names such as "gamma", "delta_zz", "pfd_zz"; nullopt when unknown.
    static std::optional<CodecId> parse(std::string_view name);
    bool valid() const { return !(zigzag && (codec == Codec::rl || codec == Codec::plain)); }

    friend bool operator==(const CodecId&, const CodecId&) = default;
};

/// The 13 compressed variants (7 direct + 6 ZigZag-differenced), without plain.
std::vector<CodecId> compressed_variants();

struct CodecParams {
    /// Sampling step: entries between stored decode offsets.
    uint64_t h = 128;
    /// DAC per-level chunk widths; empty asks the optimizer for a plan.
    std::vector<uint64_t> dac_widths;
    uint64_t pfd_block = 128;
    double pfd_exception_frac = 0.10;

    static constexpr uint64_t default_sampling = 128;
    static constexpr uint64_t default_pfd_sampling = 1024;

    /// Defaults used in the study: h = 1024 for pfd, 128 for everything else.
    static CodecParams defaults_for(CodecId id);

    /// Throws ContractViolation when inconsistent for the given codec.
    void validate(CodecId id) const;
};

struct SizeReport {
    uint64_t payload_bits = 0;
    uint64_t sample_bits = 0;
    uint64_t aux_bits = 0;
    uint64_t total_bits = 0;
    uint64_t plain_bits = 0;
    double ratio_percent = 0;
};

/// Smallest of {8, 16, 32, 64} that holds max_value.
uint64_t plain_width_for(uint64_t max_value);

}  // namespace civ
