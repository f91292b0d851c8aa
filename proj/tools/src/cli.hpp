#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace civ::cli {

/// Exit codes of the civ tool.
enum Exit : int { ok = 0, failure = 1, usage = 2 };

/// One benchmark measurement; absent metrics stay nullopt and serialize as empty fields.
struct BenchRow {
    std::string codec;
    std::string dataset;
    std::string workload;
    uint64_t ops = 0;
    uint64_t size_bytes = 0;
    uint64_t time_ns = 0;
    std::optional<uint64_t> energy_pkg_uj;
    std::optional<uint64_t> instructions;
    std::optional<uint64_t> cycles;
    std::optional<uint64_t> l1d_loads;
    std::optional<uint64_t> llc_loads;
    uint64_t checksum = 0;
};

inline constexpr const char* csv_header =
    "codec,dataset,workload,ops,size_bytes,time_ns,energy_pkg_uj,instructions,cycles,l1d_loads,llc_loads,checksum";

std::string to_csv(const BenchRow& row);
/// Parses one data line; throws std::runtime_error on malformed input.
BenchRow parse_csv_row(const std::string& line);

/// A codec disagreed with the uncompressed reference on a workload checksum.
struct ChecksumMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Throws ChecksumMismatch, naming the row's codec, when row.checksum != expected.
void verify_checksum(const BenchRow& row, uint64_t expected);

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace civ::cli
