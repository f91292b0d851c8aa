#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace civ {

/// Counter deltas for one run. A field is nullopt when its source is unavailable.
struct Readings {
    std::optional<uint64_t> instructions;
    std::optional<uint64_t> cycles;
    std::optional<uint64_t> l1d_loads;
    std::optional<uint64_t> llc_loads;
    std::optional<uint64_t> energy_pkg_uj;
};

/// A source of per-run counter deltas. start() precedes the run, stop() follows it.
class CounterProvider {
public:
    virtual ~CounterProvider() = default;
    virtual std::string name() const = 0;
    virtual bool available() const = 0;
    virtual void start() = 0;
    virtual Readings stop() = 0;
};

/*
 * Per-thread hardware counters via perf_event_open: instructions, CPU cycles,
 * L1d read accesses and last-level-cache read accesses, user space only.
 * Events that fail to open are reported as unavailable.
 */
class PerfCounterProvider final : public CounterProvider {
public:
    PerfCounterProvider();
    ~PerfCounterProvider() override;
    PerfCounterProvider(const PerfCounterProvider&) = delete;
    PerfCounterProvider& operator=(const PerfCounterProvider&) = delete;

    std::string name() const override { return "perf_event"; }
    bool available() const override;
    void start() override;
    Readings stop() override;

private:
    std::vector<int> m_fds;  // -1 for events that could not be opened
};

/// Default package-domain directory of the powercap interface.
inline constexpr const char* default_rapl_path = "/sys/class/powercap/intel-rapl:0";

/// Cumulative package energy in microjoules from <dir>/energy_uj, or nullopt when absent.
std::optional<uint64_t> read_energy_pkg(const std::string& domain_dir = default_rapl_path);

/// post - pre, correcting one wraparound of a counter that wraps after max_range.
uint64_t energy_delta(uint64_t pre, uint64_t post, uint64_t max_range);

class RaplEnergyProvider final : public CounterProvider {
public:
    explicit RaplEnergyProvider(std::string domain_dir = default_rapl_path);
    std::string name() const override { return "rapl_pkg"; }
    bool available() const override { return m_available; }
    void start() override;
    Readings stop() override;

private:
    std::string m_dir;
    bool m_available = false;
    uint64_t m_max_range = 0;
    uint64_t m_start = 0;
};

struct MetricsRecord {
    uint64_t time_ns = 0;
    std::optional<uint64_t> energy_pkg_uj;
    std::optional<uint64_t> instructions;
    std::optional<uint64_t> cycles;
    std::optional<uint64_t> l1d_loads;
    std::optional<uint64_t> llc_loads;
    uint64_t reps = 0;
};

/// Median of the values; for an even count, the floor of the mean of the two middle ones.
uint64_t median(std::vector<uint64_t> values);

struct MeterConfig {
    std::vector<CounterProvider*> providers;
    /// Monotonic nanosecond clock; steady_clock when empty.
    std::function<uint64_t()> clock;
};

/*
 * Runs work reps times, opening counters right before and reading them right
 * after each run. Every metric is the median of its per-run readings; a
 * metric is reported only if it was available in every run.
 */
MetricsRecord measure(const std::function<void()>& work, uint64_t reps, const MeterConfig& config = {});

/*
 * Real providers for this machine. Honors CIV_RAPL_PATH (package domain
 * directory) and CIV_DISABLE_PERF=1; unavailable sources are dropped.
 */
class DefaultProviders {
public:
    explicit DefaultProviders(std::optional<std::string> rapl_path = std::nullopt);
    MeterConfig config() const;
    bool has_counters() const { return m_perf != nullptr; }
    bool has_energy() const { return m_rapl != nullptr; }

private:
    std::unique_ptr<PerfCounterProvider> m_perf;
    std::unique_ptr<RaplEnergyProvider> m_rapl;
};

/// Pins the calling thread to one CPU; returns false when the platform refuses.
bool pin_current_thread(int core);

}  // namespace civ
