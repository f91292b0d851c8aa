#include "civ/metering.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <stdexcept>

#if defined(__linux__)
#include <linux/perf_event.h>
#include <sched.h>
#include <sys/ioctl.h>
#include <sys/syscall.h>
#include <unistd.h>
#endif

namespace civ {

namespace {

#if defined(__linux__)
int open_counter(uint32_t type, uint64_t config) {
    perf_event_attr attr;
    std::memset(&attr, 0, sizeof attr);
    attr.size = sizeof attr;
    attr.type = type;
    attr.config = config;
    attr.disabled = 1;
    attr.exclude_kernel = 1;
    attr.exclude_hv = 1;
    return static_cast<int>(syscall(__NR_perf_event_open, &attr, 0, -1, -1, 0));
}

constexpr uint64_t cache_read_access(uint64_t cache) {
    return cache | (PERF_COUNT_HW_CACHE_OP_READ << 8) | (PERF_COUNT_HW_CACHE_RESULT_ACCESS << 16);
}
#endif

std::optional<uint64_t> read_number(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    uint64_t v;
    if (!(in >> v)) return std::nullopt;
    return v;
}

}  // namespace

PerfCounterProvider::PerfCounterProvider() {
#if defined(__linux__)
    const char* off = std::getenv("CIV_DISABLE_PERF");
    if (off && std::string(off) == "1") {
        m_fds.assign(4, -1);
        return;
    }
    m_fds.push_back(open_counter(PERF_TYPE_HARDWARE, PERF_COUNT_HW_INSTRUCTIONS));
    m_fds.push_back(open_counter(PERF_TYPE_HARDWARE, PERF_COUNT_HW_CPU_CYCLES));
    m_fds.push_back(open_counter(PERF_TYPE_HW_CACHE, cache_read_access(PERF_COUNT_HW_CACHE_L1D)));
    m_fds.push_back(open_counter(PERF_TYPE_HW_CACHE, cache_read_access(PERF_COUNT_HW_CACHE_LL)));
#else
    m_fds.assign(4, -1);
#endif
}

PerfCounterProvider::~PerfCounterProvider() {
#if defined(__linux__)
    for (int fd : m_fds)
        if (fd >= 0) close(fd);
#endif
}

bool PerfCounterProvider::available() const {
    return std::any_of(m_fds.begin(), m_fds.end(), [](int fd) { return fd >= 0; });
}

void PerfCounterProvider::start() {
#if defined(__linux__)
    for (int fd : m_fds) {
        if (fd < 0) continue;
        ioctl(fd, PERF_EVENT_IOC_RESET, 0);
        ioctl(fd, PERF_EVENT_IOC_ENABLE, 0);
    }
#endif
}

Readings PerfCounterProvider::stop() {
    std::optional<uint64_t> values[4];
#if defined(__linux__)
    for (int fd : m_fds)
        if (fd >= 0) ioctl(fd, PERF_EVENT_IOC_DISABLE, 0);
    for (size_t k = 0; k < m_fds.size() && k < 4; ++k) {
        uint64_t v;
        if (m_fds[k] >= 0 && read(m_fds[k], &v, sizeof v) == static_cast<ssize_t>(sizeof v)) values[k] = v;
    }
#endif
    Readings r;
    r.instructions = values[0];
    r.cycles = values[1];
    r.l1d_loads = values[2];
    r.llc_loads = values[3];
    return r;
}

std::optional<uint64_t> read_energy_pkg(const std::string& domain_dir) {
    return read_number(domain_dir + "/energy_uj");
}

uint64_t energy_delta(uint64_t pre, uint64_t post, uint64_t max_range) {
    if (post >= pre) return post - pre;
    // The counter wrapped once: pre -> max_range -> 0 -> post.
    return (max_range >= pre ? max_range - pre : 0) + post;
}

RaplEnergyProvider::RaplEnergyProvider(std::string domain_dir) : m_dir(std::move(domain_dir)) {
    auto e = read_energy_pkg(m_dir);
    auto range = read_number(m_dir + "/max_energy_range_uj");
    m_available = e.has_value();
    m_max_range = range.value_or(~uint64_t(0));
}

void RaplEnergyProvider::start() {
    if (!m_available) return;
    m_start = read_energy_pkg(m_dir).value_or(0);
}

Readings RaplEnergyProvider::stop() {
    Readings r;
    if (!m_available) return r;
    if (auto post = read_energy_pkg(m_dir)) r.energy_pkg_uj = energy_delta(m_start, *post, m_max_range);
    return r;
}

uint64_t median(std::vector<uint64_t> values) {
    if (values.empty()) throw std::invalid_argument("median of nothing");
    const size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + mid, values.end());
    uint64_t hi = values[mid];
    if (values.size() % 2 == 1) return hi;
    uint64_t lo = *std::max_element(values.begin(), values.begin() + mid);
    return lo + (hi - lo) / 2;
}

MetricsRecord measure(const std::function<void()>& work, uint64_t reps, const MeterConfig& config) {
    if (reps == 0) throw std::invalid_argument("measure: reps must be >= 1");
    auto clock = config.clock ? config.clock : [] {
        return static_cast<uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now().time_since_epoch())
                .count());
    };

    struct Series {
        std::vector<uint64_t> values;
        bool complete = true;
        void add(const std::optional<uint64_t>& v) {
            if (v)
                values.push_back(*v);
            else
                complete = false;
        }
        std::optional<uint64_t> result() const {
            if (!complete || values.empty()) return std::nullopt;
            return median(values);
        }
    };
    std::vector<uint64_t> times;
    Series instructions, cycles, l1d, llc, energy;

    for (uint64_t rep = 0; rep < reps; ++rep) {
        for (auto* p : config.providers) p->start();
        uint64_t t0 = clock();
        work();
        uint64_t t1 = clock();
        Readings merged;
        // Stop in reverse so the outermost provider brackets the others.
        for (auto it = config.providers.rbegin(); it != config.providers.rend(); ++it) {
            Readings r = (*it)->stop();
            if (r.instructions) merged.instructions = r.instructions;
            if (r.cycles) merged.cycles = r.cycles;
            if (r.l1d_loads) merged.l1d_loads = r.l1d_loads;
            if (r.llc_loads) merged.llc_loads = r.llc_loads;
            if (r.energy_pkg_uj) merged.energy_pkg_uj = r.energy_pkg_uj;
        }
        times.push_back(t1 >= t0 ? t1 - t0 : 0);
        instructions.add(merged.instructions);
        cycles.add(merged.cycles);
        l1d.add(merged.l1d_loads);
        llc.add(merged.llc_loads);
        energy.add(merged.energy_pkg_uj);
    }

    MetricsRecord rec;
    rec.reps = reps;
    rec.time_ns = median(times);
    rec.instructions = instructions.result();
    rec.cycles = cycles.result();
    rec.l1d_loads = l1d.result();
    rec.llc_loads = llc.result();
    rec.energy_pkg_uj = energy.result();
    return rec;
}

DefaultProviders::DefaultProviders(std::optional<std::string> rapl_path) {
    if (!rapl_path) {
        if (const char* env = std::getenv("CIV_RAPL_PATH")) rapl_path = env;
    }
    auto perf = std::make_unique<PerfCounterProvider>();
    if (perf->available()) m_perf = std::move(perf);
    auto rapl = std::make_unique<RaplEnergyProvider>(rapl_path.value_or(default_rapl_path));
    if (rapl->available()) m_rapl = std::move(rapl);
}

MeterConfig DefaultProviders::config() const {
    MeterConfig c;
    if (m_rapl) c.providers.push_back(m_rapl.get());
    if (m_perf) c.providers.push_back(m_perf.get());
    return c;
}

bool pin_current_thread(int core) {
#if defined(__linux__)
    cpu_set_t set;
    CPU_ZERO(&set);
    CPU_SET(core, &set);
    return sched_setaffinity(0, sizeof set, &set) == 0;
#else
    (void)core;
    return false;
#endif
}

}  // namespace civ
