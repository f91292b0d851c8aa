#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "civ/datasets.hpp"
#include "civ/encoded_vector.hpp"
#include "civ/metering.hpp"
#include "civ/workloads.hpp"

namespace civ::cli {

namespace {

namespace fs = std::filesystem;

/// Bad flag combinations detected after parsing; exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string field(const std::optional<uint64_t>& v) { return v ? std::to_string(*v) : std::string(); }

std::optional<uint64_t> parse_field(const std::string& s) {
    if (s.empty()) return std::nullopt;
    size_t used = 0;
    uint64_t v = std::stoull(s, &used);
    if (used != s.size()) throw std::runtime_error("bad number '" + s + "'");
    return v;
}

std::vector<CodecId> parse_codecs(const std::vector<std::string>& names) {
    std::vector<CodecId> out;
    for (const auto& n : names) {
        if (n == "all") {
            out.push_back({Codec::plain, false});
            for (auto id : compressed_variants()) out.push_back(id);
            continue;
        }
        auto id = CodecId::parse(n);
        if (!id) throw UsageError("unknown codec '" + n + "'");
        out.push_back(*id);
    }
    return out;
}

CodecParams params_for(CodecId id, std::optional<uint64_t> sampling) {
    auto p = CodecParams::defaults_for(id);
    if (sampling) p.h = *sampling;
    return p;
}

std::vector<uint64_t> make_dataset(const std::string& kind, const std::string& input, uint64_t limit) {
    auto bytes = read_text_file(input, limit);
    TextInput t(bytes);
    auto sa = suffix_array(t);
    if (kind == "bwt") return bwt(t, sa);
    if (kind == "lcp") return lcp(t, sa);
    return psi(sa);
}

struct GenArgs {
    std::string kind;
    std::string input;
    uint64_t limit = 0;
    std::optional<uint64_t> n;
    uint64_t max = sorted_default_max;
    uint64_t seed = 1;
    std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    std::vector<uint64_t> x;
    if (a.kind == "sorted") {
        if (!a.n) throw UsageError("gen sorted needs --n");
        x = gen_sorted(*a.n, a.max, a.seed);
    } else {
        if (a.input.empty()) throw UsageError("gen " + a.kind + " needs --input");
        x = make_dataset(a.kind, a.input, a.limit);
    }
    write_ivec_file(a.out, x);
    out << "dataset\t" << a.kind << "\nn\t" << x.size() << "\n";
    if (!x.empty()) out << format_stats(stats(x));
    return ok;
}

void print_report(std::ostream& out, const EncodedVector& v) {
    auto r = size_report(v);
    out << "codec\t" << v.codec().name() << "\n"
        << "n\t" << v.size() << "\n"
        << "payload_bits\t" << r.payload_bits << "\n"
        << "sample_bits\t" << r.sample_bits << "\n"
        << "aux_bits\t" << r.aux_bits << "\n"
        << "total_bits\t" << r.total_bits << "\n"
        << "plain_bits\t" << r.plain_bits << "\n"
        << "ratio_percent\t" << r.ratio_percent << "\n";
}

int cmd_encode(const std::string& in, const std::string& codec, std::optional<uint64_t> sampling,
               const std::string& out_path, std::ostream& out) {
    auto id = parse_codecs({codec}).front();
    auto x = read_ivec_file(in);
    auto v = EncodedVector::build(x, id, params_for(id, sampling));
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
    v.save(f);
    print_report(out, v);
    return ok;
}

int cmd_decode(const std::string& in, const std::string& out_path, std::ostream& out) {
    std::ifstream f(in, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + in);
    auto v = EncodedVector::load(f);
    write_ivec_file(out_path, v.decode());
    out << "codec\t" << v.codec().name() << "\nn\t" << v.size() << "\n";
    return ok;
}

int cmd_stats(const std::string& in, std::ostream& out) {
    auto x = read_ivec_file(in);
    if (x.empty()) throw std::runtime_error("stats: empty vector");
    out << "n\t" << x.size() << "\n" << format_stats(stats(x));
    return ok;
}

struct BenchArgs {
    std::vector<std::string> codecs{"all"};
    std::string in;
    std::string dataset;
    std::string workload;
    std::vector<uint64_t> ops{0};
    uint64_t reps = 10;
    uint64_t seed = 1;
    std::optional<uint64_t> sampling;
    std::optional<int> pin_core;
    std::string out;
    std::optional<std::string> rapl_path;
};

BenchRow make_row(const EncodedVector& v, const std::string& dataset, const std::string& workload, uint64_t ops,
                  const MetricsRecord& rec, uint64_t checksum) {
    BenchRow row;
    row.codec = v.codec().name();
    row.dataset = dataset;
    row.workload = workload;
    row.ops = ops;
    row.size_bytes = (size_report(v).total_bits + 7) / 8;
    row.time_ns = rec.time_ns;
    row.energy_pkg_uj = rec.energy_pkg_uj;
    row.instructions = rec.instructions;
    row.cycles = rec.cycles;
    row.l1d_loads = rec.l1d_loads;
    row.llc_loads = rec.llc_loads;
    row.checksum = checksum;
    return row;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
    auto ids = parse_codecs(a.codecs);
    auto kind = parse_workload(a.workload);
    if (!kind) throw UsageError("unknown workload '" + a.workload + "'");
    if (a.reps == 0) throw UsageError("--reps must be at least 1");
    auto x = read_ivec_file(a.in);
    std::string dataset = a.dataset.empty() ? fs::path(a.in).stem().string() : a.dataset;
    for (auto& c : dataset)
        if (c == ',' || c == '\n') c = '_';
    if (*kind == WorkloadKind::seqsum)
        for (uint64_t m : a.ops)
            if (m > x.size()) throw UsageError("seqsum ops " + std::to_string(m) + " exceeds vector length");
    if (*kind == WorkloadKind::randsum && x.empty())
        for (uint64_t m : a.ops)
            if (m > 0) throw UsageError("randsum on an empty vector");

    if (a.pin_core && !pin_current_thread(*a.pin_core))
        err << "warning: could not pin to core " << *a.pin_core << "\n";
    DefaultProviders providers(a.rapl_path);
    if (!providers.has_counters()) err << "note: hardware counters unavailable; counter columns left empty\n";
    if (!providers.has_energy()) err << "note: package energy unavailable; energy column left empty\n";
    auto config = providers.config();

    // Reference checksums from the uncompressed vector.
    auto reference = EncodedVector::build(x, {Codec::plain, false});
    std::map<uint64_t, uint64_t> expected;
    for (uint64_t m : a.ops) expected[m] = run_workload(reference, {*kind, m, a.seed}).checksum;

    std::vector<BenchRow> rows;
    for (auto id : ids) {
        auto params = params_for(id, a.sampling);
        EncodedVector v;
        try {
            v = EncodedVector::build(x, id, params);
        } catch (const std::exception& e) {
            throw std::runtime_error("codec " + id.name() + ": " + e.what());
        }
        for (uint64_t m : a.ops) {
            MetricsRecord rec;
            uint64_t checksum = 0;
            if (m == 0) {
                // Load phase: the structure is built in memory and no value is accessed.
                rec = measure([&] { EncodedVector::build(x, id, params); }, a.reps, config);
            } else {
                WorkloadSpec spec{*kind, m, a.seed};
                rec = measure([&] { checksum = run_workload(v, spec).checksum; }, a.reps, config);
            }
            BenchRow row = make_row(v, dataset, a.workload, m, rec, checksum);
            verify_checksum(row, expected[m]);
            rows.push_back(std::move(row));
        }
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!a.out.empty() && a.out != "-") {
        file.open(a.out);
        if (!file) throw std::runtime_error("cannot open " + a.out + " for writing");
        sink = &file;
    }
    *sink << csv_header << "\n";
    for (const auto& r : rows) *sink << to_csv(r) << "\n";
    return ok;
}

const std::vector<std::string> report_metrics = {"size_bytes", "time_ns",   "energy_pkg_uj", "instructions",
                                                 "cycles",     "l1d_loads", "llc_loads",     "cpi"};

std::optional<double> metric_of(const BenchRow& r, const std::string& metric) {
    auto as = [](const std::optional<uint64_t>& v) -> std::optional<double> {
        if (!v) return std::nullopt;
        return double(*v);
    };
    if (metric == "size_bytes") return double(r.size_bytes);
    if (metric == "time_ns") return double(r.time_ns);
    if (metric == "energy_pkg_uj") return as(r.energy_pkg_uj);
    if (metric == "instructions") return as(r.instructions);
    if (metric == "cycles") return as(r.cycles);
    if (metric == "l1d_loads") return as(r.l1d_loads);
    if (metric == "llc_loads") return as(r.llc_loads);
    if (r.cycles && r.instructions && *r.instructions > 0) return double(*r.cycles) / double(*r.instructions);
    return std::nullopt;
}

struct ReportArgs {
    std::string in;
    std::string metric;
    std::string out;
    std::string workload;
    std::string dataset;
};

int cmd_report(const ReportArgs& a, std::ostream& out, std::ostream& err) {
    std::ifstream f(a.in);
    if (!f) throw std::runtime_error("cannot open " + a.in);
    std::string line;
    if (!std::getline(f, line) || line != csv_header) throw std::runtime_error(a.in + ": missing or unexpected header");
    std::vector<std::string> order;
    std::map<std::string, std::vector<std::pair<uint64_t, double>>> series;
    std::map<std::string, uint64_t> rows_seen;
    for (uint64_t lineno = 2; std::getline(f, line); ++lineno) {
        if (line.empty()) continue;
        BenchRow r;
        try {
            r = parse_csv_row(line);
        } catch (const std::exception& e) {
            throw std::runtime_error(a.in + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (!a.workload.empty() && r.workload != a.workload) continue;
        if (!a.dataset.empty() && r.dataset != a.dataset) continue;
        if (!rows_seen.count(r.codec)) order.push_back(r.codec);
        ++rows_seen[r.codec];
        if (auto v = metric_of(r, a.metric)) series[r.codec].emplace_back(r.ops, *v);
    }
    fs::create_directories(a.out);
    for (const auto& codec : order) {
        auto path = fs::path(a.out) / (codec + ".dat");
        std::ofstream s(path);
        if (!s) throw std::runtime_error("cannot write " + path.string());
        s << "# ops " << a.metric << "\n";
        for (auto [ops, v] : series[codec]) {
            s << ops << " ";
            if (v == std::floor(v) && v < 1.8e19)
                s << static_cast<uint64_t>(v);
            else
                s << std::setprecision(6) << std::fixed << v << std::defaultfloat;
            s << "\n";
        }
        if (series[codec].empty())
            err << "warning: no " << a.metric << " values for " << codec << "; series is empty\n";
        out << path.string() << "\t" << series[codec].size() << "\n";
    }
    if (order.empty()) err << "warning: no rows matched\n";
    return ok;
}

}  // namespace

std::string to_csv(const BenchRow& r) {
    std::ostringstream s;
    s << r.codec << ',' << r.dataset << ',' << r.workload << ',' << r.ops << ',' << r.size_bytes << ',' << r.time_ns
      << ',' << field(r.energy_pkg_uj) << ',' << field(r.instructions) << ',' << field(r.cycles) << ','
      << field(r.l1d_loads) << ',' << field(r.llc_loads) << ',' << r.checksum;
    return s.str();
}

BenchRow parse_csv_row(const std::string& line) {
    auto f = split(line, ',');
    if (f.size() != 12) throw std::runtime_error("expected 12 fields, got " + std::to_string(f.size()));
    auto required = [](const std::string& s) {
        auto v = parse_field(s);
        if (!v) throw std::runtime_error("empty required field");
        return *v;
    };
    BenchRow r;
    r.codec = f[0];
    r.dataset = f[1];
    r.workload = f[2];
    r.ops = required(f[3]);
    r.size_bytes = required(f[4]);
    r.time_ns = required(f[5]);
    r.energy_pkg_uj = parse_field(f[6]);
    r.instructions = parse_field(f[7]);
    r.cycles = parse_field(f[8]);
    r.l1d_loads = parse_field(f[9]);
    r.llc_loads = parse_field(f[10]);
    r.checksum = required(f[11]);
    return r;
}

void verify_checksum(const BenchRow& row, uint64_t expected) {
    if (row.checksum != expected)
        throw ChecksumMismatch("checksum mismatch for codec " + row.codec + " (" + row.workload + ", ops " +
                               std::to_string(row.ops) + "): got " + std::to_string(row.checksum) + ", expected " +
                               std::to_string(expected));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"civ: compressed integer vectors"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a vector file (sorted, bwt, lcp, psi)");
    g->add_option("kind", gen.kind, "Dataset kind")->required()->check(CLI::IsMember({"sorted", "bwt", "lcp", "psi"}));
    g->add_option("--input", gen.input, "Text file for bwt, lcp and psi")->check(CLI::ExistingFile);
    g->add_option("--limit", gen.limit, "Use only the first N bytes of the input (0 = all)");
    g->add_option("--n", gen.n, "Length of a sorted vector");
    g->add_option("--max", gen.max, "Largest sorted value")->capture_default_str();
    g->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
    g->add_option("--out", gen.out, "Output IVEC file")->required();

    std::string enc_in, enc_codec, enc_out;
    std::optional<uint64_t> enc_sampling;
    auto* e = app.add_subcommand("encode", "Encode a vector file with one codec");
    e->add_option("--in", enc_in, "Input IVEC file")->required()->check(CLI::ExistingFile);
    e->add_option("--codec", enc_codec, "Codec name, e.g. gamma or pfd_zz")->required();
    e->add_option("--sampling", enc_sampling, "Sampling step h (default 128, pfd 1024)");
    e->add_option("--out", enc_out, "Output container file")->required();

    std::string dec_in, dec_out;
    auto* d = app.add_subcommand("decode", "Decode a container back to a vector file");
    d->add_option("--in", dec_in, "Input container file")->required()->check(CLI::ExistingFile);
    d->add_option("--out", dec_out, "Output IVEC file")->required();

    std::string stats_in;
    auto* s = app.add_subcommand("stats", "Print dataset statistics");
    s->add_option("--in", stats_in, "Input IVEC file")->required()->check(CLI::ExistingFile);

    BenchArgs bench;
    std::string ops_list = "0";
    std::string codec_list = "all";
    auto* b = app.add_subcommand("bench", "Run a workload sweep and write CSV");
    b->add_option("--codec", codec_list, "Comma-separated codecs, or all")->capture_default_str();
    b->add_option("--in", bench.in, "Input IVEC file")->required()->check(CLI::ExistingFile);
    b->add_option("--dataset", bench.dataset, "Dataset label (default: file stem)");
    b->add_option("--workload", bench.workload, "binsearch, seqsum or randsum")
        ->required()
        ->check(CLI::IsMember({"binsearch", "seqsum", "randsum"}));
    b->add_option("--ops", ops_list, "Comma-separated operation counts; 0 measures loading only")
        ->capture_default_str();
    b->add_option("--reps", bench.reps, "Repetitions per point (median reported)")->capture_default_str();
    b->add_option("--seed", bench.seed, "Seed for queries and indices")->capture_default_str();
    b->add_option("--sampling", bench.sampling, "Sampling step h for every codec");
    b->add_option("--pin-core", bench.pin_core, "Pin the benchmark thread to this CPU");
    b->add_option("--out", bench.out, "Output CSV (default stdout)");
    b->add_option("--rapl-path", bench.rapl_path, "Package energy directory (default $CIV_RAPL_PATH or powercap)");

    ReportArgs rep;
    auto* r = app.add_subcommand("report", "Turn a bench CSV into per-codec series files");
    r->add_option("--in", rep.in, "Bench CSV")->required()->check(CLI::ExistingFile);
    r->add_option("--metric", rep.metric, "Metric column, or cpi")->required()->check(CLI::IsMember(report_metrics));
    r->add_option("--out", rep.out, "Output directory")->required();
    r->add_option("--workload", rep.workload, "Only rows of this workload");
    r->add_option("--dataset", rep.dataset, "Only rows of this dataset");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (auto* sub : app.get_subcommands()) target = sub;
        out << target->help();
        return ok;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n" << app.help();
        return usage;
    }

    try {
        if (*g) return cmd_gen(gen, out);
        if (*e) return cmd_encode(enc_in, enc_codec, enc_sampling, enc_out, out);
        if (*d) return cmd_decode(dec_in, dec_out, out);
        if (*s) return cmd_stats(stats_in, out);
        if (*b) {
            bench.codecs = split(codec_list, ',');
            bench.ops.clear();
            for (const auto& o : split(ops_list, ',')) {
                auto v = parse_field(o);
                if (!v) throw UsageError("empty entry in --ops");
                bench.ops.push_back(*v);
            }
            return cmd_bench(bench, out, err);
        }
        if (*r) return cmd_report(rep, out, err);
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << "\n";
        return usage;
    } catch (const std::invalid_argument& ex) {
        err << "error: bad number: " << ex.what() << "\n";
        return usage;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return failure;
    }
    return usage;
}

}  // namespace civ::cli
