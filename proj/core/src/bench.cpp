#include "qceqio/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "qceqio/pathsum.hpp"
#include "qceqio/rng.hpp"

namespace qceqio {

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string sanitize(std::string s) {
    for (char& ch : s) {
        if (ch == ',' || ch == '\n' || ch == '\r') ch = ' ';
    }
    return s;
}

template <typename F>
double mean_seconds(uint32_t runs, F&& body) {
    if (runs == 0) runs = 1;
    double total = 0.0;
    for (uint32_t i = 0; i < runs; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        body();
        auto t1 = std::chrono::steady_clock::now();
        total += std::chrono::duration<double>(t1 - t0).count();
    }
    return total / runs;
}

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", s);
    return buf;
}

}  // namespace

BenchRow bench_circuit(const std::string& name, const Circuit& c, const BenchOptions& opts) {
    BenchRow row;
    row.name = name;
    row.n = c.n_wires;
    GateStats stats = gate_stats(c);
    row.clifford = stats.clifford_count;
    row.t = stats.t_count;

    try {
        QuantumImplementation impl;
        impl.prep.n_wires = c.n_wires;
        impl.main = c;
        impl.data_wires.resize(c.n_wires);
        std::iota(impl.data_wires.begin(), impl.data_wires.end(), 0);

        QuantumImplementation obf = obfuscate(impl, opts.obf);
        Circuit positive = concat(obf.prep, obf.main);
        Circuit original = tensor_extend(c, opts.obf.lambda);
        row.m = circuit_pathsum(positive).m;

        CheckResult pos;
        row.time_pos = mean_seconds(opts.timing_runs, [&] {
            pos = check_equivalence(positive, original, opts.check);
        });
        row.verdict_pos = pos.verdict;

        if (opts.mutate) {
            Circuit negative =
                mutate(original, Rng::derive(opts.obf.seed ^ fnv1a(name), 0xBE));
            CheckResult neg;
            row.time_neg = mean_seconds(opts.timing_runs, [&] {
                neg = check_equivalence(positive, negative, opts.check);
            });
            row.verdict_neg = neg.verdict;
        }
    } catch (const std::exception& e) {
        row.status = std::string("error: ") + sanitize(e.what());
    }
    return row;
}

std::vector<BenchRow> bench_directory(const std::string& dir, const BenchOptions& opts) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".qcx") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    std::vector<BenchRow> rows;
    for (const fs::path& path : files) {
        std::string name = path.stem().string();
        try {
            std::ifstream in(path);
            std::stringstream buf;
            buf << in.rdbuf();
            Circuit c = parse_circuit(buf.str());
            rows.push_back(bench_circuit(name, c, opts));
        } catch (const std::exception& e) {
            BenchRow row;
            row.name = name;
            row.status = std::string("error: ") + sanitize(e.what());
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out = "name,n,m,clifford,t,time_pos,time_neg,verdict_pos,verdict_neg,status\n";
    for (const BenchRow& r : rows) {
        out += sanitize(r.name) + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) +
               ',' + std::to_string(r.clifford) + ',' + std::to_string(r.t) + ',' +
               format_seconds(r.time_pos) + ',' + format_seconds(r.time_neg) + ',' +
               verdict_name(r.verdict_pos) + ',' + verdict_name(r.verdict_neg) + ',' +
               sanitize(r.status) + '\n';
    }
    return out;
}

}  // namespace qceqio
