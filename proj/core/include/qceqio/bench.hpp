#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qceqio/obfuscate.hpp"
#include "qceqio/reduce.hpp"

namespace qceqio {

struct BenchOptions {
    ObfuscationConfig obf;
    CheckConfig check;
    bool mutate = true;
    uint32_t timing_runs = 5;  // each reported time is the mean of this many runs
};

struct BenchRow {
    std::string name;
    uint32_t n = 0;        // wires of the input circuit
    uint64_t m = 0;        // path variables of the obfuscated composite
    uint64_t clifford = 0;
    uint64_t t = 0;
    double time_pos = 0.0;  // seconds
    double time_neg = 0.0;
    CheckVerdict verdict_pos = CheckVerdict::Inconclusive;
    CheckVerdict verdict_neg = CheckVerdict::Inconclusive;
    std::string status = "ok";  // "ok" or "error: ..."; failures never abort the sweep
};

BenchRow bench_circuit(const std::string& name, const Circuit& c, const BenchOptions& opts);

// Benchmarks every *.qcx file in `dir`, sorted by name.
std::vector<BenchRow> bench_directory(const std::string& dir, const BenchOptions& opts);

// CSV with header name,n,m,clifford,t,time_pos,time_neg,verdict_pos,verdict_neg,status
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace qceqio
