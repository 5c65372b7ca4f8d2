#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qceqio/bench.hpp"
#include "qceqio/circuit.hpp"
#include "qceqio/obfuscate.hpp"
#include "qceqio/pathsum.hpp"
#include "qceqio/pit.hpp"
#include "qceqio/reduce.hpp"
#include "qceqio/statevector.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

qceqio::Circuit load_circuit(const std::string& path) {
    return qceqio::parse_circuit(read_input(path));
}

struct CheckFlags {
    std::string method = "auto";
    bool strict_phase = false;
    uint32_t brute_limit = 10;
    uint32_t column_samples = 24;
    uint64_t pit_modulus = (1ull << 61) - 1;
    uint64_t pit_r = 1ull << 32;
    uint32_t pit_trials = 8;
    uint64_t seed = 0;
};

void add_check_flags(CLI::App* cmd, CheckFlags& f) {
    cmd->add_option("--method", f.method, "auto | reduce | pit | brute")
        ->check(CLI::IsMember({"auto", "reduce", "pit", "brute"}));
    cmd->add_flag("--strict-phase", f.strict_phase,
                  "require exact equality instead of up-to-global-phase");
    cmd->add_option("--brute-limit", f.brute_limit,
                    "max wires for the brute-force statevector stage");
    cmd->add_option("--column-samples", f.column_samples,
                    "sampled basis columns before giving up");
    cmd->add_option("--pit-modulus", f.pit_modulus, "prime field for the identity test");
    cmd->add_option("--pit-r", f.pit_r, "identity-test sample range |R|");
    cmd->add_option("--pit-trials", f.pit_trials, "identity-test repetitions");
    cmd->add_option("--seed", f.seed, "randomness seed")->envname("QCEQIO_SEED");
}

qceqio::CheckConfig to_config(const CheckFlags& f) {
    qceqio::CheckConfig cfg;
    if (f.method == "reduce") {
        cfg.method = qceqio::CheckMethod::Reduce;
    } else if (f.method == "pit") {
        cfg.method = qceqio::CheckMethod::Pit;
    } else if (f.method == "brute") {
        cfg.method = qceqio::CheckMethod::Brute;
    }
    cfg.up_to_global_phase = !f.strict_phase;
    cfg.brute_wire_limit = f.brute_limit;
    cfg.column_samples = f.column_samples;
    cfg.pit.modulus = f.pit_modulus;
    cfg.pit.r_size = f.pit_r;
    cfg.pit.trials = f.pit_trials;
    cfg.seed = f.seed;
    return cfg;
}

struct ObfFlags {
    uint32_t lambda = 2;
    uint32_t ell = 8;
    uint32_t loop_bound = 0;
    double ratio = 0.5;
    std::string strategy = "state-circuit-split";
    uint64_t seed = 0;
    uint32_t retry_limit = 16;
};

void add_obf_flags(CLI::App* cmd, ObfFlags& f, bool with_seed = true) {
    cmd->add_option("--lambda", f.lambda, "flag wires to append");
    cmd->add_option("--ell", f.ell, "identity loops to insert");
    cmd->add_option("-B,--loop-bound", f.loop_bound,
                    "max gates per loop (0 = ceil(2*log2(n)) + 2)");
    cmd->add_option("--ratio", f.ratio, "prep-side fraction of each split loop");
    cmd->add_option("--strategy", f.strategy,
                    "state-circuit-split | in-circuit-loop | mixed")
        ->check(CLI::IsMember({"state-circuit-split", "scs", "in-circuit-loop", "icl",
                               "mixed"}));
    cmd->add_option("--retry-limit", f.retry_limit, "placement retries per loop");
    if (with_seed) {
        cmd->add_option("--seed", f.seed, "randomness seed")->envname("QCEQIO_SEED");
    }
}

qceqio::ObfuscationConfig to_config(const ObfFlags& f) {
    qceqio::ObfuscationConfig cfg;
    cfg.lambda = f.lambda;
    cfg.ell = f.ell;
    cfg.loop_bound = f.loop_bound;
    cfg.split_ratio = f.ratio;
    cfg.strategy = *qceqio::strategy_from_string(f.strategy);
    cfg.seed = f.seed;
    cfg.retry_limit = f.retry_limit;
    return cfg;
}

std::string format_amplitude(const qceqio::Amplitude& a) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g %.12g", a.real(), a.imag());
    return buf;
}

nlohmann::ordered_json loop_json(const qceqio::LoopRecord& rec) {
    nlohmann::ordered_json j;
    j["iter"] = rec.iter;
    j["family"] = qceqio::to_string(rec.family);
    j["placement"] = qceqio::to_string(rec.placement);
    j["wires"] = rec.wires;
    j["split_index"] = rec.split_index;
    if (rec.prep_pos) j["prep_pos"] = *rec.prep_pos;
    j["main_pos"] = rec.main_pos;
    if (rec.main_pos2) j["main_pos2"] = *rec.main_pos2;
    return j;
}

int exit_code_for(qceqio::CheckVerdict v) {
    switch (v) {
        case qceqio::CheckVerdict::Equivalent:
        case qceqio::CheckVerdict::ProbablyEquivalent: return 0;
        case qceqio::CheckVerdict::NotEquivalent: return 1;
        case qceqio::CheckVerdict::Inconclusive: return 2;
    }
    return 70;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qceqio: path-sum circuit semantics, equivalence checking, and "
                 "identity-loop obfuscation"};
    app.require_subcommand(1);

    // parse
    auto* parse_cmd = app.add_subcommand("parse", "parse a circuit and echo it canonically");
    std::string parse_file;
    bool parse_stats = false;
    parse_cmd->add_option("file", parse_file, "circuit file (- for stdin)")->required();
    parse_cmd->add_flag("--stats", parse_stats, "print gate statistics instead");

    // pathsum
    auto* ps_cmd = app.add_subcommand("pathsum", "print a circuit's path sum");
    std::string ps_file, ps_out;
    bool ps_reduce = false;
    ps_cmd->add_option("file", ps_file, "circuit file (- for stdin)")->required();
    ps_cmd->add_flag("--reduce", ps_reduce, "apply the rewrite rules first");
    ps_cmd->add_option("-o,--out", ps_out, "output file (default stdout)");

    // amplitude
    auto* amp_cmd = app.add_subcommand("amplitude", "one transition amplitude <out|U|in>");
    std::string amp_file, amp_in, amp_out;
    amp_cmd->add_option("file", amp_file, "circuit file (- for stdin)")->required();
    amp_cmd->add_option("--in", amp_in, "input basis bitstring")->required();
    amp_cmd->add_option("--out", amp_out, "output basis bitstring")->required();

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "statevector from a basis input");
    std::string sim_file, sim_in;
    sim_cmd->add_option("file", sim_file, "circuit file (- for stdin)")->required();
    sim_cmd->add_option("--in", sim_in, "input basis bitstring (default all zeros)");

    // check
    auto* check_cmd = app.add_subcommand("check", "decide circuit equivalence");
    std::string check_a, check_b;
    CheckFlags check_flags;
    check_cmd->add_option("file1", check_a, "first circuit")->required();
    check_cmd->add_option("file2", check_b, "second circuit")->required();
    add_check_flags(check_cmd, check_flags);

    // obfuscate
    auto* obf_cmd = app.add_subcommand("obfuscate", "insert split identity loops");
    std::string obf_file, obf_out, obf_prep, obf_manifest;
    ObfFlags obf_flags;
    obf_cmd->add_option("file", obf_file, "circuit file (- for stdin)")->required();
    obf_cmd->add_option("-o,--out", obf_out, "obfuscated main circuit file");
    obf_cmd->add_option("--prep", obf_prep, "state-prep circuit file");
    obf_cmd->add_option("--manifest", obf_manifest, "JSON-lines loop manifest file");
    add_obf_flags(obf_cmd, obf_flags);

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "obfuscate-and-verify a circuit directory");
    std::string bench_dir, bench_csv_path;
    bool bench_mutate = true;
    CheckFlags bench_check;
    ObfFlags bench_obf;
    uint32_t bench_runs = 5;
    bench_cmd->add_option("dir", bench_dir, "directory of .qcx circuits")->required();
    bench_cmd->add_option("--csv", bench_csv_path, "CSV output file (default stdout)");
    bench_cmd->add_flag("--mutate,!--no-mutate", bench_mutate,
                        "also time a mutated negative per circuit");
    bench_cmd->add_option("--timing-runs", bench_runs, "runs averaged per timing");
    add_check_flags(bench_cmd, bench_check);
    add_obf_flags(bench_cmd, bench_obf, /*with_seed=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*parse_cmd) {
            qceqio::Circuit c = load_circuit(parse_file);
            if (parse_stats) {
                qceqio::GateStats st = qceqio::gate_stats(c);
                std::cout << "wires: " << c.n_wires << "\n"
                          << "gates: " << c.gates.size() << "\n"
                          << "clifford: " << st.clifford_count << "\n"
                          << "t: " << st.t_count << "\n"
                          << "rotation: " << st.rotation_count << "\n";
            } else {
                std::cout << qceqio::serialize_circuit(c);
            }
            return 0;
        }

        if (*ps_cmd) {
            qceqio::Circuit c = load_circuit(ps_file);
            qceqio::PathSum p = qceqio::circuit_pathsum(c);
            if (ps_reduce) p = qceqio::reduce(p);
            write_output(ps_out, qceqio::render_pathsum(p));
            return 0;
        }

        if (*amp_cmd) {
            qceqio::Circuit c = load_circuit(amp_file);
            uint64_t in = qceqio::parse_bitstring(amp_in, c.n_wires);
            uint64_t out = qceqio::parse_bitstring(amp_out, c.n_wires);
            qceqio::Amplitude a =
                qceqio::evaluate_amplitude(qceqio::circuit_pathsum(c), in, out);
            std::cout << format_amplitude(a) << "\n";
            return 0;
        }

        if (*sim_cmd) {
            qceqio::Circuit c = load_circuit(sim_file);
            uint64_t in = sim_in.empty() ? 0 : qceqio::parse_bitstring(sim_in, c.n_wires);
            qceqio::State psi = qceqio::simulate_state(c, in);
            for (uint64_t basis = 0; basis < psi.size(); ++basis) {
                if (std::abs(psi[basis]) <= 1e-12) continue;
                std::cout << qceqio::format_bitstring(basis, c.n_wires) << " "
                          << format_amplitude(psi[basis]) << "\n";
            }
            return 0;
        }

        if (*check_cmd) {
            qceqio::Circuit a = load_circuit(check_a);
            qceqio::Circuit b = load_circuit(check_b);
            qceqio::CheckResult res =
                qceqio::check_equivalence(a, b, to_config(check_flags));
            std::cout << qceqio::render_verdict(res) << "\n";
            return exit_code_for(res.verdict);
        }

        if (*obf_cmd) {
            qceqio::Circuit c = load_circuit(obf_file);
            qceqio::QuantumImplementation impl;
            impl.prep.n_wires = c.n_wires;
            impl.main = c;
            impl.data_wires.resize(c.n_wires);
            for (uint32_t i = 0; i < c.n_wires; ++i) impl.data_wires[i] = i;
            qceqio::ObfuscationOutcome outcome =
                qceqio::obfuscate_with_manifest(impl, to_config(obf_flags));

            if (!obf_manifest.empty()) {
                nlohmann::ordered_json header;
                header["n"] = c.n_wires;
                header["lambda"] = obf_flags.lambda;
                header["ell"] = obf_flags.ell;
                header["strategy"] = obf_flags.strategy;
                header["seed"] = obf_flags.seed;
                std::string lines = header.dump() + "\n";
                for (const auto& rec : outcome.loops) lines += loop_json(rec).dump() + "\n";
                write_output(obf_manifest, lines);
            }
            if (!obf_prep.empty()) {
                write_output(obf_prep, qceqio::serialize_circuit(outcome.impl.prep));
            }
            if (!obf_out.empty()) {
                write_output(obf_out, qceqio::serialize_circuit(outcome.impl.main));
            } else {
                std::cout << "# prep\n" << qceqio::serialize_circuit(outcome.impl.prep)
                          << "# main\n" << qceqio::serialize_circuit(outcome.impl.main);
            }
            return 0;
        }

        if (*bench_cmd) {
            qceqio::BenchOptions opts;
            bench_obf.seed = bench_check.seed;  // one --seed drives both stages
            opts.obf = to_config(bench_obf);
            opts.check = to_config(bench_check);
            opts.mutate = bench_mutate;
            opts.timing_runs = bench_runs;
            std::vector<qceqio::BenchRow> rows = qceqio::bench_directory(bench_dir, opts);
            write_output(bench_csv_path, qceqio::bench_csv(rows));
            return 0;
        }
    } catch (const qceqio::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 64;
    } catch (const qceqio::WireMismatchError& e) {
        std::cerr << "wire mismatch: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return 70;
}
