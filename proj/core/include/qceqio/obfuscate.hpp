#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qceqio/circuit.hpp"

namespace qceqio {

// A circuit split into a state-preparation stage and a main stage acting on
// the same register. Data wires carry the computation's input; flag wires are
// workspace prepared by `prep` (and grown by the obfuscator).
struct QuantumImplementation {
    Circuit prep;
    Circuit main;
    std::vector<uint32_t> data_wires;
    std::vector<uint32_t> flag_wires;
};

enum class ObfuscationStrategy { StateCircuitSplit, InCircuitLoop, Mixed };
enum class LoopFamily { WordInverse, PhaseCycle, InvolutionPair };

// An identity-equivalent gate loop over the ambient register, plus the
// family's structural split boundary.
struct SubpathDelta {
    Circuit gates;
    LoopFamily family = LoopFamily::WordInverse;
    std::vector<uint32_t> wires;  // touched wires, sorted
    size_t split_index = 0;
};

struct ObfuscationConfig {
    uint32_t lambda = 2;    // flag wires appended to the register
    uint32_t ell = 8;       // loop insertions
    uint32_t loop_bound = 0;  // B; 0 = default ceil(2*log2(n)) + 2
    double split_ratio = 0.5;
    ObfuscationStrategy strategy = ObfuscationStrategy::StateCircuitSplit;
    uint64_t seed = 0;
    uint32_t retry_limit = 16;
};

// Where one loop went, for the manifest.
struct LoopRecord {
    uint32_t iter = 0;
    LoopFamily family = LoopFamily::WordInverse;
    ObfuscationStrategy placement = ObfuscationStrategy::StateCircuitSplit;
    std::vector<uint32_t> wires;
    size_t split_index = 0;
    std::optional<size_t> prep_pos;   // StateCircuitSplit: head start index in prep
    size_t main_pos = 0;              // tail (or head) insertion index in main
    std::optional<size_t> main_pos2;  // InCircuitLoop: tail insertion index
};

struct ObfuscationOutcome {
    QuantumImplementation impl;
    std::vector<LoopRecord> loops;
};

uint32_t default_loop_bound(uint32_t n_wires);

// Seeded identity-equivalent loop of at most B gates drawn from the word-
// inverse / phase-cycle / involution-pair families. Wires come from
// `wire_pool` (all wires of ctx when empty). The reduced path sum of the
// result is verified to be the identity up to global phase before returning.
SubpathDelta sample_loop(const ObfuscationConfig& cfg, const Circuit& ctx, uint64_t seed,
                         const std::vector<uint32_t>& wire_pool = {});

// (head, tail) with the cut at round(ratio * size), clamped to [0, size].
std::pair<Circuit, Circuit> split_loop(const SubpathDelta& d, double ratio);

ObfuscationOutcome obfuscate_with_manifest(const QuantumImplementation& impl,
                                           const ObfuscationConfig& cfg);
QuantumImplementation obfuscate(const QuantumImplementation& impl,
                                const ObfuscationConfig& cfg);

std::string to_string(ObfuscationStrategy s);
std::string to_string(LoopFamily f);
std::optional<ObfuscationStrategy> strategy_from_string(const std::string& s);

}  // namespace qceqio
