#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qceqio/gate.hpp"

namespace qceqio {

struct GateStats {
    uint64_t clifford_count = 0;
    uint64_t t_count = 0;
    uint64_t rotation_count = 0;

    uint64_t total() const { return clifford_count + t_count + rotation_count; }
    bool operator==(const GateStats&) const = default;
};

struct Circuit {
    uint32_t n_wires = 0;
    std::vector<Gate> gates;
    std::vector<std::string> labels;  // optional display names; not serialized

    // Labels are presentation metadata and do not take part in equality.
    bool operator==(const Circuit& other) const {
        return n_wires == other.n_wires && gates == other.gates;
    }
};

// Parse failure with 1-based line and column of the offending token.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& message);
};

// Wire-count mismatch between two circuits that must act on the same register.
struct WireMismatchError : std::invalid_argument {
    explicit WireMismatchError(const std::string& message)
        : std::invalid_argument(message) {}
};

// Text format: "qubits N" header, then one gate per line ("NAME wire...",
// RK/CRK/RKDG/CRKDG take the exponent k before the wires). '#' starts a
// comment, names are case-insensitive, serialization is canonical upper-case.
Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c);

Circuit inverse(const Circuit& c);
Circuit concat(const Circuit& a, const Circuit& b);  // runs a, then b
Circuit tensor_extend(const Circuit& c, uint32_t extra_wires);
GateStats gate_stats(const Circuit& c);

// Maximal [begin, end) gate-index ranges in which no gate touches any wire in
// `wires`; the full range when the set is never touched. Only nonempty ranges.
std::vector<std::pair<size_t, size_t>> idle_intervals(
    const Circuit& c, const std::vector<uint32_t>& wires);

// One seeded random edit (insert / delete / replace). For circuits of at most
// 10 wires the edit is re-sampled until the unitary provably changes up to
// global phase; beyond that the structural edit is trusted as-is.
Circuit mutate(const Circuit& c, uint64_t seed);

// Shared by parser and CLI: "010" -> basis index (wire 0 = leftmost bit).
uint64_t parse_bitstring(const std::string& bits, uint32_t n_wires);
std::string format_bitstring(uint64_t basis, uint32_t n_wires);

}  // namespace qceqio
