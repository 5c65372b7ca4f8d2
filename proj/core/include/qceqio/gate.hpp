#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qceqio {

// Fixed gate set. RK(k) is the z-rotation diag(1, e^{2*pi*i/2^k}); CRK(k) is its
// controlled version. CX/CCX are controlled-NOTs, CZ/CCZ controlled phases.
enum class GateKind : uint8_t {
    X,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    H,
    RK,
    CX,
    CZ,
    CRK,
    CCX,
    CCZ,
    SWAP,
};

inline constexpr int kGateKindCount = 14;

// One gate application. `k` is the RK/CRK exponent (>= 1). `dag` marks the
// stored adjoint of RK/CRK, whose phase is (2^k - 1)/2^k instead of 1/2^k;
// every other kind has a dedicated adjoint kind or is self-inverse.
struct Gate {
    GateKind kind = GateKind::X;
    uint32_t k = 0;
    bool dag = false;
    std::vector<uint32_t> wires;

    bool operator==(const Gate&) const = default;
};

int gate_arity(GateKind kind);
bool gate_has_exponent(GateKind kind);

// Canonical upper-case spelling ("RKDG"/"CRKDG" for the stored RK adjoints).
std::string gate_name(GateKind kind, bool dag);

Gate gate_adjoint(const Gate& g);

inline Gate make_gate(GateKind kind, std::vector<uint32_t> wires, uint32_t k = 0,
                      bool dag = false) {
    Gate g;
    g.kind = kind;
    g.k = gate_has_exponent(kind) ? k : 0;
    g.dag = gate_has_exponent(kind) ? dag : false;
    g.wires = std::move(wires);
    return g;
}

}  // namespace qceqio
