#include <algorithm>
#include <numeric>
#include <vector>

#include "qceqio/circuit.hpp"
#include "qceqio/reduce.hpp"
#include "qceqio/rng.hpp"
#include "qceqio/statevector.hpp"

namespace qceqio {

namespace {

Gate random_gate(Rng& rng, uint32_t n_wires) {
    static const std::vector<GateKind> one{GateKind::X,  GateKind::Z,   GateKind::S,
                                           GateKind::Sdg, GateKind::T,  GateKind::Tdg,
                                           GateKind::H,  GateKind::RK};
    static const std::vector<GateKind> two{GateKind::CX, GateKind::CZ, GateKind::CRK,
                                           GateKind::SWAP};
    static const std::vector<GateKind> three{GateKind::CCX, GateKind::CCZ};

    std::vector<GateKind> kinds = one;
    if (n_wires >= 2) kinds.insert(kinds.end(), two.begin(), two.end());
    if (n_wires >= 3) kinds.insert(kinds.end(), three.begin(), three.end());
    GateKind kind = kinds[rng.below(kinds.size())];

    std::vector<uint32_t> wires(n_wires);
    std::iota(wires.begin(), wires.end(), 0);
    size_t arity = static_cast<size_t>(gate_arity(kind));
    for (size_t i = 0; i < arity; ++i) {
        size_t j = i + static_cast<size_t>(rng.below(wires.size() - i));
        std::swap(wires[i], wires[j]);
    }
    wires.resize(arity);

    uint32_t k = 0;
    bool dag = false;
    if (gate_has_exponent(kind)) {
        k = 1 + static_cast<uint32_t>(rng.below(4));
        dag = rng.coin();
    }
    return make_gate(kind, std::move(wires), k, dag);
}

Circuit random_edit(const Circuit& c, Rng& rng) {
    Circuit m = c;
    uint64_t choices = c.gates.empty() ? 1 : 3;
    switch (rng.below(choices)) {
        case 0: {  // insert
            size_t pos = rng.below(m.gates.size() + 1);
            m.gates.insert(m.gates.begin() + pos, random_gate(rng, m.n_wires));
            break;
        }
        case 1:  // delete
            m.gates.erase(m.gates.begin() + rng.below(m.gates.size()));
            break;
        default:  // replace
            m.gates[rng.below(m.gates.size())] = random_gate(rng, m.n_wires);
            break;
    }
    return m;
}

// Certain inequivalence from the reduced miter alone: a non-identity
// reversible part or a nonzero residual phase polynomial at m == 0.
bool certainly_not_equivalent(const Circuit& a, const Circuit& b) {
    PathSum red = reduce(circuit_pathsum(concat(a, inverse(b))));
    if (red.m != 0) return false;
    if (red.s != 0) return true;
    for (size_t i = 0; i < red.outputs.size(); ++i) {
        if (!red.outputs[i].is_var(var::input(static_cast<uint32_t>(i) + 1))) {
            return true;
        }
    }
    return !red.phase.without_constant().is_zero();
}

}  // namespace

Circuit mutate(const Circuit& c, uint64_t seed) {
    if (c.n_wires == 0) throw std::invalid_argument("cannot mutate an empty register");
    Rng rng(seed);

    bool small = c.n_wires <= kUnitaryWireLimit;
    UnitaryMatrix original;
    if (small) original = circuit_unitary(c);

    for (int attempt = 0; attempt < 64; ++attempt) {
        Circuit m = random_edit(c, rng);
        if (m == c) continue;
        if (small) {
            if (!unitary_equal_up_to_phase(original, circuit_unitary(m), 1e-9)) return m;
        } else if (certainly_not_equivalent(c, m)) {
            return m;
        }
    }
    // An appended X always flips an output bit.
    Circuit m = c;
    m.gates.push_back(make_gate(GateKind::X, {0}));
    return m;
}

}  // namespace qceqio
