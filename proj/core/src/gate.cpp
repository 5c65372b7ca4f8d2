#include "qceqio/gate.hpp"

#include <stdexcept>

namespace qceqio {

namespace {

struct KindInfo {
    const char* name;
    int arity;
    bool has_k;
    bool self_adjoint;
    GateKind adjoint_kind;  // meaningful when !self_adjoint && !has_k
};

const KindInfo& info(GateKind kind) {
    static const KindInfo table[kGateKindCount] = {
        {"X", 1, false, true, GateKind::X},
        {"Z", 1, false, true, GateKind::Z},
        {"S", 1, false, false, GateKind::Sdg},
        {"SDG", 1, false, false, GateKind::S},
        {"T", 1, false, false, GateKind::Tdg},
        {"TDG", 1, false, false, GateKind::T},
        {"H", 1, false, true, GateKind::H},
        {"RK", 1, true, false, GateKind::RK},
        {"CX", 2, false, true, GateKind::CX},
        {"CZ", 2, false, true, GateKind::CZ},
        {"CRK", 2, true, false, GateKind::CRK},
        {"CCX", 3, false, true, GateKind::CCX},
        {"CCZ", 3, false, true, GateKind::CCZ},
        {"SWAP", 2, false, true, GateKind::SWAP},
    };
    return table[static_cast<int>(kind)];
}

}  // namespace

int gate_arity(GateKind kind) { return info(kind).arity; }

bool gate_has_exponent(GateKind kind) { return info(kind).has_k; }

std::string gate_name(GateKind kind, bool dag) {
    if (gate_has_exponent(kind) && dag) {
        return kind == GateKind::RK ? "RKDG" : "CRKDG";
    }
    return info(kind).name;
}

Gate gate_adjoint(const Gate& g) {
    Gate out = g;
    const KindInfo& ki = info(g.kind);
    if (ki.has_k) {
        out.dag = !g.dag;  // phase 1/2^k <-> (2^k - 1)/2^k
    } else if (!ki.self_adjoint) {
        out.kind = ki.adjoint_kind;
    }
    return out;
}

}  // namespace qceqio
