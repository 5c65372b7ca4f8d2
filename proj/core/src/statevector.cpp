#include "qceqio/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qceqio/dyadic.hpp"
#include "qceqio/pathsum.hpp"

namespace qceqio {

namespace {

Amp phase_factor(const Gate& g) {
    switch (g.kind) {
        case GateKind::Z: return {-1.0, 0.0};
        case GateKind::S: return {0.0, 1.0};
        case GateKind::Sdg: return {0.0, -1.0};
        case GateKind::T: return cis_dyadic(DyadicPhase(1, 3));
        case GateKind::Tdg: return cis_dyadic(DyadicPhase(7, 3));
        case GateKind::RK:
        case GateKind::CRK: {
            BigInt num = g.dag ? (BigInt(1) << g.k) - 1 : BigInt(1);
            return cis_dyadic(DyadicPhase(std::move(num), g.k));
        }
        default: return {1.0, 0.0};
    }
}

}  // namespace

void apply_gate(State& psi, const Gate& g, uint32_t n_wires) {
    const uint64_t dim = psi.size();
    auto mask = [&](size_t wire_pos) { return wire_mask(n_wires, g.wires[wire_pos]); };

    switch (g.kind) {
        case GateKind::X: {
            uint64_t t = mask(0);
            for (uint64_t i = 0; i < dim; ++i) {
                if (!(i & t)) std::swap(psi[i], psi[i | t]);
            }
            break;
        }
        case GateKind::Z:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::RK: {
            uint64_t t = mask(0);
            Amp f = phase_factor(g);
            for (uint64_t i = 0; i < dim; ++i) {
                if (i & t) psi[i] *= f;
            }
            break;
        }
        case GateKind::H: {
            uint64_t t = mask(0);
            const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
            for (uint64_t i = 0; i < dim; ++i) {
                if (i & t) continue;
                Amp a = psi[i];
                Amp b = psi[i | t];
                psi[i] = (a + b) * inv_sqrt2;
                psi[i | t] = (a - b) * inv_sqrt2;
            }
            break;
        }
        case GateKind::CX: {
            uint64_t c = mask(0), t = mask(1);
            for (uint64_t i = 0; i < dim; ++i) {
                if ((i & c) && !(i & t)) std::swap(psi[i], psi[i | t]);
            }
            break;
        }
        case GateKind::CZ: {
            uint64_t c = mask(0), t = mask(1);
            for (uint64_t i = 0; i < dim; ++i) {
                if ((i & c) && (i & t)) psi[i] = -psi[i];
            }
            break;
        }
        case GateKind::CRK: {
            uint64_t c = mask(0), t = mask(1);
            Amp f = phase_factor(g);
            for (uint64_t i = 0; i < dim; ++i) {
                if ((i & c) && (i & t)) psi[i] *= f;
            }
            break;
        }
        case GateKind::CCX: {
            uint64_t c1 = mask(0), c2 = mask(1), t = mask(2);
            for (uint64_t i = 0; i < dim; ++i) {
                if ((i & c1) && (i & c2) && !(i & t)) std::swap(psi[i], psi[i | t]);
            }
            break;
        }
        case GateKind::CCZ: {
            uint64_t a = mask(0), b = mask(1), c = mask(2);
            for (uint64_t i = 0; i < dim; ++i) {
                if ((i & a) && (i & b) && (i & c)) psi[i] = -psi[i];
            }
            break;
        }
        case GateKind::SWAP: {
            uint64_t a = mask(0), b = mask(1);
            for (uint64_t i = 0; i < dim; ++i) {
                if ((i & a) && !(i & b)) std::swap(psi[i], psi[(i ^ a) | b]);
            }
            break;
        }
    }
}

State simulate_state(const Circuit& c, uint64_t basis_in) {
    if (c.n_wires > kStateWireLimit) {
        throw std::invalid_argument("statevector simulation supports at most " +
                                    std::to_string(kStateWireLimit) + " wires");
    }
    uint64_t dim = 1ull << c.n_wires;
    if (basis_in >= dim) throw std::invalid_argument("basis state out of range");
    State psi(dim, Amp{0.0, 0.0});
    psi[basis_in] = 1.0;
    for (const Gate& g : c.gates) apply_gate(psi, g, c.n_wires);
    return psi;
}

UnitaryMatrix circuit_unitary(const Circuit& c) {
    if (c.n_wires > kUnitaryWireLimit) {
        throw std::invalid_argument("dense unitaries support at most " +
                                    std::to_string(kUnitaryWireLimit) + " wires");
    }
    uint64_t dim = 1ull << c.n_wires;
    UnitaryMatrix u;
    u.reserve(dim);
    for (uint64_t col = 0; col < dim; ++col) u.push_back(simulate_state(c, col));
    return u;
}

bool unitary_equal(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol) {
    if (u.size() != v.size()) return false;
    for (size_t col = 0; col < u.size(); ++col) {
        if (u[col].size() != v[col].size()) return false;
        for (size_t row = 0; row < u[col].size(); ++row) {
            if (std::abs(u[col][row] - v[col][row]) > tol) return false;
        }
    }
    return true;
}

bool unitary_equal_up_to_phase(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol) {
    if (u.size() != v.size()) return false;
    Amp gamma{1.0, 0.0};
    bool found = false;
    for (size_t col = 0; col < u.size() && !found; ++col) {
        if (u[col].size() != v[col].size()) return false;
        for (size_t row = 0; row < u[col].size(); ++row) {
            if (std::abs(u[col][row]) > tol) {
                if (std::abs(v[col][row]) <= tol) return false;
                gamma = u[col][row] / v[col][row];
                gamma /= std::abs(gamma);
                found = true;
                break;
            }
        }
    }
    UnitaryMatrix w = v;
    for (State& colv : w) {
        for (Amp& a : colv) a *= gamma;
    }
    return unitary_equal(u, w, tol);
}

bool implementation_computes(const QuantumImplementation& impl,
                             const std::map<uint64_t, uint64_t>& truth_table,
                             double tol) {
    uint32_t n = impl.main.n_wires;
    if (impl.prep.n_wires != n) {
        throw std::invalid_argument("prep and main act on different registers");
    }
    uint32_t d = static_cast<uint32_t>(impl.data_wires.size());
    for (const auto& [x, fx] : truth_table) {
        State psi = simulate_state(impl.prep, 0);
        for (uint32_t j = 0; j < d; ++j) {
            if ((x >> (d - 1 - j)) & 1) {
                apply_gate(psi, make_gate(GateKind::X, {impl.data_wires[j]}), n);
            }
        }
        for (const Gate& g : impl.main.gates) apply_gate(psi, g, n);

        // Marginal probability that the data register reads fx.
        double prob = 0.0;
        for (uint64_t basis = 0; basis < psi.size(); ++basis) {
            uint64_t readout = 0;
            for (uint32_t j = 0; j < d; ++j) {
                if (basis & wire_mask(n, impl.data_wires[j])) {
                    readout |= 1ull << (d - 1 - j);
                }
            }
            if (readout == fx) prob += std::norm(psi[basis]);
        }
        if (prob < 1.0 - tol) return false;
    }
    return true;
}

Mat2 pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I: return {Amp{1, 0}, Amp{0, 0}, Amp{0, 0}, Amp{1, 0}};
        case Pauli::X: return {Amp{0, 0}, Amp{1, 0}, Amp{1, 0}, Amp{0, 0}};
        case Pauli::Y: return {Amp{0, 0}, Amp{0, -1}, Amp{0, 1}, Amp{0, 0}};
        case Pauli::Z: return {Amp{1, 0}, Amp{0, 0}, Amp{0, 0}, Amp{-1, 0}};
    }
    return {};
}

namespace {

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat_dag(const Mat2& a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

// Key invariant under global phase: rotate so the first entry of significant
// magnitude becomes real positive, then quantize.
std::array<int64_t, 8> phase_canonical_key(const Mat2& m) {
    Amp align{1.0, 0.0};
    for (const Amp& a : m) {
        if (std::abs(a) > 0.25) {
            align = std::conj(a) / std::abs(a);
            break;
        }
    }
    std::array<int64_t, 8> key{};
    for (size_t i = 0; i < 4; ++i) {
        Amp v = m[i] * align;
        key[2 * i] = llround(v.real() * (1 << 20));
        key[2 * i + 1] = llround(v.imag() * (1 << 20));
    }
    return key;
}

}  // namespace

const std::vector<Mat2>& single_qubit_cliffords() {
    static const std::vector<Mat2> table = [] {
        const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
        Mat2 h = {Amp{inv_sqrt2, 0}, Amp{inv_sqrt2, 0}, Amp{inv_sqrt2, 0},
                  Amp{-inv_sqrt2, 0}};
        Mat2 s = {Amp{1, 0}, Amp{0, 0}, Amp{0, 0}, Amp{0, 1}};
        Mat2 id = {Amp{1, 0}, Amp{0, 0}, Amp{0, 0}, Amp{1, 0}};

        std::vector<Mat2> found{id};
        std::map<std::array<int64_t, 8>, size_t> seen{{phase_canonical_key(id), 0}};
        for (size_t i = 0; i < found.size(); ++i) {
            for (const Mat2& gen : {h, s}) {
                Mat2 next = mat_mul(gen, found[i]);
                auto key = phase_canonical_key(next);
                if (seen.emplace(key, found.size()).second) found.push_back(next);
            }
        }
        if (found.size() != 24) {
            throw std::logic_error("single-qubit Clifford closure has wrong size");
        }
        return found;
    }();
    return table;
}

bool clifford_twirl_check(Pauli p1, Pauli p2, const Mat2& rho, double tol) {
    Mat2 total{};
    for (const Mat2& c : single_qubit_cliffords()) {
        Mat2 cdag = mat_dag(c);
        Mat2 a = mat_mul(cdag, mat_mul(pauli_matrix(p1), c));
        Mat2 b = mat_mul(cdag, mat_mul(pauli_matrix(p2), c));
        Mat2 term = mat_mul(a, mat_mul(rho, b));
        for (size_t i = 0; i < 4; ++i) total[i] += term[i];
    }
    for (size_t i = 0; i < 4; ++i) {
        if (std::abs(total[i]) / 24.0 > tol) return false;
    }
    return true;
}

}  // namespace qceqio
