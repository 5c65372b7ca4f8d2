#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qceqio/circuit.hpp"
#include "qceqio/obfuscate.hpp"

namespace qceqio {

using Amp = std::complex<double>;
using State = std::vector<Amp>;
// Column-major dense operator: matrix[col] is the image of basis state |col>.
using UnitaryMatrix = std::vector<State>;

inline constexpr uint32_t kStateWireLimit = 24;
inline constexpr uint32_t kUnitaryWireLimit = 10;

// Basis-state convention everywhere: wire 0 is the most significant bit, so
// the printed bitstring |b0 b1 .. b_{n-1}> reads left to right in wire order.
inline uint64_t wire_mask(uint32_t n_wires, uint32_t wire) {
    return 1ull << (n_wires - 1 - wire);
}

State simulate_state(const Circuit& c, uint64_t basis_in);
void apply_gate(State& psi, const Gate& g, uint32_t n_wires);
UnitaryMatrix circuit_unitary(const Circuit& c);

bool unitary_equal(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol);
bool unitary_equal_up_to_phase(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol);

// Runs prep from |0..0>, writes x into the data register with X gates, runs
// main, and checks that measuring the data wires yields truth_table[x] with
// probability 1 within tol, for every x in the table. Keys and values are
// bitstrings over data_wires in list order (first listed wire = leftmost bit).
bool implementation_computes(const QuantumImplementation& impl,
                             const std::map<uint64_t, uint64_t>& truth_table,
                             double tol = 1e-9);

using Mat2 = std::array<Amp, 4>;  // row-major 2x2

enum class Pauli { I, X, Y, Z };

Mat2 pauli_matrix(Pauli p);

// The 24 single-qubit Cliffords, materialized by closing {H, S} under
// multiplication and deduplicating global phase. Asserts the count.
const std::vector<Mat2>& single_qubit_cliffords();

// Twirl identity: sum_C (C^dag P1 C) rho (C^dag P2 C) == 0 for P1 != P2.
bool clifford_twirl_check(Pauli p1, Pauli p2, const Mat2& rho, double tol = 1e-10);

}  // namespace qceqio
