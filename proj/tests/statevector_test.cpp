#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <map>
#include <numbers>

#include "corpus.hpp"
#include "qceqio/reduce.hpp"
#include "qceqio/statevector.hpp"
#include "testutil.hpp"

using namespace qceqio;

namespace {

State basis_state(uint32_t n, uint64_t b) {
    State psi(1ull << n, Amp{0.0, 0.0});
    psi[b] = Amp{1.0, 0.0};
    return psi;
}

Mat2 random_density(Rng& rng) {
    // A A^dag normalized to trace one: Hermitian, positive, trace 1.
    Mat2 a = {Amp{rng.unit() - 0.5, rng.unit() - 0.5},
              Amp{rng.unit() - 0.5, rng.unit() - 0.5},
              Amp{rng.unit() - 0.5, rng.unit() - 0.5},
              Amp{rng.unit() - 0.5, rng.unit() - 0.5}};
    Mat2 rho;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            Amp sum{0.0, 0.0};
            for (int k = 0; k < 2; ++k) {
                sum += a[static_cast<size_t>(2 * r + k)] *
                       std::conj(a[static_cast<size_t>(2 * c + k)]);
            }
            rho[static_cast<size_t>(2 * r + c)] = sum;
        }
    }
    Amp trace = rho[0] + rho[3];
    for (auto& e : rho) e /= trace;
    return rho;
}

}  // namespace

TEST_CASE("single-qubit gates act by their textbook matrices") {
    const double is2 = std::numbers::sqrt2 / 2.0;

    State psi = basis_state(1, 0);
    apply_gate(psi, make_gate(GateKind::H, {0}), 1);
    CHECK(std::abs(psi[0] - Amp{is2, 0.0}) < 1e-15);
    CHECK(std::abs(psi[1] - Amp{is2, 0.0}) < 1e-15);

    psi = basis_state(1, 1);
    apply_gate(psi, make_gate(GateKind::T, {0}), 1);
    CHECK(std::abs(psi[1] - std::polar(1.0, std::numbers::pi / 4.0)) < 1e-15);

    psi = basis_state(1, 1);
    apply_gate(psi, make_gate(GateKind::S, {0}), 1);
    CHECK(std::abs(psi[1] - Amp{0.0, 1.0}) < 1e-15);

    psi = basis_state(1, 1);
    apply_gate(psi, make_gate(GateKind::Sdg, {0}), 1);
    CHECK(std::abs(psi[1] - Amp{0.0, -1.0}) < 1e-15);

    psi = basis_state(1, 0);
    apply_gate(psi, make_gate(GateKind::X, {0}), 1);
    CHECK(psi[0] == Amp{0.0, 0.0});
    CHECK(psi[1] == Amp{1.0, 0.0});

    psi = basis_state(1, 1);
    apply_gate(psi, make_gate(GateKind::Z, {0}), 1);
    CHECK(psi[1] == Amp{-1.0, 0.0});
}

TEST_CASE("RK matches the named rotations at low exponents") {
    for (uint64_t b : {0ull, 1ull}) {
        State z = basis_state(1, b), rk1 = basis_state(1, b);
        apply_gate(z, make_gate(GateKind::Z, {0}), 1);
        apply_gate(rk1, make_gate(GateKind::RK, {0}, 1), 1);
        CHECK(std::abs(z[b] - rk1[b]) < 1e-15);

        State s = basis_state(1, b), rk2 = basis_state(1, b);
        apply_gate(s, make_gate(GateKind::S, {0}), 1);
        apply_gate(rk2, make_gate(GateKind::RK, {0}, 2), 1);
        CHECK(std::abs(s[b] - rk2[b]) < 1e-15);

        State t = basis_state(1, b), rk3 = basis_state(1, b);
        apply_gate(t, make_gate(GateKind::T, {0}), 1);
        apply_gate(rk3, make_gate(GateKind::RK, {0}, 3), 1);
        CHECK(std::abs(t[b] - rk3[b]) < 1e-15);

        State tdg = basis_state(1, b), rk3dg = basis_state(1, b);
        apply_gate(tdg, make_gate(GateKind::Tdg, {0}), 1);
        apply_gate(rk3dg, make_gate(GateKind::RK, {0}, 3, true), 1);
        CHECK(std::abs(tdg[b] - rk3dg[b]) < 1e-15);
    }
}

TEST_CASE("two- and three-wire gates respect the big-endian convention") {
    // Wire 0 is the most significant bit: |10> means wire 0 set.
    State psi = basis_state(2, 2);
    apply_gate(psi, make_gate(GateKind::CX, {0, 1}), 2);
    CHECK(psi[3] == Amp{1.0, 0.0});  // |10> -> |11>

    psi = basis_state(2, 1);  // |01>: control clear
    apply_gate(psi, make_gate(GateKind::CX, {0, 1}), 2);
    CHECK(psi[1] == Amp{1.0, 0.0});

    psi = basis_state(2, 3);
    apply_gate(psi, make_gate(GateKind::CZ, {0, 1}), 2);
    CHECK(psi[3] == Amp{-1.0, 0.0});

    psi = basis_state(2, 2);
    apply_gate(psi, make_gate(GateKind::SWAP, {0, 1}), 2);
    CHECK(psi[1] == Amp{1.0, 0.0});  // |10> -> |01>

    psi = basis_state(3, 6);  // |110>
    apply_gate(psi, make_gate(GateKind::CCX, {0, 1, 2}), 3);
    CHECK(psi[7] == Amp{1.0, 0.0});

    psi = basis_state(3, 7);
    apply_gate(psi, make_gate(GateKind::CCZ, {0, 1, 2}), 3);
    CHECK(psi[7] == Amp{-1.0, 0.0});

    psi = basis_state(3, 6);
    apply_gate(psi, make_gate(GateKind::CCZ, {0, 1, 2}), 3);
    CHECK(psi[6] == Amp{1.0, 0.0});  // no phase below |111>

    psi = basis_state(2, 3);
    apply_gate(psi, make_gate(GateKind::CRK, {0, 1}, 2), 2);
    CHECK(std::abs(psi[3] - Amp{0.0, 1.0}) < 1e-15);
}

TEST_CASE("random circuits produce unitary operators") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Circuit c = testutil::random_circuit(3, 15, 0x5000 + seed);
        CHECK(testutil::unitarity_defect(circuit_unitary(c)) < 1e-12);
    }
}

TEST_CASE("a circuit against its inverse is the identity") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Circuit c = testutil::random_circuit(3, 12, 0x6000 + seed);
        UnitaryMatrix u = circuit_unitary(concat(c, inverse(c)));
        UnitaryMatrix id = circuit_unitary(Circuit{3, {}, {}});
        CHECK(testutil::max_entry_diff(u, id) < 1e-12);
    }
}

TEST_CASE("simulate_state validates its inputs") {
    Circuit big;
    big.n_wires = kStateWireLimit + 1;
    CHECK_THROWS_AS(simulate_state(big, 0), std::invalid_argument);
    Circuit ok;
    ok.n_wires = 2;
    CHECK_THROWS_AS(simulate_state(ok, 4), std::invalid_argument);
}

TEST_CASE("dense unitaries stop at the wire limit") {
    Circuit big;
    big.n_wires = kUnitaryWireLimit + 1;
    CHECK_THROWS_AS(circuit_unitary(big), std::invalid_argument);
    Circuit twenty = corpus::layered_h(20);
    CHECK_THROWS_AS(circuit_unitary(twenty), std::invalid_argument);
}

TEST_CASE("unitary equality distinguishes strict from up-to-phase") {
    Circuit c = testutil::random_circuit(2, 8, 0x42);
    Circuit phased = c;
    for (int i = 0; i < 4; ++i) {
        phased.gates.push_back(
            make_gate(i % 2 == 0 ? GateKind::Z : GateKind::X, {0}));
    }
    // Z X Z X = -I on wire 0.
    UnitaryMatrix u = circuit_unitary(c);
    UnitaryMatrix v = circuit_unitary(phased);
    CHECK_FALSE(unitary_equal(u, v, 1e-9));
    CHECK(unitary_equal_up_to_phase(u, v, 1e-9));
    CHECK(unitary_equal(u, u, 1e-9));

    Circuit other = mutate(c, 5);
    CHECK_FALSE(unitary_equal_up_to_phase(u, circuit_unitary(other), 1e-9));
}

TEST_CASE("implementation_computes checks the classical truth table") {
    QuantumImplementation impl;
    impl.prep.n_wires = 3;
    impl.main.n_wires = 3;
    impl.main.gates = {make_gate(GateKind::CCX, {0, 1, 2})};
    impl.data_wires = {0, 1, 2};

    std::map<uint64_t, uint64_t> and_table;
    for (uint64_t x = 0; x < 8; ++x) {
        uint64_t a = (x >> 2) & 1, b = (x >> 1) & 1, c = x & 1;
        and_table[x] = (a << 2) | (b << 1) | (c ^ (a & b));
    }
    CHECK(implementation_computes(impl, and_table));

    std::map<uint64_t, uint64_t> wrong = and_table;
    wrong[7] = 7;
    CHECK_FALSE(implementation_computes(impl, wrong));
}

TEST_CASE("implementation_computes sees through flag workspace") {
    // prep puts the flag wire into |1>, main uses it as a control; data is
    // wires {0,1} and the table is over data bits only.
    QuantumImplementation impl;
    impl.prep.n_wires = 3;
    impl.prep.gates = {make_gate(GateKind::X, {2})};
    impl.main.n_wires = 3;
    impl.main.gates = {make_gate(GateKind::CX, {2, 1})};
    impl.data_wires = {0, 1};
    impl.flag_wires = {2};

    std::map<uint64_t, uint64_t> table;
    for (uint64_t x = 0; x < 4; ++x) table[x] = x ^ 1;  // flips data bit 1
    CHECK(implementation_computes(impl, table));
}

TEST_CASE("pauli matrices are the standard ones") {
    Mat2 x = pauli_matrix(Pauli::X);
    CHECK(x[0] == Amp{0.0, 0.0});
    CHECK(x[1] == Amp{1.0, 0.0});
    CHECK(x[2] == Amp{1.0, 0.0});
    CHECK(x[3] == Amp{0.0, 0.0});
    Mat2 y = pauli_matrix(Pauli::Y);
    CHECK(y[1] == Amp{0.0, -1.0});
    CHECK(y[2] == Amp{0.0, 1.0});
    Mat2 z = pauli_matrix(Pauli::Z);
    CHECK(z[0] == Amp{1.0, 0.0});
    CHECK(z[3] == Amp{-1.0, 0.0});
    Mat2 i = pauli_matrix(Pauli::I);
    CHECK(i[0] == Amp{1.0, 0.0});
    CHECK(i[1] == Amp{0.0, 0.0});
}

TEST_CASE("there are exactly 24 single-qubit Cliffords and they close") {
    const auto& cliffords = single_qubit_cliffords();
    REQUIRE(cliffords.size() == 24);
    // Every product of two members is again a member, up to global phase.
    auto key_of = [](const Mat2& m) {
        // Align phase at the largest entry, then quantize.
        size_t best = 0;
        double mag = -1.0;
        for (size_t i = 0; i < 4; ++i) {
            if (std::abs(m[i]) > mag) {
                mag = std::abs(m[i]);
                best = i;
            }
        }
        Amp gamma = m[best] / std::abs(m[best]);
        std::array<long long, 8> key{};
        for (size_t i = 0; i < 4; ++i) {
            Amp e = m[i] / gamma;
            key[2 * i] = std::llround(e.real() * (1 << 20));
            key[2 * i + 1] = std::llround(e.imag() * (1 << 20));
        }
        return key;
    };
    std::set<std::array<long long, 8>> table;
    for (const Mat2& c : cliffords) table.insert(key_of(c));
    REQUIRE(table.size() == 24);
    for (const Mat2& a : cliffords) {
        for (const Mat2& b : cliffords) {
            Mat2 ab;
            for (int r = 0; r < 2; ++r) {
                for (int c = 0; c < 2; ++c) {
                    ab[static_cast<size_t>(2 * r + c)] =
                        a[static_cast<size_t>(2 * r)] * b[static_cast<size_t>(c)] +
                        a[static_cast<size_t>(2 * r + 1)] * b[static_cast<size_t>(2 + c)];
                }
            }
            REQUIRE(table.count(key_of(ab)) == 1);
        }
    }
}

TEST_CASE("the Clifford twirl annihilates distinct Pauli pairs") {
    Rng rng(0x71312);
    const Pauli all[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    for (Pauli p1 : all) {
        for (Pauli p2 : all) {
            if (p1 == p2) continue;
            for (int round = 0; round < 5; ++round) {
                Mat2 rho = random_density(rng);
                CHECK(clifford_twirl_check(p1, p2, rho, 1e-10));
            }
        }
    }
    // Equal Paulis survive the twirl: with rho = I/2 the sum is I/2, not 0.
    Mat2 half_id = {Amp{0.5, 0.0}, Amp{0.0, 0.0}, Amp{0.0, 0.0}, Amp{0.5, 0.0}};
    CHECK_FALSE(clifford_twirl_check(Pauli::X, Pauli::X, half_id, 1e-10));
    CHECK_FALSE(clifford_twirl_check(Pauli::I, Pauli::I, half_id, 1e-10));
}

TEST_CASE("statevector and path-sum semantics agree on the corpus") {
    for (const auto& [name, c] : corpus::bundled_small()) {
        if (c.n_wires > 6) continue;
        INFO(name);
        UnitaryMatrix oracle = circuit_unitary(c);
        // The layered circuits carry too many path variables to enumerate
        // directly; reduction collapses the Hadamard ladders first.
        PathSum red = reduce(circuit_pathsum(c));
        REQUIRE(red.m <= 24);
        UnitaryMatrix sum = testutil::matrix_from_pathsum(red);
        CHECK(testutil::max_entry_diff(oracle, sum) < 1e-10);
    }
}
