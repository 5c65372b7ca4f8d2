#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qceqio/circuit.hpp"
#include "qceqio/polynomial.hpp"

namespace qceqio {

using Amplitude = std::complex<double>;

// Subpath sum: |x> -> 2^{-s/2} * sum_{y in {0,1}^m} e^{2 pi i phase(x,y)} |f(x,y)>
// with phase a multilinear dyadic polynomial mod 1 and f in ANF per wire.
struct PathSum {
    uint32_t n_in = 0;
    uint32_t m = 0;  // path variables y1..ym
    int32_t s = 0;   // normalization exponent (amplitude scale 2^{-s/2})
    PhasePoly phase;
    std::vector<BoolPoly> outputs;  // length n_in; outputs[i] is wire i

    bool operator==(const PathSum&) const = default;
};

inline constexpr uint32_t kAmplitudeEnumLimit = 24;

PathSum identity_pathsum(uint32_t n_wires);
PathSum gate_pathsum(const Gate& g, uint32_t n_wires);

// Sequential composition: runs `first`, then `second`. Path variables of
// `second` are renamed densely above those of `first`; its inputs are
// substituted by the outputs of `first` (ANF into outputs, lifted into phase).
PathSum compose(const PathSum& first, const PathSum& second);

PathSum circuit_pathsum(const Circuit& c);

// <z| U |x> by enumerating the 2^m subpaths. Throws when m exceeds the limit.
Amplitude evaluate_amplitude(const PathSum& p, uint64_t basis_in, uint64_t basis_out,
                             uint32_t enum_limit = kAmplitudeEnumLimit);

// Full image of basis state |x> as a sparse column (at most 2^m entries).
std::map<uint64_t, Amplitude> pathsum_column(const PathSum& p, uint64_t basis_in,
                                             uint32_t enum_limit = kAmplitudeEnumLimit);

// phase terms + output terms; the representation-size measure.
uint64_t pathsum_term_count(const PathSum& p);

// Stable debug rendering: "in:", "paths:", "norm:", "phase:", "out_i:" lines.
std::string render_pathsum(const PathSum& p);

// e^{2 pi i d} with exact values on the quarter turns.
Amplitude cis_dyadic(const DyadicPhase& d);

}  // namespace qceqio
