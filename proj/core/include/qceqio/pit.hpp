#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>

#include "qceqio/polynomial.hpp"

namespace qceqio {

using Rational = boost::multiprecision::cpp_rational;

struct PitConfig {
    uint64_t modulus = (1ull << 61) - 1;  // prime field for the evaluation
    uint64_t r_size = 1ull << 32;         // |R|; points sampled from {0..r_size-1}
    uint32_t trials = 8;
    uint64_t seed = 0;
};

enum class PitVerdict { Accept, Reject };

struct PitReport {
    PitVerdict verdict = PitVerdict::Accept;
    uint32_t trials = 0;
    uint64_t degree = 0;  // d: max total degree over both polynomials
    uint64_t ell = 1;     // polynomial count of the Schwartz-Zippel union bound
    Rational per_trial_bound;               // d / |R|
    Rational union_bound;                   // min(1, ell^2 * d / |R|)
    Rational overall_bound;                 // min(1, union_bound^trials)
    std::map<uint32_t, uint64_t> witness;   // failing assignment (Reject only)
};

// Randomized identity test of two phase polynomials: clears denominators by
// the common power of two and compares the scaled integer polynomials at
// uniformly sampled points of R^n modulo the prime field. One-sided: identical
// polynomials are always accepted.
PitReport pit_phase_equal(const PhasePoly& a, const PhasePoly& b, const PitConfig& cfg);

// min(1, ell^2 * degree / r_size), exact.
Rational failure_bound(uint64_t ell, uint64_t degree, const Rational& r_size);

// Exact rational rendered in scientific notation ("5.421e-19").
std::string format_scientific(const Rational& q, int significant_digits = 4);

bool is_prime_u64(uint64_t n);

}  // namespace qceqio
