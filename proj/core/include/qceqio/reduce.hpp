#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "qceqio/pathsum.hpp"
#include "qceqio/pit.hpp"

namespace qceqio {

// Rewrite rules, in priority order. Each application removes at least one
// path variable, so reduction terminates after at most m steps.
//   Elim:  y absent from phase and outputs     -> drop y,            s -= 2
//   HH:    phase = (1/2) y (y' ^ P) + R        -> y' := P, drop y y', s -= 2
//   Omega: phase = (1/4) y + (1/2) y P + R     -> R + 1/8 - (1/4)L(P), s -= 1
enum class ReduceRule { Elim, HH, Omega };

std::string to_string(ReduceRule r);

PathSum reduce(const PathSum& p);

// Same reduction, invoking `observer` after every rule application with the
// sums before and after the step (used by the soundness property tests).
using ReduceObserver =
    std::function<void(ReduceRule, const PathSum& before, const PathSum& after)>;
PathSum reduce_traced(const PathSum& p, const ReduceObserver& observer);

// m == 0, s == 0, outputs == (x1..xn), and no non-constant phase term; the
// constant term must also vanish unless up_to_global_phase.
bool is_identity(const PathSum& p, bool up_to_global_phase = true);

enum class CheckMethod { Auto, Reduce, Pit, Brute };
enum class CheckVerdict { Equivalent, ProbablyEquivalent, NotEquivalent, Inconclusive };

struct CheckWitness {
    uint64_t basis_in = 0;
    uint64_t basis_out = 0;
};

struct CheckConfig {
    CheckMethod method = CheckMethod::Auto;
    bool up_to_global_phase = true;
    uint32_t brute_wire_limit = 10;
    uint32_t column_samples = 24;  // sampled-basis fallback before Inconclusive
    PitConfig pit;
    uint64_t seed = 0;
};

struct CheckResult {
    CheckVerdict verdict = CheckVerdict::Inconclusive;
    uint32_t n_wires = 0;
    std::optional<CheckWitness> witness;       // NotEquivalent
    std::optional<Rational> failure;           // ProbablyEquivalent
    std::string detail;
};

// Equivalence of a and b via the miter concat(a, inverse(b)): reduce, then
// fall back to the phase-polynomial identity test, the brute-force oracle, or
// sampled path-sum columns, in that order (per the configured method).
CheckResult check_equivalence(const Circuit& a, const Circuit& b,
                              const CheckConfig& cfg = {});

// "equivalent" / "not-equivalent (witness: |x> -> |z>)" /
// "probably-equivalent (failure <= p)" / "inconclusive".
std::string render_verdict(const CheckResult& r);
std::string verdict_name(CheckVerdict v);

}  // namespace qceqio
