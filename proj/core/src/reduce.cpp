#include "qceqio/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <set>
#include <vector>

#include "qceqio/rng.hpp"
#include "qceqio/statevector.hpp"

namespace qceqio {

namespace {

constexpr double kCheckTol = 1e-9;

Monomial remap_monomial(const Monomial& m, const std::map<uint32_t, uint32_t>& vmap) {
    Monomial out = m;
    for (uint32_t& v : out.vars) {
        auto it = vmap.find(v);
        if (it != vmap.end()) v = it->second;
    }
    return out;  // the remap is monotone, so sortedness is preserved
}

// Compact the surviving path variables to y1..y|live| (ascending by old index).
PathSum canonical_renamed(const PathSum& p, const std::set<uint32_t>& live) {
    std::map<uint32_t, uint32_t> vmap;
    uint32_t next = 1;
    for (uint32_t idx : live) {
        vmap.emplace(var::path(idx), var::path(next++));
    }
    PathSum out;
    out.n_in = p.n_in;
    out.m = static_cast<uint32_t>(live.size());
    out.s = p.s;
    for (const auto& [m, c] : p.phase.terms) {
        out.phase.terms.emplace(remap_monomial(m, vmap), c);
    }
    out.outputs.reserve(p.outputs.size());
    for (const BoolPoly& f : p.outputs) {
        BoolPoly g;
        for (const Monomial& m : f.terms) g.terms.insert(remap_monomial(m, vmap));
        out.outputs.push_back(std::move(g));
    }
    return out;
}

// One rewrite step on the working sum (path-variable indices stay sparse; the
// dense renaming happens once at the end). Returns the rule applied, if any.
std::optional<ReduceRule> reduce_step(PathSum& p, std::set<uint32_t>& live) {
    std::set<uint32_t> out_paths;
    for (const BoolPoly& f : p.outputs) {
        for (uint32_t v : f.variables()) {
            if (var::is_path(v)) out_paths.insert(var::index(v));
        }
    }
    std::map<uint32_t, std::vector<std::pair<Monomial, DyadicPhase>>> phase_occ;
    for (const auto& [m, c] : p.phase.terms) {
        for (uint32_t v : m.vars) {
            if (var::is_path(v)) phase_occ[var::index(v)].emplace_back(m, c);
        }
    }

    // [Elim] y absent from the phase and every output: sum over y gives a bare
    // factor of 2, absorbed by the normalization.
    for (uint32_t j : live) {
        if (!out_paths.count(j) && !phase_occ.count(j)) {
            live.erase(j);
            p.m -= 1;
            p.s -= 2;
            return ReduceRule::Elim;
        }
    }

    // [HH] every phase term containing y has coefficient exactly 1/2 and y is
    // absent from the outputs. Summing over y forces Q = 0, where Q is the xor
    // of the cofactors; solve Q = 0 for a pivot that occurs in Q only as a
    // bare singleton.
    for (uint32_t j : live) {
        if (out_paths.count(j)) continue;
        auto it = phase_occ.find(j);
        if (it == phase_occ.end()) continue;
        bool all_half = true;
        for (const auto& [mono, coeff] : it->second) {
            if (!(coeff == DyadicPhase(1, 1))) {
                all_half = false;
                break;
            }
        }
        if (!all_half) continue;

        uint32_t yj = var::path(j);
        BoolPoly q;
        for (const auto& [mono, coeff] : it->second) q.toggle(mono.without(yj));

        std::map<uint32_t, size_t> occurrences;
        for (const Monomial& m : q.terms) {
            for (uint32_t v : m.vars) {
                if (var::is_path(v)) ++occurrences[var::index(v)];
            }
        }
        uint32_t pivot = 0;
        bool found = false;
        for (const Monomial& m : q.terms) {
            if (m.degree() != 1 || !var::is_path(m.vars[0])) continue;
            uint32_t t = var::index(m.vars[0]);
            if (occurrences[t] == 1 && (!found || t < pivot)) {
                pivot = t;
                found = true;
            }
        }
        if (!found) continue;

        BoolPoly pval = q;
        pval.toggle(Monomial::of(var::path(pivot)));

        for (const auto& [mono, coeff] : it->second) p.phase.terms.erase(mono);
        std::map<uint32_t, BoolPoly> env{{var::path(pivot), pval}};
        p.phase = p.phase.substitute(env);
        for (BoolPoly& f : p.outputs) f = f.substitute(env);
        live.erase(j);
        live.erase(pivot);
        p.m -= 2;
        p.s -= 2;
        return ReduceRule::HH;
    }

    // [Omega] the bare term y carries 1/4 or 3/4, every other term containing
    // y carries exactly 1/2, and y is absent from the outputs:
    //   sum_y e^{2 pi i (y/4 + y P / 2)} = sqrt(2) e^{2 pi i (1/8 - P/4)}.
    // A 3/4 singleton folds into P as an extra +1.
    for (uint32_t j : live) {
        if (out_paths.count(j)) continue;
        auto it = phase_occ.find(j);
        if (it == phase_occ.end()) continue;
        uint32_t yj = var::path(j);
        BoolPoly pval;
        bool ok = true;
        bool have_singleton = false;
        bool three_quarters = false;
        for (const auto& [mono, coeff] : it->second) {
            if (mono.degree() == 1) {
                have_singleton = true;
                if (coeff == DyadicPhase(1, 2)) {
                    three_quarters = false;
                } else if (coeff == DyadicPhase(3, 2)) {
                    three_quarters = true;
                } else {
                    ok = false;
                    break;
                }
            } else if (coeff == DyadicPhase(1, 1)) {
                pval.toggle(mono.without(yj));
            } else {
                ok = false;
                break;
            }
        }
        if (!ok || !have_singleton) continue;
        if (three_quarters) pval.toggle(Monomial::one());

        for (const auto& [mono, coeff] : it->second) p.phase.terms.erase(mono);
        p.phase.add_term(Monomial::one(), DyadicPhase(1, 3));
        p.phase = p.phase + PhasePoly::scaled_lift(DyadicPhase(3, 2), pval);
        live.erase(j);
        p.m -= 1;
        p.s -= 1;
        return ReduceRule::Omega;
    }

    return std::nullopt;
}

}  // namespace

std::string to_string(ReduceRule r) {
    switch (r) {
        case ReduceRule::Elim: return "elim";
        case ReduceRule::HH: return "hh";
        case ReduceRule::Omega: return "omega";
    }
    return "?";
}

PathSum reduce_traced(const PathSum& p, const ReduceObserver& observer) {
    PathSum cur = p;
    std::set<uint32_t> live;
    for (uint32_t j = 1; j <= p.m; ++j) live.insert(j);
    for (;;) {
        PathSum before;
        if (observer) before = canonical_renamed(cur, live);
        std::optional<ReduceRule> rule = reduce_step(cur, live);
        if (!rule) break;
        if (observer) observer(*rule, before, canonical_renamed(cur, live));
    }
    return canonical_renamed(cur, live);
}

PathSum reduce(const PathSum& p) { return reduce_traced(p, nullptr); }

bool is_identity(const PathSum& p, bool up_to_global_phase) {
    if (p.m != 0 || p.s != 0) return false;
    for (size_t i = 0; i < p.outputs.size(); ++i) {
        if (!p.outputs[i].is_var(var::input(static_cast<uint32_t>(i) + 1))) return false;
    }
    if (!p.phase.without_constant().is_zero()) return false;
    if (!up_to_global_phase && !p.phase.constant_term().is_zero()) return false;
    return true;
}

namespace {

bool outputs_are_identity(const PathSum& p) {
    for (size_t i = 0; i < p.outputs.size(); ++i) {
        if (!p.outputs[i].is_var(var::input(static_cast<uint32_t>(i) + 1))) return false;
    }
    return true;
}

uint64_t eval_outputs(const PathSum& p, uint64_t x) {
    uint64_t z = 0;
    uint32_t n = p.n_in;
    for (uint32_t i = 0; i < n; ++i) {
        bool bit = false;
        for (const Monomial& m : p.outputs[i].terms) {
            bool all = true;
            for (uint32_t v : m.vars) {
                uint32_t wire = var::index(v) - 1;
                if (!((x >> (n - 1 - wire)) & 1)) {
                    all = false;
                    break;
                }
            }
            bit ^= all;
        }
        if (bit) z |= 1ull << (n - 1 - i);
    }
    return z;
}

uint64_t indicator_input(const Monomial& m, uint32_t n) {
    uint64_t x = 0;
    for (uint32_t v : m.vars) x |= 1ull << (n - var::index(v));
    return x;
}

// Certificate when the reversible part of the reduced miter is not the
// identity: the inclusion-minimal monomial of f_i ^ x_i pins an input where
// the miter provably permutes the basis.
CheckWitness anf_witness(const PathSum& red) {
    uint32_t n = red.n_in;
    for (uint32_t i = 0; i < n; ++i) {
        BoolPoly g = red.outputs[i];
        g.toggle(Monomial::of(var::input(i + 1)));
        if (g.is_zero()) continue;
        const Monomial* best = nullptr;
        for (const Monomial& m : g.terms) {
            if (!best || m.degree() < best->degree()) best = &m;
        }
        uint64_t x = indicator_input(*best, n);
        return CheckWitness{x, eval_outputs(red, x)};
    }
    return CheckWitness{0, eval_outputs(red, 0)};
}

// Certificate when the residual phase polynomial is nonzero: at the indicator
// of an inclusion-minimal monomial the phase evaluates to exactly that
// coefficient, so the diagonal entry differs from the x = 0 entry.
CheckWitness phase_witness(const PathSum& red, const PhasePoly& nonconst) {
    const Monomial* best = nullptr;
    for (const auto& [m, c] : nonconst.terms) {
        if (m.is_one()) continue;
        if (!best || m.degree() < best->degree()) best = &m;
    }
    uint64_t x = best ? indicator_input(*best, red.n_in) : 0;
    return CheckWitness{x, x};
}

CheckResult brute_stage(const Circuit& a, const Circuit& b, const CheckConfig& cfg) {
    CheckResult res;
    res.n_wires = a.n_wires;
    const size_t dim = size_t{1} << a.n_wires;

    // Columns are simulated one basis state at a time so a mismatch stops the
    // scan early; a full pass costs the same as building both dense unitaries.
    // Any shared nonzero entry fixes the global phase, so the witness column
    // is the first offending one and the witness row the worst within it.
    Amplitude gamma{1.0, 0.0};
    bool gamma_set = !cfg.up_to_global_phase;
    for (size_t col = 0; col < dim; ++col) {
        State ca = simulate_state(a, col);
        State cb = simulate_state(b, col);
        if (!gamma_set) {
            size_t pivot = 0;
            double best = 0.0;
            for (size_t row = 0; row < dim; ++row) {
                double mag = std::abs(ca[row]);
                if (mag > best) {
                    best = mag;
                    pivot = row;
                }
            }
            // A unit-norm column always has an entry >= 1/sqrt(dim); if the
            // other circuit vanishes there, the scan below reports it.
            if (std::abs(cb[pivot]) > kCheckTol) {
                gamma = ca[pivot] / cb[pivot];
                gamma /= std::abs(gamma);
                gamma_set = true;
            }
        }
        double worst = 0.0;
        size_t wr = 0;
        for (size_t row = 0; row < dim; ++row) {
            double d = std::abs(ca[row] - gamma * cb[row]);
            if (d > worst) {
                worst = d;
                wr = row;
            }
        }
        if (worst > kCheckTol) {
            res.verdict = CheckVerdict::NotEquivalent;
            res.witness = CheckWitness{col, wr};
            res.detail = "brute-force unitaries differ";
            return res;
        }
    }
    res.verdict = CheckVerdict::Equivalent;
    res.detail = cfg.up_to_global_phase
                     ? "brute-force unitaries agree up to a global phase"
                     : "brute-force unitaries agree entrywise";
    return res;
}

CheckResult sample_stage(const PathSum& red, const CheckConfig& cfg) {
    CheckResult res;
    res.n_wires = red.n_in;
    uint32_t n = red.n_in;
    if (red.m > kAmplitudeEnumLimit || n > 63) {
        res.verdict = CheckVerdict::Inconclusive;
        res.detail = "reduction halted with " + std::to_string(red.m) +
                     " path variables; too many to enumerate sampled columns";
        return res;
    }

    std::vector<uint64_t> xs;
    xs.push_back(0);
    uint64_t full = n ? ((1ull << n) - 1) : 0;
    if (full) xs.push_back(full);
    Rng rng(Rng::derive(cfg.seed, 0xC07));
    for (uint32_t i = 0; i < cfg.column_samples && n > 0; ++i) {
        xs.push_back(rng.below(1ull << n));
    }

    Amplitude gamma{1.0, 0.0};
    bool gamma_set = !cfg.up_to_global_phase;
    for (uint64_t x : xs) {
        auto col = pathsum_column(red, x, kAmplitudeEnumLimit);
        auto it = col.find(x);
        Amplitude diag = it == col.end() ? Amplitude{0.0, 0.0} : it->second;
        if (!gamma_set) {
            if (std::abs(diag) > kCheckTol) gamma = diag / std::abs(diag);
            gamma_set = true;
        }
        double worst = std::abs(diag - gamma);
        uint64_t wz = x;
        for (const auto& [z, amp] : col) {
            if (z == x) continue;
            double d = std::abs(amp);
            if (d > worst) {
                worst = d;
                wz = z;
            }
        }
        if (worst > kCheckTol) {
            res.verdict = CheckVerdict::NotEquivalent;
            res.witness = CheckWitness{x, wz};
            res.detail = "sampled miter column deviates from the identity";
            return res;
        }
    }
    res.verdict = CheckVerdict::Inconclusive;
    res.detail = "reduction halted with " + std::to_string(red.m) +
                 " path variables; " + std::to_string(xs.size()) +
                 " sampled columns all matched the identity";
    return res;
}

}  // namespace

CheckResult check_equivalence(const Circuit& a, const Circuit& b, const CheckConfig& cfg) {
    if (a.n_wires != b.n_wires) {
        throw WireMismatchError("cannot compare circuits on " +
                                std::to_string(a.n_wires) + " and " +
                                std::to_string(b.n_wires) + " wires");
    }
    CheckResult res;
    res.n_wires = a.n_wires;

    if (cfg.method == CheckMethod::Brute) {
        if (a.n_wires > cfg.brute_wire_limit) {
            res.verdict = CheckVerdict::Inconclusive;
            res.detail = "wire count exceeds the brute-force limit of " +
                         std::to_string(cfg.brute_wire_limit);
            return res;
        }
        return brute_stage(a, b, cfg);
    }

    PathSum red = reduce(circuit_pathsum(concat(a, inverse(b))));

    if (is_identity(red, cfg.up_to_global_phase)) {
        res.verdict = CheckVerdict::Equivalent;
        res.detail = "miter reduced to the identity";
        return res;
    }

    if (red.m == 0) {
        if (!outputs_are_identity(red) || red.s != 0) {
            res.verdict = CheckVerdict::NotEquivalent;
            res.witness = anf_witness(red);
            res.detail = "miter output functions differ from the identity";
            return res;
        }
        DyadicPhase c0 = red.phase.constant_term();
        PhasePoly nonconst = red.phase.without_constant();
        if (!cfg.up_to_global_phase && !c0.is_zero()) {
            res.verdict = CheckVerdict::NotEquivalent;
            res.witness = CheckWitness{0, 0};
            res.detail = "global phase offset of " + c0.to_string();
            return res;
        }
        if (cfg.method == CheckMethod::Reduce) {
            res.verdict = CheckVerdict::NotEquivalent;
            res.witness = phase_witness(red, nonconst);
            res.detail = "residual phase polynomial is nonzero";
            return res;
        }
        PitConfig pc = cfg.pit;
        pc.seed = Rng::derive(cfg.seed ^ cfg.pit.seed, 0x9117);
        PitReport rep = pit_phase_equal(nonconst, PhasePoly::zero(), pc);
        if (rep.verdict == PitVerdict::Accept) {
            res.verdict = CheckVerdict::ProbablyEquivalent;
            res.failure = rep.overall_bound;
            res.detail = "randomized phase identity test accepted after " +
                         std::to_string(rep.trials) + " trials";
        } else {
            res.verdict = CheckVerdict::NotEquivalent;
            res.witness = phase_witness(red, nonconst);
            res.detail = "randomized phase identity test rejected";
        }
        return res;
    }

    if (cfg.method == CheckMethod::Reduce || cfg.method == CheckMethod::Pit) {
        res.verdict = CheckVerdict::Inconclusive;
        res.detail = "reduction halted with " + std::to_string(red.m) +
                     " path variables";
        return res;
    }

    if (a.n_wires <= cfg.brute_wire_limit) return brute_stage(a, b, cfg);
    return sample_stage(red, cfg);
}

std::string verdict_name(CheckVerdict v) {
    switch (v) {
        case CheckVerdict::Equivalent: return "equivalent";
        case CheckVerdict::ProbablyEquivalent: return "probably-equivalent";
        case CheckVerdict::NotEquivalent: return "not-equivalent";
        case CheckVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string render_verdict(const CheckResult& r) {
    std::string out = verdict_name(r.verdict);
    if (r.verdict == CheckVerdict::NotEquivalent && r.witness) {
        out += " (witness: |" + format_bitstring(r.witness->basis_in, r.n_wires) +
               "> -> |" + format_bitstring(r.witness->basis_out, r.n_wires) + ">)";
    } else if (r.verdict == CheckVerdict::ProbablyEquivalent && r.failure) {
        out += " (failure <= " + format_scientific(*r.failure) + ")";
    }
    return out;
}

}  // namespace qceqio
