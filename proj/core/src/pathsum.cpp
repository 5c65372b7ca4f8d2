#include "qceqio/pathsum.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qceqio {

namespace {

void check_wires(const Gate& g, uint32_t n_wires) {
    if (g.wires.size() != static_cast<size_t>(gate_arity(g.kind))) {
        throw std::invalid_argument("gate arity mismatch");
    }
    for (size_t i = 0; i < g.wires.size(); ++i) {
        if (g.wires[i] >= n_wires) throw std::invalid_argument("gate wire out of range");
        for (size_t j = i + 1; j < g.wires.size(); ++j) {
            if (g.wires[i] == g.wires[j]) {
                throw std::invalid_argument("gate wires must be distinct");
            }
        }
    }
}

DyadicPhase rk_phase(uint32_t k, bool dag) {
    // RK(k) phases by 1/2^k on |1>; the stored adjoint by (2^k - 1)/2^k.
    BigInt num = dag ? (BigInt(1) << k) - 1 : BigInt(1);
    return DyadicPhase(std::move(num), k);
}

Monomial rename_paths(const Monomial& m, uint32_t offset) {
    Monomial out = m;
    for (uint32_t& v : out.vars) {
        if (var::is_path(v)) v = var::path(var::index(v) + offset);
    }
    return out;  // x's sort before y's and the shift is monotone: still sorted
}

BoolPoly rename_paths(const BoolPoly& p, uint32_t offset) {
    if (offset == 0) return p;
    BoolPoly out;
    for (const Monomial& m : p.terms) out.terms.insert(rename_paths(m, offset));
    return out;
}

PhasePoly rename_paths(const PhasePoly& p, uint32_t offset) {
    if (offset == 0) return p;
    PhasePoly out;
    for (const auto& [m, c] : p.terms) out.terms.emplace(rename_paths(m, offset), c);
    return out;
}

}  // namespace

PathSum identity_pathsum(uint32_t n_wires) {
    PathSum p;
    p.n_in = n_wires;
    p.outputs.reserve(n_wires);
    for (uint32_t i = 0; i < n_wires; ++i) {
        p.outputs.push_back(BoolPoly::of_var(var::input(i + 1)));
    }
    return p;
}

PathSum gate_pathsum(const Gate& g, uint32_t n_wires) {
    check_wires(g, n_wires);
    PathSum p = identity_pathsum(n_wires);
    auto x = [](uint32_t wire) { return var::input(wire + 1); };
    const auto& w = g.wires;

    switch (g.kind) {
        case GateKind::X:
            p.outputs[w[0]] = p.outputs[w[0]] ^ BoolPoly::one();
            break;
        case GateKind::Z:
            p.phase.add_term(Monomial::of(x(w[0])), DyadicPhase(1, 1));
            break;
        case GateKind::S:
            p.phase.add_term(Monomial::of(x(w[0])), DyadicPhase(1, 2));
            break;
        case GateKind::Sdg:
            p.phase.add_term(Monomial::of(x(w[0])), DyadicPhase(3, 2));
            break;
        case GateKind::T:
            p.phase.add_term(Monomial::of(x(w[0])), DyadicPhase(1, 3));
            break;
        case GateKind::Tdg:
            p.phase.add_term(Monomial::of(x(w[0])), DyadicPhase(7, 3));
            break;
        case GateKind::RK:
            p.phase.add_term(Monomial::of(x(w[0])), rk_phase(g.k, g.dag));
            break;
        case GateKind::H: {
            uint32_t y = var::path(1);
            p.m = 1;
            p.s = 1;
            p.phase.add_term(Monomial::of(x(w[0])).times(Monomial::of(y)),
                             DyadicPhase(1, 1));
            p.outputs[w[0]] = BoolPoly::of_var(y);
            break;
        }
        case GateKind::CX:
            p.outputs[w[1]] = p.outputs[w[1]] ^ BoolPoly::of_var(x(w[0]));
            break;
        case GateKind::CZ:
            p.phase.add_term(Monomial::of(x(w[0])).times(Monomial::of(x(w[1]))),
                             DyadicPhase(1, 1));
            break;
        case GateKind::CRK:
            p.phase.add_term(Monomial::of(x(w[0])).times(Monomial::of(x(w[1]))),
                             rk_phase(g.k, g.dag));
            break;
        case GateKind::CCX:
            p.outputs[w[2]] =
                p.outputs[w[2]] ^
                BoolPoly{{Monomial::of(x(w[0])).times(Monomial::of(x(w[1])))}};
            break;
        case GateKind::CCZ: {
            Monomial m = Monomial::of(x(w[0])).times(Monomial::of(x(w[1])));
            p.phase.add_term(m.times(Monomial::of(x(w[2]))), DyadicPhase(1, 1));
            break;
        }
        case GateKind::SWAP:
            p.outputs[w[0]] = BoolPoly::of_var(x(w[1]));
            p.outputs[w[1]] = BoolPoly::of_var(x(w[0]));
            break;
    }
    return p;
}

PathSum compose(const PathSum& first, const PathSum& second) {
    if (first.n_in != second.n_in) {
        throw std::invalid_argument("compose: wire counts differ");
    }
    PathSum out;
    out.n_in = first.n_in;
    out.m = first.m + second.m;
    out.s = first.s + second.s;

    // Substitute the first sum's outputs for the second's inputs; identity
    // outputs need no entry.
    std::map<uint32_t, BoolPoly> env;
    for (uint32_t i = 0; i < first.n_in; ++i) {
        uint32_t v = var::input(i + 1);
        if (!first.outputs[i].is_var(v)) env.emplace(v, first.outputs[i]);
    }

    out.outputs.reserve(second.outputs.size());
    for (const BoolPoly& f : second.outputs) {
        out.outputs.push_back(rename_paths(f, first.m).substitute(env));
    }
    out.phase = first.phase + rename_paths(second.phase, first.m).substitute(env);
    return out;
}

PathSum circuit_pathsum(const Circuit& c) {
    PathSum acc = identity_pathsum(c.n_wires);
    for (const Gate& g : c.gates) acc = compose(acc, gate_pathsum(g, c.n_wires));
    return acc;
}

Amplitude cis_dyadic(const DyadicPhase& d) {
    static const double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
    switch (d.denom_exp()) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {-1.0, 0.0};
        case 2:
            return d.numerator() == 1 ? Amplitude{0.0, 1.0} : Amplitude{0.0, -1.0};
        case 3: {
            switch (d.numerator().convert_to<unsigned>()) {
                case 1: return {kInvSqrt2, kInvSqrt2};
                case 3: return {-kInvSqrt2, kInvSqrt2};
                case 5: return {-kInvSqrt2, -kInvSqrt2};
                default: return {kInvSqrt2, -kInvSqrt2};
            }
        }
        default:
            return std::polar(1.0, 2.0 * std::numbers::pi * d.to_double());
    }
}

namespace {

Amplitude cis_scaled(uint64_t num, uint32_t k) {
    // e^{2 pi i num/2^k} for num already reduced mod 2^k.
    if (num == 0) return {1.0, 0.0};
    uint32_t tz = static_cast<uint32_t>(std::countr_zero(num));
    if (tz > 0) {
        num >>= tz;
        k -= tz;
    }
    if (k <= 3) return cis_dyadic(DyadicPhase(BigInt(num), k));
    return std::polar(1.0, 2.0 * std::numbers::pi *
                               std::ldexp(static_cast<double>(num), -static_cast<int>(k)));
}

struct CompiledTerm {
    uint64_t xmask = 0;
    uint64_t ymask = 0;
};

struct CompiledSum {
    uint32_t n = 0;
    uint32_t m = 0;
    uint32_t kmax = 0;
    bool exact = false;  // numerators fit u64: accumulate mod 2^kmax exactly
    std::vector<CompiledTerm> phase_terms;
    std::vector<uint64_t> phase_scaled;  // numerator << (kmax - k), when exact
    std::vector<double> phase_frac;      // fallback fractional values
    std::vector<std::vector<CompiledTerm>> output_terms;
};

CompiledTerm compile_monomial(const Monomial& mono, uint32_t n, uint32_t m) {
    CompiledTerm t;
    for (uint32_t v : mono.vars) {
        uint32_t idx = var::index(v);
        if (var::is_path(v)) {
            t.ymask |= 1ull << (idx - 1);
        } else {
            t.xmask |= 1ull << (n - idx);  // wire w = x_{w+1} = bit n-1-w
        }
        (void)m;
    }
    return t;
}

CompiledSum compile(const PathSum& p, uint32_t enum_limit) {
    if (p.n_in > 64) throw std::invalid_argument("evaluation supports at most 64 wires");
    if (p.m > enum_limit) {
        throw std::invalid_argument("path-variable enumeration limit exceeded (m = " +
                                    std::to_string(p.m) + ", limit " +
                                    std::to_string(enum_limit) + ")");
    }
    CompiledSum cs;
    cs.n = p.n_in;
    cs.m = p.m;
    cs.kmax = p.phase.max_denom_exp();
    cs.exact = cs.kmax <= 62;
    for (const auto& [mono, coeff] : p.phase.terms) {
        cs.phase_terms.push_back(compile_monomial(mono, cs.n, cs.m));
        if (cs.exact) {
            uint64_t num = coeff.numerator().convert_to<uint64_t>();
            cs.phase_scaled.push_back(num << (cs.kmax - coeff.denom_exp()));
        } else {
            cs.phase_frac.push_back(coeff.to_double());
        }
    }
    cs.output_terms.resize(p.outputs.size());
    for (size_t i = 0; i < p.outputs.size(); ++i) {
        for (const Monomial& mono : p.outputs[i].terms) {
            cs.output_terms[i].push_back(compile_monomial(mono, cs.n, cs.m));
        }
    }
    return cs;
}

inline bool mask_hit(uint64_t value, uint64_t mask) { return (value & mask) == mask; }

Amplitude subpath_amp(const CompiledSum& cs, uint64_t x, uint64_t y) {
    if (cs.exact) {
        uint64_t acc = 0;
        uint64_t mod_mask = cs.kmax ? ((1ull << cs.kmax) - 1) : 0;
        for (size_t t = 0; t < cs.phase_terms.size(); ++t) {
            const CompiledTerm& term = cs.phase_terms[t];
            if (mask_hit(x, term.xmask) && mask_hit(y, term.ymask)) {
                acc = (acc + cs.phase_scaled[t]) & mod_mask;
            }
        }
        return cis_scaled(acc, cs.kmax);
    }
    double frac = 0.0;
    for (size_t t = 0; t < cs.phase_terms.size(); ++t) {
        const CompiledTerm& term = cs.phase_terms[t];
        if (mask_hit(x, term.xmask) && mask_hit(y, term.ymask)) {
            frac += cs.phase_frac[t];
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * frac);
}

uint64_t subpath_output(const CompiledSum& cs, uint64_t x, uint64_t y) {
    uint64_t z = 0;
    for (uint32_t i = 0; i < cs.n; ++i) {
        bool bit = false;
        for (const CompiledTerm& term : cs.output_terms[i]) {
            bit ^= mask_hit(x, term.xmask) && mask_hit(y, term.ymask);
        }
        if (bit) z |= 1ull << (cs.n - 1 - i);
    }
    return z;
}

void check_basis(const PathSum& p, uint64_t basis) {
    if (p.n_in < 64 && basis >= (1ull << p.n_in)) {
        throw std::invalid_argument("basis state out of range");
    }
}

}  // namespace

Amplitude evaluate_amplitude(const PathSum& p, uint64_t basis_in, uint64_t basis_out,
                             uint32_t enum_limit) {
    check_basis(p, basis_in);
    check_basis(p, basis_out);
    CompiledSum cs = compile(p, enum_limit);
    Amplitude sum = 0.0;
    for (uint64_t y = 0; y < (1ull << cs.m); ++y) {
        if (subpath_output(cs, basis_in, y) == basis_out) {
            sum += subpath_amp(cs, basis_in, y);
        }
    }
    return sum * std::exp2(-0.5 * static_cast<double>(p.s));
}

std::map<uint64_t, Amplitude> pathsum_column(const PathSum& p, uint64_t basis_in,
                                             uint32_t enum_limit) {
    check_basis(p, basis_in);
    CompiledSum cs = compile(p, enum_limit);
    std::map<uint64_t, Amplitude> col;
    for (uint64_t y = 0; y < (1ull << cs.m); ++y) {
        col[subpath_output(cs, basis_in, y)] += subpath_amp(cs, basis_in, y);
    }
    double scale = std::exp2(-0.5 * static_cast<double>(p.s));
    for (auto it = col.begin(); it != col.end();) {
        it->second *= scale;
        if (std::abs(it->second) < 1e-14) {
            it = col.erase(it);
        } else {
            ++it;
        }
    }
    return col;
}

uint64_t pathsum_term_count(const PathSum& p) {
    uint64_t count = p.phase.terms.size();
    for (const BoolPoly& f : p.outputs) count += f.terms.size();
    return count;
}

std::string render_pathsum(const PathSum& p) {
    std::string out;
    out += "in: " + std::to_string(p.n_in) + "\n";
    out += "paths: " + std::to_string(p.m) + "\n";
    out += "norm: " + std::to_string(p.s) + "\n";
    out += "phase: " + p.phase.to_string() + "\n";
    for (size_t i = 0; i < p.outputs.size(); ++i) {
        out += "out_" + std::to_string(i + 1) + ": " + p.outputs[i].to_string() + "\n";
    }
    return out;
}

}  // namespace qceqio
