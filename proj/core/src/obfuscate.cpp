#include "qceqio/obfuscate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qceqio/pathsum.hpp"
#include "qceqio/reduce.hpp"
#include "qceqio/rng.hpp"

namespace qceqio {

uint32_t default_loop_bound(uint32_t n_wires) {
    // ceil(2*log2(n)) + 2 == (smallest t with 2^t >= n^2) + 2.
    if (n_wires <= 1) return 2;
    uint64_t sq = static_cast<uint64_t>(n_wires) * n_wires;
    return static_cast<uint32_t>(std::bit_width(sq - 1)) + 2;
}

namespace {

std::vector<uint32_t> pick_distinct(Rng& rng, const std::vector<uint32_t>& pool,
                                    size_t count) {
    std::vector<uint32_t> scratch = pool;
    for (size_t i = 0; i < count; ++i) {
        size_t j = i + static_cast<size_t>(rng.below(scratch.size() - i));
        std::swap(scratch[i], scratch[j]);
    }
    scratch.resize(count);
    return scratch;
}

Gate random_word_gate(Rng& rng, const std::vector<uint32_t>& pool) {
    static const std::vector<GateKind> one{GateKind::X,  GateKind::Z,   GateKind::S,
                                           GateKind::Sdg, GateKind::T,  GateKind::Tdg,
                                           GateKind::H,  GateKind::RK};
    static const std::vector<GateKind> two{GateKind::CX, GateKind::CZ, GateKind::CRK,
                                           GateKind::SWAP};
    static const std::vector<GateKind> three{GateKind::CCX, GateKind::CCZ};

    std::vector<GateKind> kinds = one;
    if (pool.size() >= 2) kinds.insert(kinds.end(), two.begin(), two.end());
    if (pool.size() >= 3) kinds.insert(kinds.end(), three.begin(), three.end());

    GateKind kind = kinds[rng.below(kinds.size())];
    std::vector<uint32_t> wires =
        pick_distinct(rng, pool, static_cast<size_t>(gate_arity(kind)));
    uint32_t k = 0;
    bool dag = false;
    if (gate_has_exponent(kind)) {
        k = 1 + static_cast<uint32_t>(rng.below(4));
        dag = rng.coin();
    }
    return make_gate(kind, std::move(wires), k, dag);
}

SubpathDelta sample_once(Rng& rng, const std::vector<uint32_t>& pool, uint32_t bound,
                         uint32_t n_wires) {
    SubpathDelta d;
    d.gates.n_wires = n_wires;

    // Families: 0 word-inverse, 1 phase cycle, 2 involution pair.
    std::vector<int> families{0};
    std::vector<int> cycle_variants{0};  // ZZ
    if (bound >= 3) cycle_variants.push_back(1);  // SSZ
    if (bound >= 8) cycle_variants.push_back(2);  // T^a T^(8-a)
    families.push_back(1);
    std::vector<int> involutions{0};  // HH
    if (pool.size() >= 2) {
        involutions.push_back(1);  // CX CX
        involutions.push_back(2);  // CZ CZ
    }
    families.push_back(2);

    switch (families[rng.below(families.size())]) {
        case 0: {
            d.family = LoopFamily::WordInverse;
            uint32_t half = std::max<uint32_t>(1, bound / 2);
            uint32_t len = 1 + static_cast<uint32_t>(rng.below(half));
            Circuit word;
            word.n_wires = n_wires;
            for (uint32_t i = 0; i < len; ++i) {
                word.gates.push_back(random_word_gate(rng, pool));
            }
            d.gates = concat(word, inverse(word));
            d.split_index = len;
            break;
        }
        case 1: {
            d.family = LoopFamily::PhaseCycle;
            uint32_t w = pool[rng.below(pool.size())];
            switch (cycle_variants[rng.below(cycle_variants.size())]) {
                case 0:
                    d.gates.gates = {make_gate(GateKind::Z, {w}), make_gate(GateKind::Z, {w})};
                    d.split_index = 1;
                    break;
                case 1:
                    d.gates.gates = {make_gate(GateKind::S, {w}), make_gate(GateKind::S, {w}),
                                     make_gate(GateKind::Z, {w})};
                    d.split_index = 1 + rng.below(2);
                    break;
                default:
                    for (int i = 0; i < 8; ++i) {
                        d.gates.gates.push_back(make_gate(GateKind::T, {w}));
                    }
                    d.split_index = 1 + rng.below(7);
                    break;
            }
            break;
        }
        default: {
            d.family = LoopFamily::InvolutionPair;
            int variant = involutions[rng.below(involutions.size())];
            if (variant == 0) {
                uint32_t w = pool[rng.below(pool.size())];
                d.gates.gates = {make_gate(GateKind::H, {w}), make_gate(GateKind::H, {w})};
            } else {
                std::vector<uint32_t> ws = pick_distinct(rng, pool, 2);
                GateKind kind = variant == 1 ? GateKind::CX : GateKind::CZ;
                d.gates.gates = {make_gate(kind, {ws[0], ws[1]}),
                                 make_gate(kind, {ws[0], ws[1]})};
            }
            d.split_index = 1;
            break;
        }
    }

    std::set<uint32_t> touched;
    for (const Gate& g : d.gates.gates) touched.insert(g.wires.begin(), g.wires.end());
    d.wires.assign(touched.begin(), touched.end());
    return d;
}

}  // namespace

SubpathDelta sample_loop(const ObfuscationConfig& cfg, const Circuit& ctx, uint64_t seed,
                         const std::vector<uint32_t>& wire_pool) {
    if (ctx.n_wires == 0) throw std::invalid_argument("loop sampling needs a wire");
    std::vector<uint32_t> pool = wire_pool;
    if (pool.empty()) {
        pool.resize(ctx.n_wires);
        std::iota(pool.begin(), pool.end(), 0);
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    if (pool.back() >= ctx.n_wires) {
        throw std::invalid_argument("loop wire pool exceeds the register");
    }
    uint32_t bound = cfg.loop_bound ? cfg.loop_bound : default_loop_bound(ctx.n_wires);
    if (bound < 2) throw std::invalid_argument("loop bound must be at least 2");

    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        SubpathDelta d = sample_once(rng, pool, bound, ctx.n_wires);
        if (d.gates.gates.size() > bound) continue;
        if (is_identity(reduce(circuit_pathsum(d.gates)), true)) return d;
    }
    throw std::logic_error("sampled loops kept failing identity verification");
}

std::pair<Circuit, Circuit> split_loop(const SubpathDelta& d, double ratio) {
    if (ratio < 0.0 || ratio > 1.0) {
        throw std::invalid_argument("split ratio must lie in [0, 1]");
    }
    size_t size = d.gates.gates.size();
    size_t cut = static_cast<size_t>(
        std::min<long long>(static_cast<long long>(size),
                            std::max<long long>(0, std::llround(ratio * size))));
    Circuit head, tail;
    head.n_wires = tail.n_wires = d.gates.n_wires;
    head.gates.assign(d.gates.gates.begin(), d.gates.gates.begin() + cut);
    tail.gates.assign(d.gates.gates.begin() + cut, d.gates.gates.end());
    return {std::move(head), std::move(tail)};
}

namespace {

std::pair<Circuit, Circuit> split_for(const ObfuscationConfig& cfg, const SubpathDelta& d) {
    if (cfg.split_ratio == 0.5) {
        // The family's structural boundary (|w| for word-inverse, a for the
        // phase cycle) stands in for the even split.
        Circuit head, tail;
        head.n_wires = tail.n_wires = d.gates.n_wires;
        size_t cut = std::min(d.split_index, d.gates.gates.size());
        head.gates.assign(d.gates.gates.begin(), d.gates.gates.begin() + cut);
        tail.gates.assign(d.gates.gates.begin() + cut, d.gates.gates.end());
        return {std::move(head), std::move(tail)};
    }
    return split_loop(d, cfg.split_ratio);
}

size_t leading_idle_prefix(const Circuit& c, const std::vector<uint32_t>& wires) {
    std::set<uint32_t> ws(wires.begin(), wires.end());
    size_t q = 0;
    for (const Gate& g : c.gates) {
        for (uint32_t w : g.wires) {
            if (ws.count(w)) return q;
        }
        ++q;
    }
    return q;
}

void validate_impl(const QuantumImplementation& impl) {
    if (impl.prep.n_wires != impl.main.n_wires) {
        throw std::invalid_argument("prep and main act on different registers");
    }
    std::set<uint32_t> data(impl.data_wires.begin(), impl.data_wires.end());
    for (uint32_t w : impl.flag_wires) {
        if (data.count(w)) {
            throw std::invalid_argument("data and flag wires must be disjoint");
        }
    }
    for (uint32_t w : impl.data_wires) {
        if (w >= impl.main.n_wires) throw std::invalid_argument("data wire out of range");
    }
    for (uint32_t w : impl.flag_wires) {
        if (w >= impl.main.n_wires) throw std::invalid_argument("flag wire out of range");
    }
}

}  // namespace

ObfuscationOutcome obfuscate_with_manifest(const QuantumImplementation& impl,
                                           const ObfuscationConfig& cfg) {
    validate_impl(impl);
    if (cfg.split_ratio < 0.0 || cfg.split_ratio > 1.0) {
        throw std::invalid_argument("split ratio must lie in [0, 1]");
    }

    ObfuscationOutcome out;
    uint32_t n0 = impl.main.n_wires;
    out.impl.prep = tensor_extend(impl.prep, cfg.lambda);
    out.impl.main = tensor_extend(impl.main, cfg.lambda);
    out.impl.data_wires = impl.data_wires;
    out.impl.flag_wires = impl.flag_wires;
    for (uint32_t i = 0; i < cfg.lambda; ++i) out.impl.flag_wires.push_back(n0 + i);

    for (uint32_t iter = 0; iter < cfg.ell; ++iter) {
        uint64_t lseed = Rng::derive(cfg.seed, iter);
        ObfuscationStrategy strat = cfg.strategy;
        if (strat == ObfuscationStrategy::Mixed) {
            strat = Rng(Rng::derive(lseed, 0xA11)).coin()
                        ? ObfuscationStrategy::StateCircuitSplit
                        : ObfuscationStrategy::InCircuitLoop;
        }

        LoopRecord rec;
        rec.iter = iter;
        rec.placement = strat;

        if (strat == ObfuscationStrategy::StateCircuitSplit) {
            Rng rng(Rng::derive(lseed, 0x5C5));
            // Loop wires come from the flags; with probability 1/2 the whole
            // register is allowed, which forces the tail to main's front so it
            // still commutes past nothing.
            bool wide = out.impl.flag_wires.empty() || rng.coin();
            std::vector<uint32_t> pool;
            if (!wide) pool = out.impl.flag_wires;
            SubpathDelta d =
                sample_loop(cfg, out.impl.main, Rng::derive(lseed, 0x100), pool);
            auto [head, tail] = split_for(cfg, d);
            size_t p = 0;
            if (!wide) {
                size_t q = leading_idle_prefix(out.impl.main, d.wires);
                p = rng.below(q + 1);
            }
            rec.family = d.family;
            rec.wires = d.wires;
            rec.split_index = head.gates.size();
            rec.prep_pos = out.impl.prep.gates.size();
            rec.main_pos = p;
            out.impl.prep.gates.insert(out.impl.prep.gates.end(), head.gates.begin(),
                                       head.gates.end());
            out.impl.main.gates.insert(out.impl.main.gates.begin() + p,
                                       tail.gates.begin(), tail.gates.end());
        } else {
            Rng rng(Rng::derive(lseed, 0x1C1));
            bool placed = false;
            for (uint32_t attempt = 0; attempt <= cfg.retry_limit && !placed; ++attempt) {
                // Late retries shrink to the flag wires, which the original
                // main never touches.
                bool shrink = attempt * 2 > cfg.retry_limit && !out.impl.flag_wires.empty();
                std::vector<uint32_t> pool;
                if (shrink) pool = out.impl.flag_wires;
                SubpathDelta d = sample_loop(cfg, out.impl.main,
                                             Rng::derive(lseed, 0x200 + attempt), pool);
                auto intervals = idle_intervals(out.impl.main, d.wires);
                if (intervals.empty()) continue;
                auto [a, b] = intervals[rng.below(intervals.size())];
                auto [head, tail] = split_for(cfg, d);
                size_t p = a + rng.below(b - a);                    // head in [a, b-1]
                size_t q = p + 1 + rng.below(b - p);                // tail slot in [p+1, b]
                rec.family = d.family;
                rec.wires = d.wires;
                rec.split_index = head.gates.size();
                rec.main_pos = p;
                rec.main_pos2 = q + head.gates.size();
                out.impl.main.gates.insert(out.impl.main.gates.begin() + p,
                                           head.gates.begin(), head.gates.end());
                out.impl.main.gates.insert(
                    out.impl.main.gates.begin() + (q + head.gates.size()),
                    tail.gates.begin(), tail.gates.end());
                placed = true;
            }
            if (!placed) {
                throw std::runtime_error(
                    "no idle interval admits an in-circuit loop; raise the retry "
                    "limit or add flag wires");
            }
        }
        out.loops.push_back(std::move(rec));
    }
    return out;
}

QuantumImplementation obfuscate(const QuantumImplementation& impl,
                                const ObfuscationConfig& cfg) {
    return obfuscate_with_manifest(impl, cfg).impl;
}

std::string to_string(ObfuscationStrategy s) {
    switch (s) {
        case ObfuscationStrategy::StateCircuitSplit: return "state-circuit-split";
        case ObfuscationStrategy::InCircuitLoop: return "in-circuit-loop";
        case ObfuscationStrategy::Mixed: return "mixed";
    }
    return "?";
}

std::string to_string(LoopFamily f) {
    switch (f) {
        case LoopFamily::WordInverse: return "word-inverse";
        case LoopFamily::PhaseCycle: return "phase-cycle";
        case LoopFamily::InvolutionPair: return "involution-pair";
    }
    return "?";
}

std::optional<ObfuscationStrategy> strategy_from_string(const std::string& s) {
    if (s == "state-circuit-split" || s == "scs") {
        return ObfuscationStrategy::StateCircuitSplit;
    }
    if (s == "in-circuit-loop" || s == "icl") return ObfuscationStrategy::InCircuitLoop;
    if (s == "mixed") return ObfuscationStrategy::Mixed;
    return std::nullopt;
}

}  // namespace qceqio
