#include "qceqio/polynomial.hpp"

#include <algorithm>

namespace qceqio {

namespace var {
std::string name(uint32_t v) {
    return (is_path(v) ? "y" : "x") + std::to_string(index(v));
}
}  // namespace var

bool Monomial::contains(uint32_t v) const {
    return std::binary_search(vars.begin(), vars.end(), v);
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial out;
    out.vars.reserve(vars.size() + o.vars.size());
    std::set_union(vars.begin(), vars.end(), o.vars.begin(), o.vars.end(),
                   std::back_inserter(out.vars));
    return out;
}

Monomial Monomial::without(uint32_t v) const {
    Monomial out;
    out.vars.reserve(vars.size());
    for (uint32_t w : vars) {
        if (w != v) out.vars.push_back(w);
    }
    return out;
}

std::string monomial_to_string(const Monomial& m, const char* sep) {
    if (m.is_one()) return "1";
    std::string out;
    for (size_t i = 0; i < m.vars.size(); ++i) {
        if (i) out += sep;
        out += var::name(m.vars[i]);
    }
    return out;
}

// ---------------------------------------------------------------- BoolPoly

bool BoolPoly::contains_var(uint32_t v) const {
    for (const Monomial& m : terms) {
        if (m.contains(v)) return true;
    }
    return false;
}

void BoolPoly::toggle(const Monomial& m) {
    auto [it, inserted] = terms.insert(m);
    if (!inserted) terms.erase(it);
}

BoolPoly BoolPoly::operator^(const BoolPoly& o) const {
    BoolPoly out = *this;
    for (const Monomial& m : o.terms) out.toggle(m);
    return out;
}

BoolPoly BoolPoly::operator*(const BoolPoly& o) const {
    BoolPoly out;
    for (const Monomial& a : terms) {
        for (const Monomial& b : o.terms) out.toggle(a.times(b));
    }
    return out;
}

BoolPoly BoolPoly::substitute(const std::map<uint32_t, BoolPoly>& env) const {
    BoolPoly out;
    for (const Monomial& m : terms) {
        Monomial kept;
        BoolPoly replaced = BoolPoly::one();
        bool any = false;
        for (uint32_t v : m.vars) {
            auto it = env.find(v);
            if (it == env.end()) {
                kept.vars.push_back(v);  // stays sorted: visiting in order
            } else {
                replaced = replaced * it->second;
                any = true;
            }
        }
        if (!any) {
            out.toggle(m);
            continue;
        }
        for (const Monomial& r : replaced.terms) out.toggle(r.times(kept));
    }
    return out;
}

std::set<uint32_t> BoolPoly::variables() const {
    std::set<uint32_t> out;
    for (const Monomial& m : terms) out.insert(m.vars.begin(), m.vars.end());
    return out;
}

std::string BoolPoly::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        if (it != terms.begin()) out += " ^ ";
        out += monomial_to_string(*it, "*");
    }
    return out;
}

// ----------------------------------------------------------------- IntPoly

void IntPoly::add(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::string IntPoly::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        const BigInt& c = it->second;
        bool negative = c < 0;
        BigInt mag = negative ? BigInt(-c) : c;
        if (it == terms.begin()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1 || it->first.is_one()) {
            out += mag.str();
            if (!it->first.is_one()) out += "*";
        }
        if (!it->first.is_one()) out += monomial_to_string(it->first, "*");
    }
    return out;
}

IntPoly lift_bool(const BoolPoly& f) {
    // L(acc xor t) = L(acc) + t - 2 * L(acc) * t, folded in canonical order.
    IntPoly acc;
    for (const Monomial& t : f.terms) {
        IntPoly next = acc;
        next.add(t, 1);
        for (const auto& [m, c] : acc.terms) next.add(m.times(t), -2 * c);
        acc = std::move(next);
    }
    return acc;
}

// --------------------------------------------------------------- PhasePoly

void PhasePoly::add_term(const Monomial& m, const DyadicPhase& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
        return;
    }
    DyadicPhase sum = it->second + c;
    if (sum.is_zero()) {
        terms.erase(it);
    } else {
        it->second = sum;
    }
}

PhasePoly PhasePoly::operator+(const PhasePoly& o) const {
    PhasePoly out = *this;
    for (const auto& [m, c] : o.terms) out.add_term(m, c);
    return out;
}

PhasePoly PhasePoly::negated() const {
    PhasePoly out;
    for (const auto& [m, c] : terms) out.terms.emplace(m, -c);
    return out;
}

DyadicPhase PhasePoly::constant_term() const {
    auto it = terms.find(Monomial::one());
    return it == terms.end() ? DyadicPhase::zero() : it->second;
}

PhasePoly PhasePoly::without_constant() const {
    PhasePoly out = *this;
    out.terms.erase(Monomial::one());
    return out;
}

size_t PhasePoly::degree() const {
    size_t d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m.degree());
    return d;
}

uint32_t PhasePoly::max_denom_exp() const {
    uint32_t k = 0;
    for (const auto& [m, c] : terms) k = std::max(k, c.denom_exp());
    return k;
}

bool PhasePoly::contains_var(uint32_t v) const {
    for (const auto& [m, c] : terms) {
        if (m.contains(v)) return true;
    }
    return false;
}

std::set<uint32_t> PhasePoly::variables() const {
    std::set<uint32_t> out;
    for (const auto& [m, c] : terms) out.insert(m.vars.begin(), m.vars.end());
    return out;
}

PhasePoly PhasePoly::scaled_lift(const DyadicPhase& c, const BoolPoly& g) {
    PhasePoly out;
    if (c.is_zero() || g.is_zero()) return out;

    // Fold the lift of g keeping coefficients mod 2^k only: multiplied by
    // c = u/2^k, any coefficient divisible by 2^k contributes an integer,
    // which vanishes mod 1. This prunes the exponential tail of the lift.
    const uint32_t k = c.denom_exp();
    const BigInt mod = BigInt(1) << k;
    std::map<Monomial, BigInt> acc;
    auto add_into = [&](std::map<Monomial, BigInt>& dst, const Monomial& m, BigInt v) {
        v %= mod;
        if (v < 0) v += mod;
        if (v == 0) return;
        auto [it, inserted] = dst.try_emplace(m, v);
        if (!inserted) {
            it->second += v;
            it->second %= mod;
            if (it->second == 0) dst.erase(it);
        }
    };
    for (const Monomial& t : g.terms) {
        std::map<Monomial, BigInt> next = acc;
        add_into(next, t, 1);
        for (const auto& [m, a] : acc) add_into(next, m.times(t), -2 * a);
        acc = std::move(next);
    }
    for (const auto& [m, a] : acc) {
        out.add_term(m, DyadicPhase(c.numerator() * a, k));
    }
    return out;
}

PhasePoly PhasePoly::substitute(const std::map<uint32_t, BoolPoly>& env) const {
    PhasePoly out;
    for (const auto& [m, c] : terms) {
        Monomial kept;
        BoolPoly replaced;
        bool any = false;
        for (uint32_t v : m.vars) {
            auto it = env.find(v);
            if (it == env.end()) {
                kept.vars.push_back(v);
            } else {
                replaced = any ? replaced * it->second : it->second;
                any = true;
            }
        }
        if (!any) {
            out.add_term(m, c);
            continue;
        }
        if (!kept.is_one()) replaced = replaced * BoolPoly{{kept}};
        PhasePoly lifted = scaled_lift(c, replaced);
        for (const auto& [lm, lc] : lifted.terms) out.add_term(lm, lc);
    }
    return out;
}

std::string PhasePoly::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        if (it != terms.begin()) out += " + ";
        out += it->second.to_string();
        if (!it->first.is_one()) {
            out += "*";
            out += monomial_to_string(it->first, "*");
        }
    }
    return out;
}

}  // namespace qceqio
