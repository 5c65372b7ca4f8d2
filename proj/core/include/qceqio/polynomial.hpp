#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qceqio/dyadic.hpp"

namespace qceqio {

// Variable identifiers. Inputs x1..xn and path variables y1..ym live in one
// uint32 space, both 1-based; path variables carry the top bit so every x
// sorts before every y.
namespace var {
inline constexpr uint32_t kPathFlag = 0x8000'0000u;
inline uint32_t input(uint32_t i) { return i; }
inline uint32_t path(uint32_t j) { return kPathFlag | j; }
inline bool is_path(uint32_t v) { return (v & kPathFlag) != 0; }
inline uint32_t index(uint32_t v) { return v & ~kPathFlag; }
std::string name(uint32_t v);  // "x3" / "y1"
}  // namespace var

// Product of distinct variables, kept strictly sorted; empty = constant 1.
struct Monomial {
    std::vector<uint32_t> vars;

    static Monomial one() { return {}; }
    static Monomial of(uint32_t v) { return Monomial{{v}}; }

    size_t degree() const { return vars.size(); }
    bool is_one() const { return vars.empty(); }
    bool contains(uint32_t v) const;
    Monomial times(const Monomial& o) const;  // union of the variable sets
    Monomial without(uint32_t v) const;

    auto operator<=>(const Monomial&) const = default;
};

// GF(2) multilinear polynomial in algebraic normal form: a set of monomials.
struct BoolPoly {
    std::set<Monomial> terms;

    static BoolPoly zero() { return {}; }
    static BoolPoly one() { return BoolPoly{{Monomial::one()}}; }
    static BoolPoly of_var(uint32_t v) { return BoolPoly{{Monomial::of(v)}}; }

    bool is_zero() const { return terms.empty(); }
    bool is_var(uint32_t v) const {
        return terms.size() == 1 && *terms.begin() == Monomial::of(v);
    }
    bool contains_var(uint32_t v) const;

    void toggle(const Monomial& m);  // xor in a single monomial
    BoolPoly operator^(const BoolPoly& o) const;
    BoolPoly operator*(const BoolPoly& o) const;  // AND; multilinear (v^2 = v)

    // Simultaneous substitution; variables absent from `env` stay themselves.
    BoolPoly substitute(const std::map<uint32_t, BoolPoly>& env) const;

    std::set<uint32_t> variables() const;
    std::string to_string() const;  // "x1 ^ x2*x3 ^ 1", "0" when empty

    bool operator==(const BoolPoly&) const = default;
};

// Multilinear polynomial with exact integer coefficients (lift target).
struct IntPoly {
    std::map<Monomial, BigInt> terms;  // zero coefficients never stored

    void add(const Monomial& m, const BigInt& c);
    bool operator==(const IntPoly&) const = default;
    std::string to_string() const;
};

// Arithmetization of XOR over the integers: L(a xor b) = La + Lb - 2*La*Lb,
// folded left to right over the canonical term order, products reduced
// multilinearly. Evaluates identically to f on all 0/1 assignments.
IntPoly lift_bool(const BoolPoly& f);

// Multilinear phase polynomial with dyadic coefficients modulo 1.
struct PhasePoly {
    std::map<Monomial, DyadicPhase> terms;  // zero coefficients never stored

    static PhasePoly zero() { return {}; }

    bool is_zero() const { return terms.empty(); }
    void add_term(const Monomial& m, const DyadicPhase& c);
    PhasePoly operator+(const PhasePoly& o) const;
    PhasePoly negated() const;

    DyadicPhase constant_term() const;
    PhasePoly without_constant() const;
    size_t degree() const;           // max monomial degree
    uint32_t max_denom_exp() const;  // K such that 2^K clears all denominators
    bool contains_var(uint32_t v) const;
    std::set<uint32_t> variables() const;

    // c * L(g) reduced mod 1. Coefficients of the lift are only needed modulo
    // the denominator of c, which keeps the fold from blowing up.
    static PhasePoly scaled_lift(const DyadicPhase& c, const BoolPoly& g);

    // Simultaneous lifted substitution of Boolean functions for variables.
    PhasePoly substitute(const std::map<uint32_t, BoolPoly>& env) const;

    std::string to_string() const;  // "1/2*x1*y1 + 7/8*y2", "0" when empty

    bool operator==(const PhasePoly&) const = default;
};

}  // namespace qceqio
