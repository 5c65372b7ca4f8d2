#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace qceqio {

using BigInt = boost::multiprecision::cpp_int;

// Dyadic rational modulo 1 in normal form: num / 2^k with 0 <= num < 2^k and
// num odd, or num == 0 and k == 0. Phases are stored in units of 2*pi.
class DyadicPhase {
public:
    DyadicPhase() = default;
    DyadicPhase(BigInt numerator, uint32_t denom_exp)
        : num_(std::move(numerator)), k_(denom_exp) {
        normalize();
    }

    static DyadicPhase zero() { return {}; }
    static DyadicPhase one_over_pow2(uint32_t k) { return {BigInt(1), k}; }

    const BigInt& numerator() const { return num_; }
    uint32_t denom_exp() const { return k_; }
    bool is_zero() const { return num_ == 0; }

    DyadicPhase operator+(const DyadicPhase& o) const;
    DyadicPhase operator-() const;
    DyadicPhase operator-(const DyadicPhase& o) const { return *this + (-o); }
    DyadicPhase times(const BigInt& factor) const;

    bool operator==(const DyadicPhase&) const = default;

    double to_double() const;       // value in [0, 1)
    std::string to_string() const;  // "num/denom" with decimal denominator, "0" for zero

private:
    void normalize();

    BigInt num_ = 0;
    uint32_t k_ = 0;
};

}  // namespace qceqio
