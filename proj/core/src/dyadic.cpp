#include "qceqio/dyadic.hpp"

#include <cmath>

namespace qceqio {

void DyadicPhase::normalize() {
    if (k_ > 0) {
        // reduce mod 2^k into [0, 2^k)
        BigInt mod = BigInt(1) << k_;
        num_ %= mod;
        if (num_ < 0) num_ += mod;
    } else {
        num_ = 0;
    }
    if (num_ == 0) {
        k_ = 0;
        return;
    }
    uint32_t twos = static_cast<uint32_t>(boost::multiprecision::lsb(num_));
    if (twos > 0) {
        uint32_t shift = twos < k_ ? twos : k_;
        num_ >>= shift;
        k_ -= shift;
    }
    if (k_ == 0) num_ = 0;  // integer value: 0 mod 1
}

DyadicPhase DyadicPhase::operator+(const DyadicPhase& o) const {
    uint32_t k = k_ > o.k_ ? k_ : o.k_;
    BigInt num = (num_ << (k - k_)) + (o.num_ << (k - o.k_));
    return DyadicPhase(std::move(num), k);
}

DyadicPhase DyadicPhase::operator-() const {
    if (is_zero()) return {};
    return DyadicPhase((BigInt(1) << k_) - num_, k_);
}

DyadicPhase DyadicPhase::times(const BigInt& factor) const {
    return DyadicPhase(num_ * factor, k_);
}

double DyadicPhase::to_double() const {
    if (is_zero()) return 0.0;
    return std::ldexp(num_.convert_to<double>(), -static_cast<int>(k_));
}

std::string DyadicPhase::to_string() const {
    if (is_zero()) return "0";
    BigInt denom = BigInt(1) << k_;
    return num_.str() + "/" + denom.str();
}

}  // namespace qceqio
