#include "qceqio/pit.hpp"

#include <set>
#include <stdexcept>
#include <vector>

#include "qceqio/rng.hpp"

namespace qceqio {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) + b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

constexpr uint64_t kMillerRabinBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

BigInt pow10_big(long p) {
    BigInt r = 1;
    for (long i = 0; i < p; ++i) r *= 10;
    return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : kMillerRabinBases) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int r = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++r;
    }
    // This base set decides primality for every 64-bit integer.
    for (uint64_t a : kMillerRabinBases) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Rational failure_bound(uint64_t ell, uint64_t degree, const Rational& r_size) {
    if (r_size <= 0) throw std::invalid_argument("sample range must be positive");
    Rational b = Rational(ell) * Rational(ell) * Rational(degree) / r_size;
    return b > 1 ? Rational(1) : b;
}

PitReport pit_phase_equal(const PhasePoly& a, const PhasePoly& b, const PitConfig& cfg) {
    if (!is_prime_u64(cfg.modulus)) {
        throw std::invalid_argument("pit modulus must be prime");
    }
    if (cfg.trials == 0) throw std::invalid_argument("pit needs at least one trial");
    if (cfg.r_size < 2) throw std::invalid_argument("pit sample range needs two points");
    if (cfg.r_size > cfg.modulus) {
        throw std::invalid_argument("pit sample range cannot exceed the field");
    }

    PitReport rep;
    rep.ell = 1;
    rep.degree = std::max(a.degree(), b.degree());
    rep.per_trial_bound = Rational(rep.degree) / Rational(cfg.r_size);
    rep.union_bound = failure_bound(rep.ell, rep.degree, Rational(cfg.r_size));
    rep.overall_bound = 1;
    for (uint32_t t = 0; t < cfg.trials; ++t) rep.overall_bound *= rep.union_bound;

    // Clear denominators by the common power of two and reduce the resulting
    // integer coefficients into the field.
    PhasePoly diff = a + b.negated();
    uint32_t kmax = diff.max_denom_exp();
    uint64_t p = cfg.modulus;
    std::vector<std::pair<std::vector<uint32_t>, uint64_t>> terms;
    for (const auto& [mono, coeff] : diff.terms) {
        BigInt scaled = coeff.numerator() << (kmax - coeff.denom_exp());
        uint64_t cm = BigInt(scaled % p).convert_to<uint64_t>();
        if (cm != 0) terms.emplace_back(mono.vars, cm);
    }

    rep.trials = cfg.trials;
    if (terms.empty()) {
        rep.verdict = PitVerdict::Accept;
        return rep;
    }

    std::set<uint32_t> vars = diff.variables();
    Rng rng(cfg.seed);
    for (uint32_t t = 0; t < cfg.trials; ++t) {
        std::map<uint32_t, uint64_t> assign;
        for (uint32_t v : vars) assign[v] = rng.below(cfg.r_size);
        uint64_t acc = 0;
        for (const auto& [mvars, cm] : terms) {
            uint64_t prod = cm;
            for (uint32_t v : mvars) prod = mulmod(prod, assign[v], p);
            acc = addmod(acc, prod, p);
        }
        if (acc != 0) {
            rep.verdict = PitVerdict::Reject;
            rep.trials = t + 1;
            rep.witness = std::move(assign);
            return rep;
        }
    }
    rep.verdict = PitVerdict::Accept;
    return rep;
}

std::string format_scientific(const Rational& q, int significant_digits) {
    if (significant_digits < 1) significant_digits = 1;
    if (q == 0) return "0";
    bool neg = q < 0;
    Rational a = neg ? Rational(-q) : q;
    BigInt num = boost::multiprecision::numerator(a);
    BigInt den = boost::multiprecision::denominator(a);

    // a <=> 10^p as a three-way comparison, exact at any sign of p.
    auto cmp_pow10 = [&](long p) {
        BigInt lhs = num, rhs = den;
        if (p >= 0) {
            rhs *= pow10_big(p);
        } else {
            lhs *= pow10_big(-p);
        }
        return lhs.compare(rhs);
    };

    // Decimal exponent e with 10^e <= a < 10^{e+1}.
    long e = static_cast<long>(num.str().size()) - static_cast<long>(den.str().size());
    while (cmp_pow10(e + 1) >= 0) ++e;
    while (cmp_pow10(e) < 0) --e;

    long shift = significant_digits - 1 - e;
    BigInt sn = num, sd = den;
    if (shift >= 0) {
        sn *= pow10_big(shift);
    } else {
        sd *= pow10_big(-shift);
    }
    BigInt mant = (2 * sn + sd) / (2 * sd);  // round half up
    if (mant >= pow10_big(significant_digits)) {
        mant /= 10;
        ++e;
    }

    std::string digits = mant.str();
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out = neg ? "-" : "";
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e);
    return out;
}

}  // namespace qceqio
