#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ffh {

// Element of F_q = F_p[x]/(modulus), coordinates in the power basis,
// constant term first, entries in [0, p).  Prime fields use k = 1.
struct FqElem {
    std::vector<int32_t> c;

    bool is_zero() const {
        for (int32_t v : c)
            if (v != 0) return false;
        return true;
    }
    bool operator==(const FqElem& o) const { return c == o.c; }
};

// Split q into (p, k) with q = p^k, p prime; throws NotPrime otherwise.
std::pair<long, int> factor_prime_power(long q);

// A constructed finite field F_q, q = p^k, with a deterministic irreducible
// modulus, a deterministic multiplicative generator, the full discrete-log
// table and the fixed cyclotomic conductor n = lcm(p, q-1).  Immutable after
// construction.
class FieldCtx {
public:
    static constexpr long kDefaultMaxQ = 1L << 20;

    FieldCtx(long p, int k, long max_q = kDefaultMaxQ);

    long p() const { return p_; }
    int k() const { return k_; }
    long q() const { return q_; }
    unsigned conductor() const { return conductor_; }
    const std::vector<int32_t>& modulus() const { return modulus_; }
    const FqElem& generator() const { return generator_; }

    FqElem zero() const { return FqElem{std::vector<int32_t>(k_, 0)}; }
    FqElem one() const;
    // The image of the integer v under Z -> F_p -> F_q.
    FqElem from_int(long v) const;

    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem sub(const FqElem& a, const FqElem& b) const;
    FqElem neg(const FqElem& a) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    FqElem inv(const FqElem& a) const;  // throws DivisionByZero
    FqElem pow(const FqElem& a, long e) const;

    // Tr_{F_q/F_p}(x) = sum of x^{p^i}, an element of F_p in [0, p).
    int trace(const FqElem& x) const;

    // Exponent a in [0, q-2] with generator^a = x; throws LogOfZero.
    long dlog(const FqElem& x) const;

    // generator^a for any integer a (reduced mod q-1).
    const FqElem& gen_pow(long a) const;

    // Dense element encoding in [0, q): sum c_i p^i.
    long encode(const FqElem& x) const;
    FqElem decode(long code) const;

    std::string to_string(const FqElem& x) const;

private:
    long p_;
    int k_;
    long q_;
    unsigned conductor_;
    std::vector<int32_t> modulus_;  // length k+1, monic (empty convention for k=1: x - 0? stored anyway)
    FqElem generator_;
    std::vector<long> dlog_;             // code -> exponent, -1 for zero
    std::vector<FqElem> gen_pow_table_;  // exponent -> element
    std::vector<int> trace_table_;       // code -> trace
};

}  // namespace ffh
