#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ffh {

// Coefficients of the n-th cyclotomic polynomial, constant term first, monic.
// Computed by exact division of x^n - 1 by the Phi_d of proper divisors d | n.
const std::vector<mpz_class>& cyclotomic_poly(unsigned n);

// Exact element of Q(zeta_n): integer coefficient vector against the power
// basis 1, z, ..., z^{phi(n)-1} (z = zeta_n, reduced mod Phi_n) over a
// positive denominator.  Always kept in canonical form: gcd(coeffs, den) = 1,
// den >= 1, so equality is componentwise.
class CycNum {
public:
    CycNum() : n_(1), num_(1, 0), den_(1) {}

    static CycNum zero(unsigned n);
    static CycNum one(unsigned n);
    static CycNum from_int(unsigned n, const mpz_class& v);
    static CycNum from_rational(unsigned n, const mpq_class& v);
    // zeta_n^e, e arbitrary (reduced mod n)
    static CycNum zeta_pow(unsigned n, long e);

    unsigned conductor() const { return n_; }
    const std::vector<mpz_class>& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_zero() const;

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator-() const;
    CycNum operator*(const CycNum& o) const;
    CycNum& operator+=(const CycNum& o) { *this = *this + o; return *this; }
    CycNum& operator-=(const CycNum& o) { *this = *this - o; return *this; }
    CycNum& operator*=(const CycNum& o) { *this = *this * o; return *this; }

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    // Multiplicative inverse via extended polynomial gcd with Phi_n.
    CycNum inverse() const;
    CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }

    // Multiply by zeta_n^e (cached reduced monomials; cheaper than a general
    // multiply when this is itself short).
    CycNum mul_zeta_pow(long e) const;

    // Scale by an exact rational.
    CycNum scaled(const mpq_class& r) const;

    // Value-preserving embedding Q(zeta_m) -> Q(zeta_n) for m | n.
    CycNum embed(unsigned n) const;

    // Exact rational value if all non-constant coefficients vanish.
    std::optional<mpq_class> to_rational() const;

    std::string to_string() const;

private:
    CycNum(unsigned n, std::vector<mpz_class> num, mpz_class den);

    void canonicalize();

    unsigned n_;
    std::vector<mpz_class> num_;  // length phi(n)
    mpz_class den_;
};

}  // namespace ffh
