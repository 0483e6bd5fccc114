#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ffh {

// Fourier coefficients gamma(1..N) of the weight-4 level-8 newform
// eta^4(2z) eta^4(4z) = q prod (1-q^{2n})^4 (1-q^{4n})^4.  The leading
// exponent is (2*4 + 4*4)/24 = 1, so gamma(1) = 1.
struct EtaSeries {
    size_t order;                    // truncation N
    std::vector<mpz_class> gamma;    // gamma[i] = gamma(i), index 0 unused

    const mpz_class& at(size_t i) const { return gamma.at(i); }
};

EtaSeries eta_product_coeffs(size_t N);

// One prime's worth of the modular identity: the well-poised 4F3 with all
// tops phi and all bottoms eps at 1 over F_p, compared with gamma(p) + p.
struct AoResult {
    long p;
    bool rational;        // the 4F3 value reduced to a rational
    std::string value;    // exact value rendering
    mpz_class gamma_p;
    mpz_class expected;   // gamma(p) + p
    bool match;
};

AoResult verify_ao(long p, size_t series_order = 64);

}  // namespace ffh
