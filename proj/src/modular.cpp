#include "ffhyp/modular.hpp"

#include "ffhyp/errors.hpp"
#include "ffhyp/hypergeometric.hpp"

namespace ffh {

namespace {

// multiply the truncated series a (index = exponent) by (1 - q^e)^4
void mul_one_minus_pow4(std::vector<mpz_class>& a, size_t e) {
    const size_t N = a.size();
    // (1 - x)^4 = 1 - 4x + 6x^2 - 4x^3 + x^4 applied at step e
    static const long binom[5] = {1, -4, 6, -4, 1};
    for (size_t i = N; i-- > 0;) {
        mpz_class acc = 0;
        for (int j = 0; j <= 4; ++j) {
            size_t off = static_cast<size_t>(j) * e;
            if (off > i) break;
            acc += binom[j] * a[i - off];
        }
        a[i] = acc;
    }
}

}  // namespace

EtaSeries eta_product_coeffs(size_t N) {
    if (N < 1) throw Error("series order must be >= 1");
    // work on the product without the leading q, truncated at exponent N-1
    std::vector<mpz_class> prod(N, 0);
    prod[0] = 1;
    for (size_t n = 1; 2 * n < N; ++n) mul_one_minus_pow4(prod, 2 * n);
    for (size_t n = 1; 4 * n < N; ++n) mul_one_minus_pow4(prod, 4 * n);

    EtaSeries s;
    s.order = N;
    s.gamma.assign(N + 1, 0);
    for (size_t i = 1; i <= N; ++i) s.gamma[i] = prod[i - 1];
    return s;
}

AoResult verify_ao(long p, size_t series_order) {
    if (p < 3 || p % 2 == 0) throw NotOddPrime(p);
    FieldCtx F(p, 1);  // throws NotPrime for composite p
    if (static_cast<size_t>(p) > series_order)
        throw BoundExceeded("series order " + std::to_string(series_order) +
                            " below p = " + std::to_string(p));
    GaussTable t(F);
    MultChar phi = MultChar::phi(F);
    MultChar eps = MultChar::epsilon(F);
    CycNum v = f_star(t, {phi, phi, phi, phi}, {eps, eps, eps}, F.one());

    AoResult res;
    res.p = p;
    res.value = v.to_string();
    EtaSeries s = eta_product_coeffs(series_order);
    res.gamma_p = s.at(p);
    res.expected = res.gamma_p + p;
    auto rat = v.to_rational();
    res.rational = rat.has_value() && rat->get_den() == 1;
    res.match = res.rational && rat->get_num() == res.expected;
    return res;
}

}  // namespace ffh
