#include <doctest.h>

#include "ffhyp/errors.hpp"
#include "ffhyp/modular.hpp"

using namespace ffh;

namespace {

// Re-derives the q-expansion by repeated single-factor (1 - x^e)
// multiplication, a different route than the library's quartic-binomial
// expansion.
std::vector<mpz_class> series_oracle(size_t N) {
    std::vector<mpz_class> c(N, 0);
    c[0] = 1;
    auto mul_factor = [&](size_t e) {
        for (size_t i = N; i-- > e;) c[i] -= c[i - e];
    };
    for (size_t n = 1; n < N; ++n)
        for (int r = 0; r < 4; ++r) {
            if (2 * n < N) mul_factor(2 * n);
            if (4 * n < N) mul_factor(4 * n);
        }
    std::vector<mpz_class> g(N + 1, 0);  // shift by the leading exponent
    for (size_t i = 0; i + 1 <= N; ++i) g[i + 1] = c[i];
    return g;
}

}  // namespace

TEST_CASE("eta product expansion") {
    EtaSeries s = eta_product_coeffs(40);
    auto oracle = series_oracle(40);
    for (size_t i = 1; i <= 40; ++i) CHECK(s.at(i) == oracle[i]);
    CHECK(s.at(1) == 1);
    CHECK(s.at(3) == -4);
    CHECK(s.at(5) == -2);
    CHECK(s.at(7) == 24);
    CHECK(s.at(11) == -44);
    CHECK(s.at(13) == 22);
    // even-index coefficients vanish: only odd powers appear
    for (size_t i = 2; i <= 40; i += 2) CHECK(s.at(i) == 0);
    // multiplicative at coprime indices
    CHECK(s.at(15) == s.at(3) * s.at(5));
    CHECK(s.at(9) == s.at(3) * s.at(3) - 27);  // Hecke relation at p = 3
}

TEST_CASE("hypergeometric value matches the Fourier coefficient") {
    for (long p : {3L, 5L}) {
        AoResult res = verify_ao(p);
        CHECK(res.rational);
        CHECK(res.match);
        CHECK(res.expected == res.gamma_p + p);
    }
    AoResult r3 = verify_ao(3);
    CHECK(r3.gamma_p == -4);
    CHECK(r3.expected == -1);
}

TEST_CASE("input guards") {
    CHECK_THROWS_AS(verify_ao(2), NotOddPrime);
    CHECK_THROWS_AS(verify_ao(9), NotPrime);
    CHECK_THROWS_AS(verify_ao(15), NotPrime);
}
