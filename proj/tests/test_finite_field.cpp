#include <doctest.h>

#include <random>

#include "ffhyp/errors.hpp"
#include "ffhyp/finite_field.hpp"

using namespace ffh;

TEST_CASE("prime power factorization") {
    CHECK(factor_prime_power(7) == std::pair<long, int>{7, 1});
    CHECK(factor_prime_power(9) == std::pair<long, int>{3, 2});
    CHECK(factor_prime_power(8) == std::pair<long, int>{2, 3});
    CHECK(factor_prime_power(121) == std::pair<long, int>{11, 2});
    CHECK_THROWS_AS(factor_prime_power(1), NotPrime);
    CHECK_THROWS_AS(factor_prime_power(6), NotPrime);
    CHECK_THROWS_AS(factor_prime_power(12), NotPrime);
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(FieldCtx(4, 1), NotPrime);
    CHECK_THROWS_AS(FieldCtx(1, 1), NotPrime);
    CHECK_THROWS_AS(FieldCtx(2, 25), BoundExceeded);  // 2^25 over default cap
}

TEST_CASE("prime field F_7") {
    FieldCtx F(7, 1);
    CHECK(F.q() == 7);
    CHECK(F.conductor() == 42);  // lcm(7, 6)
    CHECK(F.inv(F.from_int(3)) == F.from_int(5));
    CHECK(F.mul(F.from_int(4), F.from_int(5)) == F.from_int(6));
    CHECK(F.from_int(-1) == F.from_int(6));
    // generator of F_7* is 3 (smallest)
    CHECK(F.generator() == F.from_int(3));
    CHECK(F.dlog(F.from_int(1)) == 0);
    CHECK_THROWS_AS(F.dlog(F.zero()), LogOfZero);
}

TEST_CASE("F_5 discrete logs against g = 2") {
    FieldCtx F(5, 1);
    CHECK(F.generator() == F.from_int(2));
    CHECK(F.dlog(F.from_int(2)) == 1);
    CHECK(F.dlog(F.from_int(4)) == 2);
    CHECK(F.dlog(F.from_int(3)) == 3);
    CHECK(F.gen_pow(3) == F.from_int(3));
    CHECK(F.gen_pow(-1) == F.from_int(3));  // reduced mod q-1
}

TEST_CASE("extension field F_9") {
    FieldCtx F(3, 2);
    CHECK(F.q() == 9);
    CHECK(F.conductor() == 24);  // lcm(3, 8)
    CHECK(F.trace(F.one()) == 2);
    CHECK(F.trace(F.zero()) == 0);
    // trace is F_3-linear and lands in F_3
    for (long a = 0; a < 9; ++a)
        for (long b = 0; b < 9; ++b) {
            FqElem x = F.decode(a), y = F.decode(b);
            CHECK(F.trace(F.add(x, y)) == (F.trace(x) + F.trace(y)) % 3);
        }
    // generator really has order 8
    FqElem g = F.generator();
    CHECK_FALSE(F.pow(g, 4) == F.one());
    CHECK(F.pow(g, 8) == F.one());
}

TEST_CASE("field axioms on sampled elements") {
    std::mt19937_64 rng(2);
    for (long q : {8L, 9L, 11L, 25L, 27L}) {
        auto [p, k] = factor_prime_power(q);
        FieldCtx F(p, k);
        for (int i = 0; i < 40; ++i) {
            FqElem a = F.decode(static_cast<long>(rng() % q));
            FqElem b = F.decode(static_cast<long>(rng() % q));
            FqElem c = F.decode(static_cast<long>(rng() % q));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.add(a, F.neg(a)) == F.zero());
            if (!a.is_zero()) {
                CHECK(F.mul(a, F.inv(a)) == F.one());
                CHECK(F.gen_pow(F.dlog(a)) == a);
            }
        }
        CHECK(F.pow(F.generator(), q - 1) == F.one());
    }
}

TEST_CASE("encode and decode invert each other") {
    FieldCtx F(2, 4);
    for (long c = 0; c < 16; ++c) CHECK(F.encode(F.decode(c)) == c);
}

TEST_CASE("product of all units is -1") {
    for (long q : {5L, 7L, 9L, 13L}) {
        auto [p, k] = factor_prime_power(q);
        FieldCtx F(p, k);
        FqElem prod = F.one();
        for (long c = 1; c < q; ++c) prod = F.mul(prod, F.decode(c));
        CHECK(prod == F.from_int(-1));
    }
}
