#include <doctest.h>

#include "ffhyp/errors.hpp"
#include "ffhyp/hypergeometric.hpp"

using namespace ffh;

namespace {

CycNum gauss_direct(const FieldCtx& F, const MultChar& chi) {
    CycNum s = CycNum::zero(F.conductor());
    for (long c = 1; c < F.q(); ++c) {
        FqElem x = F.decode(c);
        s += chi.eval(x) * additive_eval(F, x);
    }
    return s;
}

// Star sum assembled from first principles: direct Gauss sums, generic
// cyclotomic division, no table shortcuts.
CycNum star_direct(const FieldCtx& F, const std::vector<MultChar>& top,
                   const std::vector<MultChar>& bottom, const FqElem& x) {
    unsigned n = F.conductor();
    long q = F.q();
    CycNum acc = CycNum::zero(n);
    for (long j = 0; j < q - 1; ++j) {
        MultChar chi(F, j);
        CycNum term = gauss_direct(F, chi.bar());
        for (const auto& A : top)
            term *= gauss_direct(F, A * chi) / gauss_direct(F, A);
        for (const auto& B : bottom)
            term *= gauss_direct(F, (B * chi).bar()) / gauss_direct(F, B.bar());
        // chi(-1)^{n+1} with n = |bottom|
        CycNum sign = CycNum::one(n);
        for (size_t r = 0; r < bottom.size() + 1; ++r) sign *= chi.at_minus_one();
        acc += term * sign * chi.eval(x);
    }
    return acc.scaled(mpq_class(1, q - 1));
}

}  // namespace

TEST_CASE("well poised detection") {
    FieldCtx F(7, 1);
    MultChar A0(F, 2), A1(F, 5);
    std::vector<MultChar> top{A0, A1};
    std::vector<MultChar> bottom{A0 * A1.bar()};
    CHECK(well_poised(F, {Variant::Star, top, bottom, F.one()}));
    CHECK(well_poised(F, {Variant::Star, top, bottom, F.from_int(-1)}));
    CHECK_FALSE(well_poised(F, {Variant::Star, top, bottom, F.from_int(2)}));
    CHECK_FALSE(well_poised(F, {Variant::Star, top, {MultChar(F, 1)}, F.one()}));
}

TEST_CASE("star function against the direct sum") {
    for (long q : {5L, 7L}) {
        auto [p, k] = factor_prime_power(q);
        FieldCtx F(p, k);
        GaussTable t(F);
        for (long a = 0; a < q - 1; ++a) {
            std::vector<MultChar> top{MultChar(F, a)};
            for (const FqElem& x : {F.one(), F.from_int(-1), F.from_int(2)})
                CHECK(f_star(t, top, {}, x) == star_direct(F, top, {}, x));
        }
        std::vector<MultChar> top{MultChar(F, 1), MultChar(F, 2)};
        std::vector<MultChar> bottom{MultChar(F, 3)};
        for (const FqElem& x : {F.one(), F.from_int(-1)})
            CHECK(f_star(t, top, bottom, x) == star_direct(F, top, bottom, x));
    }
}

TEST_CASE("one-term star closed forms") {
    for (long q : {5L, 9L}) {
        auto [p, k] = factor_prime_power(q);
        FieldCtx F(p, k);
        GaussTable t(F);
        unsigned n = F.conductor();
        CHECK(f_star(t, {t.eps()}, {}, F.one()) ==
              CycNum::from_int(n, -(q - 1)));
        for (long a = 1; a < q - 1; ++a)
            CHECK(f_star(t, {t.chr(a)}, {}, F.one()).is_zero());
    }
}

TEST_CASE("Greene binomial") {
    for (long q : {5L, 7L}) {
        auto [p, k] = factor_prime_power(q);
        FieldCtx F(p, k);
        GaussTable t(F);
        unsigned n = F.conductor();
        CHECK(greene_binom(t, t.eps(), t.eps()) ==
              CycNum::from_rational(n, mpq_class(q - 2, q)));
        // binom(A, B) = B(-1)/q J(A, bar B) against a re-derivation
        for (long a = 0; a < q - 1; ++a)
            for (long b = 0; b < q - 1; ++b) {
                MultChar A = t.chr(a), B = t.chr(b);
                CycNum expect =
                    (B.at_minus_one() * t.jacobi(A, B.bar())).scaled(
                        mpq_class(1, q));
                CHECK(greene_binom(t, A, B) == expect);
            }
    }
}

TEST_CASE("Katz sum: Fourier form equals lattice enumeration") {
    for (long q : {3L, 5L}) {
        auto [p, k] = factor_prime_power(q);
        FieldCtx F(p, k);
        GaussTable t(F);
        for (long a = 0; a < q - 1; ++a)
            for (long b = 0; b < q - 1; ++b)
                for (long c = 1; c < q; ++c) {
                    std::vector<MultChar> top{t.chr(a), t.chr(b)};
                    std::vector<MultChar> bottom{t.chr((a + b) % (q - 1))};
                    FqElem arg = F.decode(c);
                    CHECK(f_katz(t, top, bottom, arg) ==
                          katz_vsum(t, top, bottom, arg));
                }
        // unbalanced shapes too
        std::vector<MultChar> top{t.chr(1)};
        CHECK(f_katz(t, top, {}, F.one()) == katz_vsum(t, top, {}, F.one()));
        CHECK(f_katz(t, top, {t.chr(1), t.chr(0)}, F.from_int(-1)) ==
              katz_vsum(t, top, {t.chr(1), t.chr(0)}, F.from_int(-1)));
    }
}

TEST_CASE("Katz sum rejects argument zero") {
    FieldCtx F(5, 1);
    GaussTable t(F);
    CHECK_THROWS_AS(f_katz(t, {t.chr(1)}, {}, F.zero()), ZeroArgument);
    CHECK_THROWS_AS(katz_vsum(t, {t.chr(1)}, {}, F.zero()), ZeroArgument);
}

TEST_CASE("eval_spec dispatch") {
    FieldCtx F(5, 1);
    GaussTable t(F);
    std::vector<MultChar> top{t.chr(1), t.chr(2)};
    std::vector<MultChar> bottom{t.chr(3)};
    FqElem x = F.from_int(2);
    CHECK(eval_spec(t, {Variant::Star, top, bottom, x}) ==
          f_star(t, top, bottom, x));
    CHECK(eval_spec(t, {Variant::Greene, top, bottom, x}) ==
          f_greene(t, top, bottom, x));
    CHECK(eval_spec(t, {Variant::Katz, top, bottom, x}) ==
          f_katz(t, top, bottom, x));
}

TEST_CASE("star to Greene translation statuses") {
    FieldCtx F(7, 1);
    GaussTable t(F);
    size_t generic = 0, exceptional = 0, uncovered = 0;
    for (long a0 = 0; a0 < 6; ++a0)
        for (long a1 = 0; a1 < 6; ++a1)
            for (long b1 = 0; b1 < 6; ++b1)
                for (long xc = 1; xc < 7; ++xc) {
                    std::vector<MultChar> top{t.chr(a0), t.chr(a1)};
                    std::vector<MultChar> bottom{t.chr(b1)};
                    auto rep = relate_star_greene(t, top, bottom,
                                                  F.decode(xc));
                    CHECK(rep.status != StarGreeneReport::Status::Mismatch);
                    if (rep.status == StarGreeneReport::Status::Uncovered)
                        ++uncovered;
                    else if (a1 == b1)
                        ++exceptional;
                    else
                        ++generic;
                }
    CHECK(generic > 0);
    CHECK(exceptional > 0);
    CHECK(uncovered > 0);
}
