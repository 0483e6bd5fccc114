#include <doctest.h>

#include <json.hpp>

#include "ffhyp/errors.hpp"
#include "ffhyp/theorems.hpp"

using namespace ffh;

TEST_CASE("sweep plan parsing") {
    SweepPlan e = SweepPlan::parse("exhaustive");
    CHECK(e.mode == SweepPlan::Mode::Exhaustive);
    SweepPlan s = SweepPlan::parse("sample:250:7");
    CHECK(s.mode == SweepPlan::Mode::Auto);
    CHECK(s.sample_count == 250);
    CHECK(s.seed == 7);
    CHECK(SweepPlan::parse(s.to_string()).sample_count == 250);
    CHECK_THROWS_AS(SweepPlan::parse("bogus"), Error);
}

TEST_CASE("verifier registry") {
    CHECK(theorem_ids().size() == 15);
    for (const auto& id : theorem_ids()) CHECK(find_verifier(id) != nullptr);
    CHECK_THROWS_AS(find_verifier("no-such-theorem"), UnknownTheorem);
}

TEST_CASE("four-sum verifier, exhaustive small field") {
    FieldCtx F(5, 1);
    GaussTable t(F);
    auto rep = verify_hp(t, SweepPlan::exhaustive());
    CHECK(rep.ok());
    CHECK(rep.q == 5);
    CHECK(rep.tuples_tested == 256);  // 4^4
    size_t branch_total = 0;
    for (const auto& [name, cnt] : rep.branches) branch_total += cnt;
    CHECK(branch_total == rep.tuples_tested);
}

TEST_CASE("verifiers pass on small fields") {
    for (long q : {5L, 9L}) {
        auto [p, k] = factor_prime_power(q);
        FieldCtx F(p, k);
        GaussTable t(F);
        SweepPlan plan = SweepPlan::sampled(40, 1);
        for (const char* id :
             {"gauss", "kummer", "dixon", "whipple4", "remark", "whipple5",
              "greene-gauss", "greene-437", "star-greene", "star-katz",
              "invariants"}) {
            auto rep = find_verifier(id)(t, plan);
            INFO(id << " q=" << q);
            CHECK(rep.ok());
            if (!rep.skipped) CHECK(rep.tuples_tested > 0);
        }
    }
}

TEST_CASE("odd-characteristic-only verifiers skip even q") {
    FieldCtx F(2, 3);
    GaussTable t(F);
    auto rep = verify_dixon(t, SweepPlan::sampled(10, 1));
    CHECK(rep.skipped);
    CHECK_FALSE(rep.skip_reason.empty());
    CHECK(verify_vanishing(t, 3, SweepPlan::sampled(10, 1)).skipped);
    CHECK(verify_kummer(t, SweepPlan::sampled(10, 1)).skipped);
    CHECK(verify_greene_437(t, SweepPlan::sampled(10, 1)).skipped);
}

TEST_CASE("recursion verifiers on a small field") {
    FieldCtx F(5, 1);
    GaussTable t(F);
    SweepPlan plan = SweepPlan::sampled(20, 3);
    CHECK(verify_recursion(t, 3, plan).ok());
    CHECK(verify_katz_recursion(t, plan).ok());
    CHECK(verify_vanishing(t, 4, plan).ok());
}

TEST_CASE("report serialization") {
    FieldCtx F(5, 1);
    GaussTable t(F);
    auto rep = verify_gauss_analogue(t, SweepPlan::exhaustive());
    auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["theorem_id"] == "gauss");
    CHECK(j["q"] == 5);
    CHECK(j["tuples_tested"] == rep.tuples_tested);
    CHECK(j["failures"].is_array());
    CHECK(j["failures"].empty());
    CHECK_FALSE(rep.to_text().empty());
}

TEST_CASE("suite is deterministic for a fixed seed") {
    SweepPlan plan = SweepPlan::sampled(30, 42);
    auto a = run_suite({3, 5}, plan);
    auto b = run_suite({3, 5}, plan);
    CHECK(suite_to_json(a) == suite_to_json(b));
    for (const auto& r : a)
        if (!r.skipped) CHECK(r.ok());
    CHECK_THROWS_AS(run_suite({6}, plan), NotPrime);
}

TEST_CASE("sampling and exhaustive sweeps agree on coverage accounting") {
    FieldCtx F(7, 1);
    GaussTable t(F);
    auto rep = verify_kummer(t, SweepPlan::sampled(25, 9));
    CHECK(rep.ok());
    size_t branch_total = 0;
    for (const auto& [name, cnt] : rep.branches) branch_total += cnt;
    CHECK(branch_total == rep.tuples_tested);
}
