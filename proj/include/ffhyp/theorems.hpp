#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ffhyp/hypergeometric.hpp"

namespace ffh {

// Sweep policy over character-parameter tuples.  Auto follows the default
// policy: exhaustive when the tuple space is small, fixed-seed sampling
// otherwise.  Exhaustive forces full enumeration regardless of size.
struct SweepPlan {
    enum class Mode { Exhaustive, Auto };
    Mode mode = Mode::Auto;
    size_t sample_count = 500;
    uint64_t seed = 42;
    size_t exhaustive_limit = 10000;

    static SweepPlan exhaustive();
    static SweepPlan sampled(size_t count, uint64_t seed);
    // "exhaustive" or "sample:COUNT:SEED"
    static SweepPlan parse(const std::string& s);
    std::string to_string() const;
};

struct Failure {
    std::vector<long> tuple;
    std::string lhs;
    std::string rhs;
};

struct TheoremReport {
    std::string theorem_id;
    long q = 0;
    std::string generator;  // rendered generator element, dlog convention
    size_t tuples_tested = 0;
    std::map<std::string, size_t> branches;
    std::vector<Failure> failures;
    bool skipped = false;
    std::string skip_reason;
    double elapsed_sec = 0;

    bool ok() const { return failures.empty(); }
    std::string to_text() const;
    std::string to_json() const;  // schema-stable, byte-deterministic
};

using Verifier = std::function<TheoremReport(const GaussTable&, const SweepPlan&)>;

TheoremReport verify_hp(const GaussTable& t, const SweepPlan& plan);
TheoremReport verify_gauss_analogue(const GaussTable& t, const SweepPlan& plan);
TheoremReport verify_kummer(const GaussTable& t, const SweepPlan& plan);
TheoremReport verify_dixon(const GaussTable& t, const SweepPlan& plan);
TheoremReport verify_whipple_4f3(const GaussTable& t, const SweepPlan& plan);
TheoremReport verify_remark_4f3(const GaussTable& t, const SweepPlan& plan);
TheoremReport verify_whipple_5f4(const GaussTable& t, const SweepPlan& plan);
TheoremReport verify_recursion(const GaussTable& t, int n_max, const SweepPlan& plan);
TheoremReport verify_vanishing(const GaussTable& t, int n_max, const SweepPlan& plan);
TheoremReport verify_greene_gauss(const GaussTable& t, const SweepPlan& plan);
TheoremReport verify_greene_437(const GaussTable& t, const SweepPlan& plan);
TheoremReport verify_star_greene(const GaussTable& t, const SweepPlan& plan);
TheoremReport verify_star_katz(const GaussTable& t, const SweepPlan& plan);
TheoremReport verify_katz_recursion(const GaussTable& t, const SweepPlan& plan);
TheoremReport verify_invariants(const GaussTable& t, const SweepPlan& plan);

// id -> verifier; ids: hp, gauss, kummer, dixon, whipple4, whipple5, remark,
// recursion, vanishing, greene-gauss, greene-437, star-greene, star-katz,
// katz-recursion, invariants.  Throws UnknownTheorem.
const std::vector<std::string>& theorem_ids();
Verifier find_verifier(const std::string& id);

// Every verifier over every q, deterministic for a fixed plan seed.
std::vector<TheoremReport> run_suite(const std::vector<long>& q_list,
                                     const SweepPlan& plan,
                                     long max_q = FieldCtx::kDefaultMaxQ);

std::string suite_to_json(const std::vector<TheoremReport>& reports);

}  // namespace ffh
