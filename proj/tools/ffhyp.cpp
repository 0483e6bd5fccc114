#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ffhyp/errors.hpp"
#include "ffhyp/modular.hpp"
#include "ffhyp/theorems.hpp"

namespace {

using namespace ffh;

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stol(item));
    }
    return out;
}

// field element given as 0, 1, -1, or g^A (generator-power form; unambiguous
// for extension fields)
FqElem parse_elem(const FieldCtx& F, const std::string& s) {
    if (s == "0") return F.zero();
    if (s == "1") return F.one();
    if (s == "-1") return F.from_int(-1);
    if (s.rfind("g^", 0) == 0) return F.gen_pow(std::stol(s.substr(2)));
    throw Error("bad field element (want 0, 1, -1 or g^A): " + s);
}

int cmd_eval(long q, long max_q, const std::string& variant_s,
             const std::string& top_s, const std::string& bottom_s,
             const std::string& x_s, const std::string& format) {
    auto [p, k] = factor_prime_power(q);
    FieldCtx F(p, k, max_q);
    GaussTable t(F);

    Variant variant;
    if (variant_s == "star") variant = Variant::Star;
    else if (variant_s == "greene") variant = Variant::Greene;
    else if (variant_s == "katz") variant = Variant::Katz;
    else throw Error("bad variant: " + variant_s);

    HypSpec spec{variant, {}, {}, parse_elem(F, x_s)};
    for (long j : parse_list(top_s)) spec.top.emplace_back(F, j);
    for (long j : parse_list(bottom_s)) spec.bottom.emplace_back(F, j);
    if (spec.top.empty()) throw Error("--top must be nonempty");
    if (variant != Variant::Katz &&
        spec.top.size() != spec.bottom.size() + 1)
        throw Error("star/greene need |top| = |bottom| + 1");

    CycNum v = eval_spec(t, spec);
    auto rat = v.to_rational();

    if (format == "json") {
        nlohmann::json j;
        j["q"] = q;
        j["generator"] = F.to_string(F.generator());
        j["conductor"] = F.conductor();
        j["variant"] = variant_s;
        j["value"] = v.to_string();
        std::vector<std::string> coeffs;
        for (const auto& c : v.num()) coeffs.push_back(c.get_str());
        j["coeffs"] = coeffs;
        j["den"] = v.den().get_str();
        if (rat) j["rational"] = rat->get_str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "q = " << q << ", generator g = "
                  << F.to_string(F.generator()) << ", conductor n = "
                  << F.conductor() << "\n";
        std::cout << "value (z = zeta_n): " << v.to_string() << "\n";
        std::cout << "coeffs = [";
        for (size_t i = 0; i < v.num().size(); ++i)
            std::cout << (i ? "," : "") << v.num()[i].get_str();
        std::cout << "] / " << v.den().get_str() << "\n";
        if (rat) std::cout << "rational: " << rat->get_str() << "\n";
    }
    return 0;
}

int emit_reports(const std::vector<TheoremReport>& reports,
                 const std::string& format) {
    bool all_ok = true;
    for (const auto& r : reports)
        if (!r.skipped && !r.ok()) all_ok = false;
    if (format == "json") {
        std::cout << suite_to_json(reports) << "\n";
    } else {
        for (const auto& r : reports) std::cout << r.to_text() << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_verify(const std::string& theorem, const std::string& q_s, long max_q,
               const std::string& plan_s, const std::string& format) {
    Verifier v = find_verifier(theorem);  // throws UnknownTheorem
    SweepPlan plan = SweepPlan::parse(plan_s);
    std::vector<TheoremReport> reports;
    for (long q : parse_list(q_s)) {
        auto [p, k] = factor_prime_power(q);
        FieldCtx F(p, k, max_q);
        GaussTable t(F);
        reports.push_back(v(t, plan));
        if (reports.back().skipped)
            std::cerr << "warning: " << theorem << " skipped for q=" << q
                      << " (" << reports.back().skip_reason << ")\n";
    }
    return emit_reports(reports, format);
}

int cmd_suite(const std::string& q_s, long max_q, const std::string& plan_s,
              const std::string& format) {
    SweepPlan plan = SweepPlan::parse(plan_s);
    auto reports = run_suite(parse_list(q_s), plan, max_q);
    return emit_reports(reports, format);
}

int cmd_modular(const std::string& primes_s, const std::string& format,
                size_t order) {
    auto primes = parse_list(primes_s);
    bool all_ok = true;
    nlohmann::json arr = nlohmann::json::array();
    for (long p : primes) {
        AoResult res = verify_ao(p, order);
        all_ok = all_ok && res.match;
        if (format == "json") {
            nlohmann::json j;
            j["p"] = res.p;
            j["value"] = res.value;
            j["rational"] = res.rational;
            j["gamma_p"] = res.gamma_p.get_str();
            j["gamma_p_plus_p"] = res.expected.get_str();
            j["match"] = res.match;
            arr.push_back(j);
        } else {
            std::cout << "p=" << res.p << " 4F3=" << res.value
                      << " gamma(p)=" << res.gamma_p.get_str()
                      << " gamma(p)+p=" << res.expected.get_str()
                      << (res.match ? " MATCH" : " MISMATCH") << "\n";
        }
    }
    if (format == "json") std::cout << arr.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of finite-field hypergeometric identities"};
    app.require_subcommand(1);

    long max_q = ffh::FieldCtx::kDefaultMaxQ;
    app.add_option("--max-q", max_q, "override the field size bound");

    std::string variant = "star", top, bottom, x = "1", format = "text";
    long q = 0;
    auto* eval = app.add_subcommand("eval", "evaluate one hypergeometric value");
    eval->add_option("--q", q, "prime power field size")->required();
    eval->add_option("--variant", variant, "star | greene | katz");
    eval->add_option("--top", top, "comma-separated character indices")->required();
    eval->add_option("--bottom", bottom, "comma-separated character indices");
    eval->add_option("--x", x, "argument: 0, 1, -1 or g^A");
    eval->add_option("--format", format, "text | json");

    std::string theorem, q_list, plan = "sample:500:42";
    auto* verify = app.add_subcommand("verify", "verify one identity over a q list");
    verify->add_option("--theorem", theorem, "theorem id")->required();
    verify->add_option("--q", q_list, "comma-separated q list")->required();
    verify->add_option("--plan", plan, "exhaustive | sample:COUNT:SEED");
    verify->add_option("--format", format, "text | json");

    auto* suite = app.add_subcommand("suite", "run every verifier over a q list");
    suite->add_option("--q", q_list, "comma-separated q list")->required();
    suite->add_option("--plan", plan, "exhaustive | sample:COUNT:SEED");
    suite->add_option("--format", format, "text | json");

    std::string primes;
    size_t order = 64;
    auto* modular = app.add_subcommand("modular", "eta-product modular identity");
    modular->add_option("--primes", primes, "comma-separated odd primes")->required();
    modular->add_option("--order", order, "eta series truncation order");
    modular->add_option("--format", format, "text | json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(eval))
            return cmd_eval(q, max_q, variant, top, bottom, x, format);
        if (app.got_subcommand(verify))
            return cmd_verify(theorem, q_list, max_q, plan, format);
        if (app.got_subcommand(suite))
            return cmd_suite(q_list, max_q, plan, format);
        if (app.got_subcommand(modular))
            return cmd_modular(primes, format, order);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
