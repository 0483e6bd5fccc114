#include "ffhyp/hypergeometric.hpp"

#include "ffhyp/errors.hpp"

namespace ffh {

bool well_poised(const FieldCtx& F, const HypSpec& spec) {
    if (spec.variant == Variant::Katz) return false;
    if (spec.top.size() != spec.bottom.size() + 1) return false;
    if (!(spec.arg == F.one() || spec.arg == F.from_int(-1))) return false;
    for (size_t j = 0; j < spec.bottom.size(); ++j)
        if (spec.bottom[j] != spec.top[0] * spec.top[j + 1].bar()) return false;
    return true;
}

CycNum f_star(const GaussTable& t, const std::vector<MultChar>& top,
              const std::vector<MultChar>& bottom, const FqElem& x) {
    const FieldCtx& F = t.field();
    const long m = F.q() - 1;
    const unsigned n = F.conductor();
    if (x.is_zero()) return CycNum::zero(n);

    const long unit = n / m;
    const long dlog_m1 = F.dlog(F.from_int(-1));
    const long dlog_x = F.dlog(x);
    // chi(-1)^{n+1} chi(x) as one zeta exponent per chi
    const long sign_exp = (static_cast<long>(top.size()) % m) * dlog_m1 + dlog_x;

    CycNum acc = CycNum::zero(n);
    for (long c = 0; c < m; ++c) {
        CycNum term = t.g(-c);
        for (const auto& A : top) term *= t.g(A.index() + c);
        for (const auto& B : bottom) term *= t.g(-(B.index() + c));
        acc += term.mul_zeta_pow(c % m * (sign_exp % m) % m * unit);
    }
    CycNum pre = CycNum::from_rational(n, mpq_class(1, m));
    for (const auto& A : top) pre *= t.ginv(A);
    for (const auto& B : bottom) pre *= t.ginv(B.bar());
    return pre * acc;
}

CycNum greene_binom(const GaussTable& t, const MultChar& A, const MultChar& B) {
    return (B.at_minus_one() * t.jacobi(A, B.bar())).scaled(mpq_class(1, t.field().q()));
}

CycNum f_greene(const GaussTable& t, const std::vector<MultChar>& top,
                const std::vector<MultChar>& bottom, const FqElem& x) {
    const FieldCtx& F = t.field();
    const long m = F.q() - 1;
    const unsigned n = F.conductor();
    if (x.is_zero()) return CycNum::zero(n);
    const long unit = n / m;
    const long dlog_x = F.dlog(x);

    CycNum acc = CycNum::zero(n);
    for (long c = 0; c < m; ++c) {
        MultChar chi(F, c);
        CycNum term = greene_binom(t, top[0] * chi, chi);
        for (size_t i = 1; i < top.size(); ++i)
            term *= greene_binom(t, top[i] * chi, bottom[i - 1] * chi);
        acc += term.mul_zeta_pow(c * (dlog_x % m) % m * unit);
    }
    return acc.scaled(mpq_class(F.q(), m));
}

CycNum f_katz(const GaussTable& t, const std::vector<MultChar>& top,
              const std::vector<MultChar>& bottom, const FqElem& arg) {
    const FieldCtx& F = t.field();
    if (arg.is_zero()) throw ZeroArgument();
    const long m = F.q() - 1;
    const unsigned n = F.conductor();
    const long unit = n / m;
    const long dlog_m1 = F.dlog(F.from_int(-1));
    const long dlog_t = F.dlog(arg);

    CycNum acc = CycNum::zero(n);
    for (long c = 0; c < m; ++c) {
        CycNum term = CycNum::one(n);
        long exp = -c * dlog_t;  // bar chi(t)
        for (const auto& A : top) term *= t.g(A.index() + c);
        for (const auto& B : bottom) {
            term *= t.g(-(B.index() + c));
            exp += (B.index() + c) * dlog_m1;  // (B_j chi)(-1)
        }
        long e = exp % m;
        if (e < 0) e += m;
        acc += term.mul_zeta_pow(e * unit);
    }
    return acc.scaled(mpq_class(1, m));
}

CycNum katz_vsum(const GaussTable& t, const std::vector<MultChar>& top,
                 const std::vector<MultChar>& bottom, const FqElem& arg) {
    const FieldCtx& F = t.field();
    if (arg.is_zero()) throw ZeroArgument();
    const size_t nn = top.size(), mm = bottom.size();
    const long m = F.q() - 1;
    CycNum acc = CycNum::zero(F.conductor());

    // free variables: x_1..x_n and y_1..y_{m-1}; the last y is forced by
    // x_1...x_n = t y_1...y_m.  With m = 0 the constraint itself selects
    // the admissible x tuples.
    const size_t free_count = nn + (mm > 0 ? mm - 1 : 0);
    std::vector<long> idx(free_count, 0);
    const long t_dlog = F.dlog(arg);

    while (true) {
        // x_i = g^{idx_i}, y_j = g^{idx_{n+j}}
        long xsum_dlog = 0;
        FqElem additive = F.zero();
        CycNum term = CycNum::one(F.conductor());
        bool skip = false;
        for (size_t i = 0; i < nn; ++i) {
            const FqElem& xi = F.gen_pow(idx[i]);
            additive = F.add(additive, xi);
            term *= top[i].eval(xi);
            xsum_dlog += idx[i];
        }
        long ylead_dlog = 0;
        for (size_t j = 0; mm > 0 && j + 1 < mm; ++j) {
            const FqElem& yj = F.gen_pow(idx[nn + j]);
            additive = F.sub(additive, yj);
            term *= bottom[j].bar().eval(yj);
            ylead_dlog += idx[nn + j];
        }
        if (mm > 0) {
            long ym_dlog = ((xsum_dlog - t_dlog - ylead_dlog) % m + m) % m;
            const FqElem& ym = F.gen_pow(ym_dlog);
            additive = F.sub(additive, ym);
            term *= bottom[mm - 1].bar().eval(ym);
        } else if ((xsum_dlog - t_dlog) % m != 0) {
            skip = true;
        }
        if (!skip) acc += term * additive_eval(F, additive);

        size_t pos = 0;
        while (pos < free_count && ++idx[pos] == m) idx[pos++] = 0;
        if (pos == free_count) break;
        if (free_count == 0) break;
    }
    return acc;
}

CycNum eval_spec(const GaussTable& t, const HypSpec& spec) {
    switch (spec.variant) {
        case Variant::Star: return f_star(t, spec.top, spec.bottom, spec.arg);
        case Variant::Greene: return f_greene(t, spec.top, spec.bottom, spec.arg);
        case Variant::Katz: return f_katz(t, spec.top, spec.bottom, spec.arg);
    }
    throw Error("bad variant");
}

StarGreeneReport relate_star_greene(const GaussTable& t,
                                    const std::vector<MultChar>& top,
                                    const std::vector<MultChar>& bottom,
                                    const FqElem& x) {
    const FieldCtx& F = t.field();
    const size_t n = bottom.size();
    CycNum lhs = f_star(t, top, bottom, x);

    bool a0_ok = !top[0].is_trivial();
    bool generic = a0_ok;
    for (size_t i = 0; i < n; ++i)
        if (top[i + 1] == bottom[i]) generic = false;

    bool exceptional = a0_ok && n >= 1 && top[n] == bottom[n - 1] &&
                       !top[n].is_trivial();
    for (size_t i = 0; i + 1 < n; ++i)
        if (top[i + 1] == bottom[i]) exceptional = false;

    if (!generic && !exceptional)
        return {StarGreeneReport::Status::Uncovered, lhs, lhs};

    CycNum binom_prod_inv = CycNum::one(F.conductor());
    for (size_t i = 0; i < n; ++i)
        binom_prod_inv *= greene_binom(t, top[i + 1], bottom[i]).inverse();
    CycNum rhs = binom_prod_inv * f_greene(t, top, bottom, x);

    if (exceptional) {
        const MultChar& An = top[n];
        CycNum extra = greene_binom(t, top[0] * An.bar(), An.bar());
        for (size_t i = 0; i + 1 < n; ++i) {
            extra *= greene_binom(t, top[i + 1] * An.bar(), bottom[i] * An.bar());
            extra *= greene_binom(t, top[i + 1], bottom[i]).inverse();
        }
        extra *= An.bar().eval(x);
        rhs += extra.scaled(mpq_class(F.q() - 1));
    }

    auto status = (lhs == rhs) ? StarGreeneReport::Status::Match
                               : StarGreeneReport::Status::Mismatch;
    return {status, lhs, rhs};
}

}  // namespace ffh
