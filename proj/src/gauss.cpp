#include "ffhyp/gauss.hpp"

#include "ffhyp/errors.hpp"

namespace ffh {

GaussTable::GaussTable(const FieldCtx& F, long shift_dlog) : F_(&F) {
    const long m = F.q() - 1;
    const unsigned n = F.conductor();
    const FqElem c = F.gen_pow(shift_dlog);

    // g(chi_j) = sum over a of zeta^{j a (n/m)} theta(c g^a); computed for all
    // j in one pass over the group.
    std::vector<CycNum> theta(m, CycNum::zero(n));
    for (long a = 0; a < m; ++a) theta[a] = additive_eval(F, F.gen_pow(a), c);

    g_.reserve(m);
    const long unit = n / m;
    for (long j = 0; j < m; ++j) {
        CycNum acc = CycNum::zero(n);
        for (long a = 0; a < m; ++a)
            acc += theta[a].mul_zeta_pow(j * a % m * unit);
        g_.push_back(std::move(acc));
    }

    ginv_.reserve(m);
    const mpq_class inv_q(1, F.q());
    for (long j = 0; j < m; ++j) {
        if (j == 0) {
            ginv_.push_back(CycNum::from_int(n, -1));
        } else {
            MultChar chi(F, j);
            ginv_.push_back((chi.at_minus_one() * g_[(m - j) % m]).scaled(inv_q));
        }
    }

    jacobi_.assign(static_cast<size_t>(m) * m, std::nullopt);
}

const CycNum& GaussTable::g(long index) const {
    long m = F_->q() - 1;
    long j = index % m;
    if (j < 0) j += m;
    return g_[j];
}

const CycNum& GaussTable::jacobi(const MultChar& chi, const MultChar& psi) const {
    const long m = F_->q() - 1;
    size_t key = static_cast<size_t>(chi.index()) * m + psi.index();
    if (!jacobi_[key]) {
        CycNum acc = CycNum::zero(F_->conductor());
        for (long code = 0; code < F_->q(); ++code) {
            FqElem t = F_->decode(code);
            acc += chi.eval(t) * psi.eval(F_->sub(F_->one(), t));
        }
        jacobi_[key] = std::move(acc);
    }
    return *jacobi_[key];
}

CycNum hp_lhs(const GaussTable& t, const MultChar& A, const MultChar& B,
              const MultChar& C, const MultChar& D) {
    const FieldCtx& F = t.field();
    const long m = F.q() - 1;
    CycNum acc = CycNum::zero(F.conductor());
    for (long j = 0; j < m; ++j) {
        acc += t.g(A.index() + j) * t.g(B.index() + j) * t.g(C.index() - j) *
               t.g(D.index() - j);
    }
    return acc.scaled(mpq_class(1, m));
}

CycNum hp_rhs(const GaussTable& t, const MultChar& A, const MultChar& B,
              const MultChar& C, const MultChar& D) {
    const FieldCtx& F = t.field();
    MultChar abcd = A * B * C * D;
    CycNum r = t.g(A * C) * t.g(A * D) * t.g(B * C) * t.g(B * D) * t.ginv(abcd);
    if (abcd.is_trivial()) {
        mpz_class s = F.q() * (F.q() - 1);
        r += (A * B).at_minus_one().scaled(mpq_class(s));
    }
    return r;
}

}  // namespace ffh
