#pragma once

#include <optional>
#include <vector>

#include "ffhyp/characters.hpp"

namespace ffh {

// Per-field cache of Gauss sums g(chi_j) and their inverses; the main
// performance lever: every downstream identity evaluation touches only
// cached values.  The additive character can be shifted (theta_c) for the
// independence check; shift = 1 is the standard table.
class GaussTable {
public:
    // shift_dlog s builds the table against theta_c with c = g^s.
    explicit GaussTable(const FieldCtx& F, long shift_dlog = 0);

    const FieldCtx& field() const { return *F_; }

    const CycNum& g(const MultChar& chi) const { return g_[chi.index()]; }
    const CycNum& g(long index) const;
    // 1/g(chi): chi(-1) g(bar chi)/q for chi != epsilon, -1 for epsilon.
    const CycNum& ginv(const MultChar& chi) const { return ginv_[chi.index()]; }

    // J(chi, psi) by direct summation over t, memoized.
    const CycNum& jacobi(const MultChar& chi, const MultChar& psi) const;

    MultChar chr(long index) const { return MultChar(*F_, index); }
    MultChar eps() const { return MultChar(*F_, 0); }

private:
    const FieldCtx* F_;
    std::vector<CycNum> g_;
    std::vector<CycNum> ginv_;
    mutable std::vector<std::optional<CycNum>> jacobi_;
};

// Helversen-Pasotto four-Gauss-sum identity: the two sides, computed
// independently.
CycNum hp_lhs(const GaussTable& t, const MultChar& A, const MultChar& B,
              const MultChar& C, const MultChar& D);
CycNum hp_rhs(const GaussTable& t, const MultChar& A, const MultChar& B,
              const MultChar& C, const MultChar& D);

}  // namespace ffh
