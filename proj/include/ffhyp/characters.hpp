#pragma once

#include <vector>

#include "ffhyp/cyclotomic.hpp"
#include "ffhyp/finite_field.hpp"

namespace ffh {

// Multiplicative character of F_q*, encoded by its index j against the
// field's fixed generator: chi_j(g^a) = zeta_{q-1}^{ja}, chi(0) = 0.
// Values are produced directly at the field's fixed conductor.
class MultChar {
public:
    MultChar(const FieldCtx& F, long index);

    const FieldCtx& field() const { return *F_; }
    long index() const { return j_; }

    bool is_trivial() const { return j_ == 0; }
    int delta() const { return j_ == 0 ? 1 : 0; }

    CycNum eval(const FqElem& x) const;
    // chi(-1) as a cheap exponent; always a root of unity.
    CycNum at_minus_one() const;
    // dlog-style exponent: chi(g^a) = zeta_n^{a * val_exp()} at conductor n.
    long unit_exp() const { return unit_exp_; }

    MultChar operator*(const MultChar& o) const;
    MultChar bar() const;  // inverse character
    MultChar pow(long e) const;

    // true iff some R satisfies R^2 = *this
    bool is_square() const;
    std::vector<MultChar> square_roots() const;

    bool operator==(const MultChar& o) const;
    bool operator!=(const MultChar& o) const { return !(*this == o); }

    static MultChar epsilon(const FieldCtx& F) { return MultChar(F, 0); }
    // The order-2 character (odd q only; throws EvenCharacteristic).
    static MultChar phi(const FieldCtx& F);

private:
    const FieldCtx* F_;
    long j_;         // in [0, q-2]
    long unit_exp_;  // j * (n / (q-1)) mod n
};

// theta_c(x) = zeta_p^{Tr(c x)} at the field's conductor; c = 1 is the fixed
// additive character, other c are used for the independence check.
CycNum additive_eval(const FieldCtx& F, const FqElem& x, const FqElem& c);
CycNum additive_eval(const FieldCtx& F, const FqElem& x);

}  // namespace ffh
