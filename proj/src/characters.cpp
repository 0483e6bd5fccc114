#include "ffhyp/characters.hpp"

#include <numeric>

#include "ffhyp/errors.hpp"

namespace ffh {

MultChar::MultChar(const FieldCtx& F, long index) : F_(&F) {
    long m = F.q() - 1;
    j_ = index % m;
    if (j_ < 0) j_ += m;
    unit_exp_ = j_ % m * (F.conductor() / m) % F.conductor();
}

CycNum MultChar::eval(const FqElem& x) const {
    if (x.is_zero()) return CycNum::zero(F_->conductor());
    return CycNum::zeta_pow(F_->conductor(), F_->dlog(x) * unit_exp_);
}

CycNum MultChar::at_minus_one() const {
    return eval(F_->from_int(-1));
}

MultChar MultChar::operator*(const MultChar& o) const {
    return MultChar(*F_, j_ + o.j_);
}

MultChar MultChar::bar() const { return MultChar(*F_, -j_); }

MultChar MultChar::pow(long e) const { return MultChar(*F_, j_ * e); }

bool MultChar::is_square() const {
    long m = F_->q() - 1;
    return j_ % std::gcd(2L, m) == 0;
}

std::vector<MultChar> MultChar::square_roots() const {
    long m = F_->q() - 1;
    std::vector<MultChar> roots;
    if (m % 2 == 1) {
        // squaring is a bijection on an odd-order group
        long half_inv = (m + 1) / 2;  // inverse of 2 mod m
        roots.emplace_back(*F_, j_ * half_inv % m);
        return roots;
    }
    if (j_ % 2 != 0) return roots;
    roots.emplace_back(*F_, j_ / 2);
    roots.emplace_back(*F_, j_ / 2 + m / 2);
    return roots;
}

bool MultChar::operator==(const MultChar& o) const {
    return F_->q() == o.F_->q() && j_ == o.j_;
}

MultChar MultChar::phi(const FieldCtx& F) {
    if (F.q() % 2 == 0) throw EvenCharacteristic(F.q());
    return MultChar(F, (F.q() - 1) / 2);
}

CycNum additive_eval(const FieldCtx& F, const FqElem& x, const FqElem& c) {
    int t = F.trace(F.mul(c, x));
    return CycNum::zeta_pow(F.conductor(),
                            static_cast<long>(t) * (F.conductor() / F.p()));
}

CycNum additive_eval(const FieldCtx& F, const FqElem& x) {
    int t = F.trace(x);
    return CycNum::zeta_pow(F.conductor(),
                            static_cast<long>(t) * (F.conductor() / F.p()));
}

}  // namespace ffh
