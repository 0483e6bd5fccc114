#include "ffhyp/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "ffhyp/errors.hpp"

namespace ffh {

namespace {

constexpr unsigned kMaxConductor = 10000;

using Poly = std::vector<mpz_class>;

// Exact division of integer polynomials, quotient must be exact.
Poly poly_divide_exact(const Poly& a, const Poly& b) {
    Poly rem = a;
    const size_t db = b.size() - 1;
    Poly quot(a.size() - db, 0);
    for (size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        mpz_class c = rem[i] / b[db];  // b monic in our usage
        quot[i - db] = c;
        for (size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
    }
    return quot;
}

struct CondData {
    unsigned n;
    size_t deg;
    Poly phi;
    std::vector<Poly> xpow;  // x^e mod Phi_n for e in [0, n); filled lazily
    size_t xpow_filled = 0;

    const Poly& monomial(unsigned e) {
        while (xpow_filled <= e) {
            if (xpow_filled < deg) {
                Poly m(deg, 0);
                m[xpow_filled] = 1;
                xpow.push_back(std::move(m));
            } else {
                // x * previous, reduced by the monic Phi_n
                const Poly& prev = xpow[xpow_filled - 1];
                Poly m(deg, 0);
                for (size_t i = 0; i + 1 < deg; ++i) m[i + 1] = prev[i];
                const mpz_class& top = prev[deg - 1];
                if (top != 0)
                    for (size_t i = 0; i < deg; ++i) m[i] -= top * phi[i];
                xpow.push_back(std::move(m));
            }
            ++xpow_filled;
        }
        return xpow[e];
    }
};

std::map<unsigned, Poly>& phi_cache() {
    static std::map<unsigned, Poly> c;
    return c;
}

std::map<unsigned, CondData>& cond_cache() {
    static std::map<unsigned, CondData> c;
    return c;
}

CondData& cond_data(unsigned n) {
    auto it = cond_cache().find(n);
    if (it != cond_cache().end()) return it->second;
    CondData d;
    d.n = n;
    d.phi = cyclotomic_poly(n);
    d.deg = d.phi.size() - 1;
    return cond_cache().emplace(n, std::move(d)).first->second;
}

// Reduce a coefficient vector of arbitrary length mod the monic Phi_n,
// in place; result occupies the first deg entries.
void reduce_mod_phi(Poly& v, const Poly& phi) {
    const size_t deg = phi.size() - 1;
    for (size_t i = v.size(); i-- > deg;) {
        if (v[i] == 0) continue;
        mpz_class c;
        mpz_swap(c.get_mpz_t(), v[i].get_mpz_t());
        for (size_t j = 0; j < deg; ++j) v[i - deg + j] -= c * phi[j];
    }
    v.resize(deg);
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_poly(unsigned n) {
    if (n == 0 || n > kMaxConductor)
        throw BoundExceeded("cyclotomic conductor " + std::to_string(n));
    auto it = phi_cache().find(n);
    if (it != phi_cache().end()) return it->second;

    Poly xn_minus_1(n + 1, 0);
    xn_minus_1[0] = -1;
    xn_minus_1[n] = 1;
    Poly result = xn_minus_1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) result = poly_divide_exact(result, cyclotomic_poly(d));
    return phi_cache().emplace(n, std::move(result)).first->second;
}

CycNum::CycNum(unsigned n, std::vector<mpz_class> num, mpz_class den)
    : n_(n), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void CycNum::canonicalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    if (den_ == 0) throw DivisionByZero();
    bool all_zero = true;
    for (const auto& c : num_)
        if (c != 0) { all_zero = false; break; }
    if (all_zero) {
        den_ = 1;
        return;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    den_ /= g;
    for (auto& c : num_) c /= g;
}

CycNum CycNum::zero(unsigned n) {
    CondData& d = cond_data(n);
    return CycNum(n, Poly(d.deg, 0), 1);
}

CycNum CycNum::one(unsigned n) { return from_int(n, 1); }

CycNum CycNum::from_int(unsigned n, const mpz_class& v) {
    CondData& d = cond_data(n);
    Poly num(d.deg, 0);
    num[0] = v;
    return CycNum(n, std::move(num), 1);
}

CycNum CycNum::from_rational(unsigned n, const mpq_class& v) {
    CondData& d = cond_data(n);
    Poly num(d.deg, 0);
    num[0] = v.get_num();
    return CycNum(n, std::move(num), v.get_den());
}

CycNum CycNum::zeta_pow(unsigned n, long e) {
    CondData& d = cond_data(n);
    long r = e % static_cast<long>(n);
    if (r < 0) r += n;
    return CycNum(n, d.monomial(static_cast<unsigned>(r)), 1);
}

bool CycNum::is_zero() const {
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

CycNum CycNum::operator+(const CycNum& o) const {
    if (n_ != o.n_) throw ConductorMismatch(n_, o.n_);
    Poly num(num_.size());
    for (size_t i = 0; i < num.size(); ++i)
        num[i] = num_[i] * o.den_ + o.num_[i] * den_;
    return CycNum(n_, std::move(num), den_ * o.den_);
}

CycNum CycNum::operator-(const CycNum& o) const {
    if (n_ != o.n_) throw ConductorMismatch(n_, o.n_);
    Poly num(num_.size());
    for (size_t i = 0; i < num.size(); ++i)
        num[i] = num_[i] * o.den_ - o.num_[i] * den_;
    return CycNum(n_, std::move(num), den_ * o.den_);
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
    if (n_ != o.n_) throw ConductorMismatch(n_, o.n_);
    CondData& d = cond_data(n_);
    Poly conv(2 * d.deg, 0);
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        for (size_t j = 0; j < o.num_.size(); ++j)
            conv[i + j] += num_[i] * o.num_[j];
    }
    reduce_mod_phi(conv, d.phi);
    return CycNum(n_, std::move(conv), den_ * o.den_);
}

bool CycNum::operator==(const CycNum& o) const {
    if (n_ != o.n_) throw ConductorMismatch(n_, o.n_);
    return den_ == o.den_ && num_ == o.num_;
}

CycNum CycNum::mul_zeta_pow(long e) const {
    CondData& d = cond_data(n_);
    long r = e % static_cast<long>(n_);
    if (r < 0) r += n_;
    if (r == 0) return *this;
    const Poly& m = d.monomial(static_cast<unsigned>(r));
    Poly conv(2 * d.deg, 0);
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        for (size_t j = 0; j < m.size(); ++j)
            if (m[j] != 0) conv[i + j] += num_[i] * m[j];
    }
    reduce_mod_phi(conv, d.phi);
    return CycNum(n_, std::move(conv), den_);
}

CycNum CycNum::scaled(const mpq_class& r) const {
    Poly num(num_.size());
    for (size_t i = 0; i < num.size(); ++i) num[i] = num_[i] * r.get_num();
    return CycNum(n_, std::move(num), den_ * r.get_den());
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero();
    CondData& d = cond_data(n_);
    if (d.deg == 1) {
        // Q(zeta_1) or Q(zeta_2): plain rationals
        Poly num(1, den_ * ((num_[0] < 0) ? -1 : 1));
        return CycNum(n_, std::move(num), abs(num_[0]));
    }
    // Extended Euclid over Q for a(x) and Phi_n; Phi_n is irreducible so the
    // gcd is a nonzero constant c with t(x) * a(x) = c mod Phi_n.
    using QPoly = std::vector<mpq_class>;
    auto degree = [](const QPoly& p) -> long {
        for (size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1;
    };
    QPoly r0(d.phi.begin(), d.phi.end());
    QPoly r1(num_.begin(), num_.end());
    QPoly t0(1, 0), t1(1, 1);
    while (true) {
        long d1 = degree(r1);
        if (d1 <= 0) break;
        long d0 = degree(r0);
        // one division step: r0 -= (lead(r0)/lead(r1)) x^{d0-d1} r1
        while (d0 >= d1) {
            mpq_class c = r0[d0] / r1[d1];
            for (long j = 0; j <= d1; ++j) r0[d0 - d1 + j] -= c * r1[j];
            r0[d0] = 0;
            if (t0.size() < static_cast<size_t>(d0 - d1) + t1.size())
                t0.resize(d0 - d1 + t1.size(), 0);
            for (size_t j = 0; j < t1.size(); ++j) t0[d0 - d1 + j] -= c * t1[j];
            d0 = degree(r0);
        }
        std::swap(r0, r1);
        std::swap(t0, t1);
    }
    long dr = degree(r1);
    if (dr != 0) throw DivisionByZero();  // cannot happen: Phi_n irreducible
    mpq_class c = r1[0];
    // inverse of (num/den) is den * t / c
    QPoly inv(d.deg, 0);
    for (size_t i = 0; i < t1.size() && i < d.deg; ++i)
        inv[i] = t1[i] * den_ / c;
    mpz_class l = 1;
    for (const auto& q : inv)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    Poly num(d.deg);
    for (size_t i = 0; i < d.deg; ++i) {
        mpq_class scaled_q = inv[i] * l;
        num[i] = scaled_q.get_num();
    }
    return CycNum(n_, std::move(num), l);
}

CycNum CycNum::embed(unsigned n) const {
    if (n == n_) return *this;
    if (n % n_ != 0) throw NotDivisible(n_, n);
    const unsigned step = n / n_;
    CondData& d = cond_data(n);
    Poly acc(d.deg, 0);
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        const Poly& m = d.monomial(static_cast<unsigned>(i) * step % n);
        for (size_t j = 0; j < m.size(); ++j)
            if (m[j] != 0) acc[j] += num_[i] * m[j];
    }
    return CycNum(n, std::move(acc), den_);
}

std::optional<mpq_class> CycNum::to_rational() const {
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return std::nullopt;
    mpq_class r(num_[0], den_);
    r.canonicalize();
    return r;
}

std::string CycNum::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        mpz_class c = num_[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        mpz_class a = abs(c);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    std::string s = os.str();
    if (den_ != 1) s = "(" + s + ")/" + den_.get_str();
    return s;
}

}  // namespace ffh
