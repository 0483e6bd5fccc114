#include "ffhyp/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ffhyp/errors.hpp"

namespace ffh {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> fs;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Polynomials over F_p, constant term first, trailing zeros trimmed.
using PPoly = std::vector<int32_t>;

int pdeg(const PPoly& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

PPoly pmul(const PPoly& a, const PPoly& b, long p) {
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int32_t>((r[i + j] + static_cast<long>(a[i]) * b[j]) % p);
    return r;
}

// a mod b, b nonzero
PPoly pmod(PPoly a, const PPoly& b, long p) {
    int db = pdeg(b);
    long lead_inv = 1;
    {  // inverse of b's leading coefficient mod p
        long l = b[db], t = 1;
        for (long e = p - 2; e; e >>= 1, l = l * l % p)
            if (e & 1) t = t * l % p;
        lead_inv = t;
    }
    for (int i = pdeg(a); i >= db; i = pdeg(a)) {
        long c = static_cast<long>(a[i]) * lead_inv % p;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = static_cast<int32_t>(((a[i - db + j] - c * b[j]) % p + p) % p);
    }
    return a;
}

// Full irreducibility by trial division: a monic degree-k polynomial is
// irreducible iff no monic polynomial of degree in [1, k/2] divides it.
bool is_irreducible(const PPoly& f, long p) {
    int k = pdeg(f);
    for (int d = 1; 2 * d <= k; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            PPoly g(d + 1, 0);
            long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (pdeg(pmod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

}  // namespace

std::pair<long, int> factor_prime_power(long q) {
    if (q < 2) throw NotPrime(q);
    long p = q;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int k = 0;
    long r = q;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1) throw NotPrime(q);
    return {p, k};
}

FieldCtx::FieldCtx(long p, int k, long max_q) : p_(p), k_(k) {
    if (!is_prime(p)) throw NotPrime(p);
    if (k < 1) throw Error("k must be >= 1");
    q_ = 1;
    for (int i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ > max_q) throw BoundExceeded("q = p^k with p=" + std::to_string(p) +
                                            ", k=" + std::to_string(k));
    }
    conductor_ = static_cast<unsigned>(std::lcm(p_, q_ - 1));

    // Deterministic modulus: first monic irreducible of degree k in
    // lexicographic order of (c_0, ..., c_{k-1}).  Unused for k = 1.
    modulus_.assign(k_ + 1, 0);
    modulus_[k_] = 1;
    if (k_ > 1) {
        bool found = false;
        for (long code = 0; code < q_ && !found; ++code) {
            long c = code;
            for (int i = 0; i < k_; ++i) {
                modulus_[i] = static_cast<int32_t>(c % p_);
                c /= p_;
            }
            found = is_irreducible(modulus_, p_);
        }
    }

    // Deterministic generator: smallest element by encoded value with
    // multiplicative order exactly q - 1.
    const auto factors = prime_factors(q_ - 1);
    auto has_full_order = [&](const FqElem& x) {
        if (x.is_zero()) return false;
        for (long f : factors)
            if (pow(x, (q_ - 1) / f) == one()) return false;
        return true;
    };
    for (long code = 1; code < q_; ++code) {
        FqElem cand = decode(code);
        if (has_full_order(cand)) {
            generator_ = cand;
            break;
        }
    }

    gen_pow_table_.reserve(q_ - 1);
    dlog_.assign(q_, -1);
    FqElem cur = one();
    for (long a = 0; a < q_ - 1; ++a) {
        gen_pow_table_.push_back(cur);
        dlog_[encode(cur)] = a;
        cur = mul(cur, generator_);
    }

    trace_table_.assign(q_, 0);
    for (long code = 0; code < q_; ++code) {
        FqElem x = decode(code);
        FqElem acc = zero();
        FqElem xi = x;
        for (int i = 0; i < k_; ++i) {
            acc = add(acc, xi);
            xi = pow(xi, p_);
        }
        // trace lies in F_p
        trace_table_[code] = acc.c[0];
    }
}

FqElem FieldCtx::one() const {
    FqElem e = zero();
    e.c[0] = 1;
    return e;
}

FqElem FieldCtx::from_int(long v) const {
    FqElem e = zero();
    long r = v % p_;
    if (r < 0) r += p_;
    e.c[0] = static_cast<int32_t>(r);
    return e;
}

FqElem FieldCtx::add(const FqElem& a, const FqElem& b) const {
    FqElem r = zero();
    for (int i = 0; i < k_; ++i) r.c[i] = static_cast<int32_t>((a.c[i] + b.c[i]) % p_);
    return r;
}

FqElem FieldCtx::sub(const FqElem& a, const FqElem& b) const {
    FqElem r = zero();
    for (int i = 0; i < k_; ++i)
        r.c[i] = static_cast<int32_t>(((a.c[i] - b.c[i]) % p_ + p_) % p_);
    return r;
}

FqElem FieldCtx::neg(const FqElem& a) const { return sub(zero(), a); }

FqElem FieldCtx::mul(const FqElem& a, const FqElem& b) const {
    if (k_ == 1) {
        FqElem r = zero();
        r.c[0] = static_cast<int32_t>(static_cast<long>(a.c[0]) * b.c[0] % p_);
        return r;
    }
    std::vector<long> conv(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            conv[i + j] = (conv[i + j] + static_cast<long>(a.c[i]) * b.c[j]) % p_;
    // reduce by the monic modulus
    for (int i = 2 * k_ - 2; i >= k_; --i) {
        long c = conv[i];
        if (c == 0) continue;
        for (int j = 0; j < k_; ++j)
            conv[i - k_ + j] = ((conv[i - k_ + j] - c * modulus_[j]) % p_ + p_) % p_;
        conv[i] = 0;
    }
    FqElem r = zero();
    for (int i = 0; i < k_; ++i) r.c[i] = static_cast<int32_t>(conv[i]);
    return r;
}

FqElem FieldCtx::pow(const FqElem& a, long e) const {
    if (a.is_zero()) {
        if (e <= 0) throw DivisionByZero();
        return zero();
    }
    long r = e % (q_ - 1);
    if (r < 0) r += q_ - 1;
    FqElem acc = one();
    FqElem base = a;
    while (r) {
        if (r & 1) acc = mul(acc, base);
        base = mul(base, base);
        r >>= 1;
    }
    return acc;
}

FqElem FieldCtx::inv(const FqElem& a) const {
    if (a.is_zero()) throw DivisionByZero();
    return pow(a, q_ - 2);
}

int FieldCtx::trace(const FqElem& x) const { return trace_table_[encode(x)]; }

long FieldCtx::dlog(const FqElem& x) const {
    long d = dlog_[encode(x)];
    if (d < 0) throw LogOfZero();
    return d;
}

const FqElem& FieldCtx::gen_pow(long a) const {
    long r = a % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return gen_pow_table_[r];
}

long FieldCtx::encode(const FqElem& x) const {
    long code = 0;
    for (int i = k_ - 1; i >= 0; --i) code = code * p_ + x.c[i];
    return code;
}

FqElem FieldCtx::decode(long code) const {
    FqElem e = zero();
    for (int i = 0; i < k_; ++i) {
        e.c[i] = static_cast<int32_t>(code % p_);
        code /= p_;
    }
    return e;
}

std::string FieldCtx::to_string(const FqElem& x) const {
    if (k_ == 1) return std::to_string(x.c[0]);
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < k_; ++i) os << (i ? "," : "") << x.c[i];
    os << "]";
    return os.str();
}

}  // namespace ffh
