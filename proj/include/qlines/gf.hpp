// Exact arithmetic over Q, F_p and F_{p^k}.
//
// Finite field elements are coefficient vectors over F_p with respect to a
// monic irreducible modulus chosen deterministically (lexicographically
// smallest), so that independent runs agree on every derived value.

#ifndef QLINES_GF_HPP
#define QLINES_GF_HPP

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlines {

struct field_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// F_p helpers (p < 2^31, so products fit in uint64_t)
// ---------------------------------------------------------------------------

inline uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p) { uint64_t s = a + b; return s >= p ? s - p : s; }
inline uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
inline uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }

inline uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint64_t fp_inv(uint64_t a, uint64_t p) {
    if (a == 0) throw field_error("division by zero in F_p");
    // extended Euclid on (a, p)
    int64_t t = 0, nt = 1;
    int64_t r = (int64_t)p, nr = (int64_t)(a % p);
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw field_error("non-invertible element (modulus not prime?)");
    if (t < 0) t += (int64_t)p;
    return (uint64_t)t;
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0) return n == d;
    }
    for (uint64_t d = 41; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Field specification
// ---------------------------------------------------------------------------

enum class FieldKind { Rationals, PrimeField, ExtensionField };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    uint64_t p = 0;
    unsigned k = 1;
    std::vector<uint64_t> modulus;  // monic, size k+1, present iff k > 1

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec finite(uint64_t p, unsigned k = 1);

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && p == o.p && k == o.k && modulus == o.modulus;
    }
    std::string str() const;
};

// ---------------------------------------------------------------------------
// Dense F_p[x] mini-arithmetic, used to build and run extension fields
// ---------------------------------------------------------------------------

namespace fpx {

using Poly = std::vector<uint64_t>;  // c[0] + c[1] x + ..., no trailing zeros

inline void trim(Poly& a) { while (!a.empty() && a.back() == 0) a.pop_back(); }
inline int deg(const Poly& a) { return (int)a.size() - 1; }

inline Poly add(const Poly& a, const Poly& b, uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = fp_add(r[i], b[i], p);
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b, uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = fp_sub(r[i], b[i], p);
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = fp_add(r[i + j], fp_mul(a[i], b[j], p), p);
    trim(r);
    return r;
}

inline Poly rem(Poly a, const Poly& m, uint64_t p) {
    assert(!m.empty());
    uint64_t lcinv = fp_inv(m.back(), p);
    while ((int)a.size() >= (int)m.size()) {
        uint64_t c = fp_mul(a.back(), lcinv, p);
        size_t off = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[off + i] = fp_sub(a[off + i], fp_mul(c, m[i], p), p);
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline Poly gcd(Poly a, Poly b, uint64_t p) {
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {  // monic
        uint64_t inv = fp_inv(a.back(), p);
        for (auto& c : a) c = fp_mul(c, inv, p);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, uint64_t p) {
    return rem(mul(a, b, p), m, p);
}

// x^(p^e) mod m, via e successive p-th powers
inline Poly x_pk_mod(const Poly& m, uint64_t p, unsigned e) {
    Poly x = rem(Poly{0, 1}, m, p);
    Poly acc = x;
    for (unsigned i = 0; i < e; ++i) {
        // acc <- acc^p mod m
        Poly r{1};
        Poly base = acc;
        uint64_t ex = p;
        while (ex) {
            if (ex & 1) r = mulmod(r, base, m, p);
            base = mulmod(base, base, m, p);
            ex >>= 1;
        }
        acc = std::move(r);
    }
    return acc;
}

inline bool is_irreducible(const Poly& f, uint64_t p) {
    int n = deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    // x^(p^n) == x mod f
    Poly xq = x_pk_mod(f, p, (unsigned)n);
    Poly x = rem(Poly{0, 1}, f, p);
    if (xq != x) return false;
    // gcd(x^(p^(n/l)) - x, f) == 1 for prime divisors l of n
    int m = n;
    for (int l = 2; l * l <= m; ++l) {
        if (m % l) continue;
        Poly g = gcd(sub(x_pk_mod(f, p, (unsigned)(n / l)), x, p), f, p);
        if (deg(g) != 0) return false;
        while (m % l == 0) m /= l;
    }
    if (m > 1) {
        Poly g = gcd(sub(x_pk_mod(f, p, (unsigned)(n / m)), x, p), f, p);
        if (deg(g) != 0) return false;
    }
    return true;
}

}  // namespace fpx

// Deterministic monic irreducible of degree k over F_p: scan constant-first
// counter order, i.e. the candidate with digit vector (c_0,...,c_{k-1})
// encoding the integer sum c_i p^i, increasing.
inline std::vector<uint64_t> find_irreducible(uint64_t p, unsigned k) {
    if (!is_prime_u64(p)) throw field_error("find_irreducible: p not prime");
    if (k < 2) throw field_error("find_irreducible: k must be >= 2");
    fpx::Poly f(k + 1, 0);
    f[k] = 1;
    // counter over the k lower digits
    for (;;) {
        if (fpx::is_irreducible(f, p)) return f;
        unsigned i = 0;
        while (i < k) {
            if (++f[i] < p) break;
            f[i] = 0;
            ++i;
        }
        if (i == k) throw field_error("find_irreducible: exhausted (impossible)");
    }
}

inline FieldSpec FieldSpec::finite(uint64_t p, unsigned k) {
    if (!is_prime_u64(p)) throw field_error("FieldSpec: p not prime");
    if (p >= (1ull << 31)) throw field_error("FieldSpec: p too large");
    FieldSpec s;
    s.kind = k > 1 ? FieldKind::ExtensionField : FieldKind::PrimeField;
    s.p = p;
    s.k = k;
    if (k > 1) s.modulus = find_irreducible(p, k);
    return s;
}

inline std::string FieldSpec::str() const {
    if (kind == FieldKind::Rationals) return "Q";
    std::string s = "F_" + std::to_string(p);
    if (k > 1) s += "^" + std::to_string(k);
    return s;
}

// ---------------------------------------------------------------------------
// GF: the finite field F_{p^k}
// ---------------------------------------------------------------------------

using GFElem = boost::container::small_vector<uint64_t, 4>;

class GF {
public:
    using Elem = GFElem;

    explicit GF(uint64_t p) : GF(p, 1) {}

    GF(uint64_t p, unsigned k) : p_(p), k_(k) {
        if (!is_prime_u64(p)) throw field_error("GF: p not prime");
        if (p >= (1ull << 31)) throw field_error("GF: p too large");
        if (k < 1) throw field_error("GF: k must be >= 1");
        if (k == 1) {
            modulus_ = {0, 1};
        } else {
            modulus_ = find_irreducible(p, k);
        }
        init_reduction();
    }

    GF(uint64_t p, unsigned k, std::vector<uint64_t> modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {
        if (!is_prime_u64(p)) throw field_error("GF: p not prime");
        if (k < 1 || modulus_.size() != k + 1 || modulus_.back() != 1)
            throw field_error("GF: bad modulus");
        if (k > 1 && !fpx::is_irreducible(modulus_, p)) throw field_error("GF: modulus not irreducible");
        init_reduction();
    }

    explicit GF(const FieldSpec& s) : p_(s.p), k_(s.k) {
        if (s.kind == FieldKind::Rationals) throw field_error("GF: spec is Q");
        modulus_ = s.k > 1 ? s.modulus : std::vector<uint64_t>{0, 1};
        if (s.k > 1 && !fpx::is_irreducible(modulus_, p_)) throw field_error("GF: modulus not irreducible");
        init_reduction();
    }

    uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    FieldSpec spec() const {
        FieldSpec s;
        s.kind = k_ > 1 ? FieldKind::ExtensionField : FieldKind::PrimeField;
        s.p = p_;
        s.k = k_;
        if (k_ > 1) s.modulus = modulus_;
        return s;
    }

    mpz_class order() const {
        mpz_class q;
        mpz_ui_pow_ui(q.get_mpz_t(), (unsigned long)p_, k_);
        return q;
    }
    // order as uint64, or 0 if it does not fit
    uint64_t order_u64() const {
        uint64_t q = 1;
        for (unsigned i = 0; i < k_; ++i) {
            if (q > UINT64_MAX / p_) return 0;
            q *= p_;
        }
        return q;
    }

    Elem zero() const { return Elem(k_, 0); }
    Elem one() const { Elem e(k_, 0); e[0] = 1 % p_; return e; }

    Elem from_int(long long v) const {
        long long m = v % (long long)p_;
        if (m < 0) m += (long long)p_;
        Elem e(k_, 0);
        e[0] = (uint64_t)m;
        return e;
    }

    Elem from_coeffs(const std::vector<uint64_t>& c) const {
        if (c.size() > k_) throw field_error("from_coeffs: too many coefficients");
        Elem e(k_, 0);
        for (size_t i = 0; i < c.size(); ++i) e[i] = c[i] % p_;
        return e;
    }

    // residue class of num/den mod p (k-independent embedding of Q)
    Elem from_rational(const mpq_class& r) const {
        mpz_class pz((unsigned long)p_);
        mpz_class num = r.get_num() % pz, den = r.get_den() % pz;
        if (num < 0) num += pz;
        if (den == 0) throw field_error("rational has zero denominator mod p");
        uint64_t n = mpz_get_ui(num.get_mpz_t());
        uint64_t d = mpz_get_ui(den.get_mpz_t());
        if (d == 0) throw field_error("characteristic divides denominator");
        Elem e(k_, 0);
        e[0] = fp_mul(n, fp_inv(d, p_), p_);
        return e;
    }

    bool is_zero(const Elem& a) const {
        for (auto c : a)
            if (c) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(k_);
        for (unsigned i = 0; i < k_; ++i) r[i] = fp_add(a[i], b[i], p_);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(k_);
        for (unsigned i = 0; i < k_; ++i) r[i] = fp_sub(a[i], b[i], p_);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(k_);
        for (unsigned i = 0; i < k_; ++i) r[i] = a[i] ? p_ - a[i] : 0;
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        if (k_ == 1) { Elem r(1); r[0] = fp_mul(a[0], b[0], p_); return r; }
        // schoolbook then reduce with the precomputed x^(k+i) table
        boost::container::small_vector<uint64_t, 8> t(2 * k_ - 1, 0);
        for (unsigned i = 0; i < k_; ++i)
            if (a[i])
                for (unsigned j = 0; j < k_; ++j)
                    t[i + j] = (t[i + j] + a[i] * b[j]) % p_;
        Elem r(k_);
        for (unsigned i = 0; i < k_; ++i) r[i] = t[i];
        for (unsigned i = k_; i < 2 * k_ - 1; ++i) {
            uint64_t c = t[i];
            if (!c) continue;
            const uint64_t* red = &redtab_[(i - k_) * k_];
            for (unsigned j = 0; j < k_; ++j)
                r[j] = fp_add(r[j], fp_mul(c, red[j], p_), p_);
        }
        return r;
    }

    Elem mul_scalar(const Elem& a, uint64_t s) const {
        s %= p_;
        Elem r(k_);
        for (unsigned i = 0; i < k_; ++i) r[i] = fp_mul(a[i], s, p_);
        return r;
    }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw field_error("division by zero in GF");
        if (k_ == 1) { Elem r(1); r[0] = fp_inv(a[0], p_); return r; }
        // extended Euclid in F_p[x] against the modulus
        fpx::Poly r0 = modulus_, r1(a.begin(), a.end());
        fpx::trim(r1);
        fpx::Poly s0 = {}, s1 = {1};
        while (!r1.empty()) {
            // r0 = q r1 + r2
            fpx::Poly q;
            {
                fpx::Poly num = r0;
                uint64_t lcinv = fp_inv(r1.back(), p_);
                q.assign(num.size() >= r1.size() ? num.size() - r1.size() + 1 : 0, 0);
                while ((int)num.size() >= (int)r1.size() && !num.empty()) {
                    uint64_t c = fp_mul(num.back(), lcinv, p_);
                    size_t off = num.size() - r1.size();
                    q[off] = c;
                    for (size_t i = 0; i < r1.size(); ++i)
                        num[off + i] = fp_sub(num[off + i], fp_mul(c, r1[i], p_), p_);
                    fpx::trim(num);
                }
                r0.swap(r1);
                r1 = std::move(num);
            }
            fpx::Poly ns = fpx::sub(s0, fpx::mul(q, s1, p_), p_);
            s0 = std::move(s1);
            s1 = std::move(ns);
        }
        // r0 = gcd (degree 0 since modulus irreducible), s0 its cofactor
        if (fpx::deg(r0) != 0) throw field_error("GF::inv: gcd not constant");
        uint64_t c = fp_inv(r0[0], p_);
        Elem out(k_, 0);
        for (size_t i = 0; i < s0.size(); ++i) out[i] = fp_mul(s0[i], c, p_);
        return out;
    }

    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elem pow(Elem a, const mpz_class& e) const {
        if (e < 0) return pow(inv(a), mpz_class(-e));
        Elem r = one();
        mpz_class m = e;
        size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
        for (size_t i = 0; i < bits; ++i) {
            if (mpz_tstbit(m.get_mpz_t(), i)) r = mul(r, a);
            a = mul(a, a);
        }
        return r;
    }

    // a^(p^m): m-fold Frobenius
    Elem frobenius(const Elem& a, unsigned m = 1) const {
        Elem r = a;
        for (unsigned i = 0; i < m; ++i) r = pow(r, p_);
        return r;
    }

    // membership in the subfield F_{p^kp} (requires kp | k)
    bool in_subfield(const Elem& a, unsigned kp) const {
        assert(k_ % kp == 0);
        return eq(frobenius(a, kp), a);
    }

    // smallest d | k with a in F_{p^d}
    unsigned def_degree(const Elem& a) const {
        for (unsigned d = 1; d <= k_; ++d)
            if (k_ % d == 0 && in_subfield(a, d)) return d;
        return k_;
    }

    // enumeration index <-> element, for q fitting in 64 bits
    Elem elem_at(uint64_t idx) const {
        Elem e(k_);
        for (unsigned i = 0; i < k_; ++i) {
            e[i] = idx % p_;
            idx /= p_;
        }
        return e;
    }
    uint64_t index_of(const Elem& a) const {
        uint64_t idx = 0;
        for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a[i];
        return idx;
    }

    std::string to_string(const Elem& a) const {
        if (k_ == 1) return std::to_string(a[0]);
        std::string s = "[";
        for (unsigned i = 0; i < k_; ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        return s + "]";
    }

    bool less(const Elem& a, const Elem& b) const {
        for (unsigned i = k_; i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }

private:
    void init_reduction() {
        if (k_ == 1) return;
        // redtab_ row i = coefficients of x^(k+i) mod modulus
        redtab_.assign((k_ - 1) * k_, 0);
        fpx::Poly cur(k_, 0);
        {  // x^k mod modulus = -(lower part)
            for (unsigned j = 0; j < k_; ++j) cur[j] = modulus_[j] ? p_ - modulus_[j] : 0;
        }
        for (unsigned i = 0; i + 1 < k_; ++i) {
            for (unsigned j = 0; j < k_; ++j) redtab_[i * k_ + j] = j < cur.size() ? cur[j] : 0;
            // cur <- cur * x mod modulus
            fpx::Poly nxt(k_, 0);
            uint64_t top = cur.size() == k_ ? cur[k_ - 1] : 0;
            for (unsigned j = k_ - 1; j > 0; --j) nxt[j] = j - 1 < cur.size() ? cur[j - 1] : 0;
            nxt[0] = 0;
            if (top) {
                for (unsigned j = 0; j < k_; ++j) {
                    uint64_t m = modulus_[j] ? p_ - modulus_[j] : 0;
                    nxt[j] = fp_add(nxt[j], fp_mul(top, m, p_), p_);
                }
            }
            cur = std::move(nxt);
        }
    }

    uint64_t p_;
    unsigned k_;
    std::vector<uint64_t> modulus_;
    std::vector<uint64_t> redtab_;
};

// Embedding F_{p^k} -> F_{p^K} for k | K: sends the residue class of x to the
// deterministically chosen (index-smallest) root of the small modulus in the
// big field.  Roots are found by plain search when q is small and by gcd
// splitting otherwise; see embedding_root in factor.hpp for the general case.
struct Embedding {
    const GF* src;
    const GF* dst;
    GFElem root;  // image of the residue class of x

    GFElem map(const GFElem& a) const {
        // Horner evaluation of the residue polynomial at root
        GFElem acc = dst->zero();
        for (unsigned i = src->k(); i-- > 0;) {
            acc = dst->mul(acc, root);
            acc = dst->add(acc, dst->from_int((long long)a[i]));
        }
        return acc;
    }
};

}  // namespace qlines

#endif
