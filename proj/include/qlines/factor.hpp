// Squarefree decomposition, factorization and root finding for univariate
// polynomials over GF (Cantor-Zassenhaus) plus the char-0 squarefree split.
//
// Root finding policy: exhaustive evaluation for q <= 2^16, gcd splitting
// against x^q - x above.  Factor lists are sorted (degree, then coefficient
// order) so results are deterministic in spite of the randomized splitting.

#ifndef QLINES_FACTOR_HPP
#define QLINES_FACTOR_HPP

#include "qlines/gf.hpp"
#include "qlines/rational.hpp"
#include "qlines/unipoly.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace qlines {

template <class F>
struct SquarefreePart {
    UniPoly<F> factor;
    unsigned multiplicity;
};

namespace detail {

// deterministic xorshift for the splitting randomness
struct SplitRng {
    uint64_t s;
    explicit SplitRng(uint64_t seed) : s(seed ^ 0x9e3779b97f4a7c15ull) { if (!s) s = 1; }
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

inline UniPoly<GF> random_poly_below(const GF& fld, int deg, SplitRng& rng) {
    std::vector<GF::Elem> c;
    for (int i = 0; i <= deg; ++i) {
        GF::Elem e(fld.k());
        for (unsigned j = 0; j < fld.k(); ++j) e[j] = rng.next() % fld.p();
        c.push_back(std::move(e));
    }
    return UniPoly<GF>(&fld, std::move(c));
}

}  // namespace detail

// p-th root of a in F_{p^k}: a^(p^(k-1))
inline GF::Elem pth_root(const GF& fld, const GF::Elem& a) {
    return fld.frobenius(a, fld.k() - 1);
}

// f must satisfy f = g(x^p); returns g
inline UniPoly<GF> pth_root_poly(const GF& fld, const UniPoly<GF>& f) {
    std::vector<GF::Elem> c;
    uint64_t p = fld.p();
    for (int i = 0; i * (int)p <= f.deg(); ++i) c.push_back(pth_root(fld, f.coeff(i * (int)p)));
    return UniPoly<GF>(&fld, std::move(c));
}

// Squarefree decomposition over GF, correct for all multiplicities including
// those divisible by p.  Factors are monic and pairwise coprime.
inline std::vector<SquarefreePart<GF>> squarefree_decomposition(const UniPoly<GF>& f0) {
    if (f0.is_zero()) throw algebra_error("squarefree_decomposition: zero polynomial");
    const GF* fld = f0.field();
    std::map<unsigned, UniPoly<GF>> parts;  // multiplicity -> product (merge by multiplying)
    std::vector<std::pair<UniPoly<GF>, unsigned>> work{{f0.monic(), 1}};
    while (!work.empty()) {
        auto [f, outer] = work.back();
        work.pop_back();
        if (f.deg() < 1) continue;
        UniPoly<GF> df = f.derivative();
        if (df.is_zero()) {  // f = g(x^p)
            work.push_back({pth_root_poly(*fld, f), outer * (unsigned)fld->p()});
            continue;
        }
        UniPoly<GF> c = gcd(f, df);
        UniPoly<GF> w = f.divexact(c);
        unsigned i = 1;
        while (w.deg() >= 1) {
            UniPoly<GF> y = gcd(w, c);
            UniPoly<GF> z = w.divexact(y);
            if (z.deg() >= 1) {
                unsigned m = outer * i;
                auto it = parts.find(m);
                if (it == parts.end())
                    parts.emplace(m, z);
                else
                    it->second = it->second * z;
            }
            ++i;
            w = std::move(y);
            c = c.divexact(w);
        }
        if (c.deg() >= 1) work.push_back({pth_root_poly(*fld, c), outer * (unsigned)fld->p()});
    }
    std::vector<SquarefreePart<GF>> out;
    for (auto& [m, fac] : parts) out.push_back({fac.monic(), m});
    return out;
}

// Yun's algorithm over Q
inline std::vector<SquarefreePart<QF>> squarefree_decomposition(const UniPoly<QF>& f0) {
    if (f0.is_zero()) throw algebra_error("squarefree_decomposition: zero polynomial");
    std::vector<SquarefreePart<QF>> out;
    UniPoly<QF> f = f0.monic();
    if (f.deg() < 1) return out;
    UniPoly<QF> df = f.derivative();
    UniPoly<QF> c = gcd(f, df);
    UniPoly<QF> w = f.divexact(c);
    unsigned i = 1;
    while (w.deg() >= 1) {
        UniPoly<QF> y = gcd(w, c);
        UniPoly<QF> z = w.divexact(y);
        if (z.deg() >= 1) out.push_back({z.monic(), i});
        ++i;
        w = std::move(y);
        c = c.divexact(w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Factorization over GF: squarefree + distinct-degree + equal-degree split
// ---------------------------------------------------------------------------

// x^(q^e) mod f, q the field order
inline UniPoly<GF> x_q_pow_mod(const UniPoly<GF>& f, unsigned e = 1) {
    const GF* fld = f.field();
    UniPoly<GF> h = UniPoly<GF>::x(fld).rem(f);
    for (unsigned i = 0; i < e * fld->k(); ++i) h = pow_mod(h, fld->p(), f);
    return h;
}

template <class F>
UniPoly<F> pow_mod_mpz(UniPoly<F> base, const mpz_class& e, const UniPoly<F>& m) {
    UniPoly<F> r = UniPoly<F>::constant(base.field(), base.field()->one());
    base = base.rem(m);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * base).rem(m);
        base = (base * base).rem(m);
    }
    return r;
}

namespace detail {

// split a monic squarefree product of irreducibles, all of degree d
inline void equal_degree_split(const UniPoly<GF>& f, unsigned d, std::vector<UniPoly<GF>>& out, SplitRng& rng) {
    const GF* fld = f.field();
    if (f.deg() == (int)d) {
        out.push_back(f);
        return;
    }
    mpz_class qd = fld->order();
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), qd.get_mpz_t(), d);
    e = (e - 1) / 2;  // q odd throughout (p >= 3)
    for (;;) {
        UniPoly<GF> r = random_poly_below(*fld, f.deg() - 1, rng);
        if (r.deg() < 1) continue;
        UniPoly<GF> g = gcd(r, f);
        if (g.deg() >= 1 && g.deg() < f.deg()) {
            equal_degree_split(g, d, out, rng);
            equal_degree_split(f.divexact(g), d, out, rng);
            return;
        }
        UniPoly<GF> h = pow_mod_mpz(r, e, f);
        h = h - UniPoly<GF>::constant(fld, fld->one());
        g = gcd(h, f);
        if (g.deg() >= 1 && g.deg() < f.deg()) {
            equal_degree_split(g, d, out, rng);
            equal_degree_split(f.divexact(g), d, out, rng);
            return;
        }
    }
}

inline bool unipoly_less(const UniPoly<GF>& a, const UniPoly<GF>& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    const GF* fld = a.field();
    for (int i = a.deg(); i >= 0; --i) {
        auto ca = a.coeff(i), cb = b.coeff(i);
        if (!(ca == cb)) return fld->less(ca, cb);
    }
    return false;
}

}  // namespace detail

struct IrreducibleFactor {
    UniPoly<GF> poly;  // monic irreducible
    unsigned multiplicity;
};

// Full factorization into monic irreducibles, sorted deterministically.
inline std::vector<IrreducibleFactor> factorize(const UniPoly<GF>& f) {
    if (f.is_zero()) throw algebra_error("factorize: zero polynomial");
    const GF* fld = f.field();
    std::vector<IrreducibleFactor> out;
    detail::SplitRng rng(0x243f6a8885a308d3ull ^ (uint64_t)f.deg());
    for (auto& part : squarefree_decomposition(f)) {
        // distinct-degree on the squarefree part
        UniPoly<GF> g = part.factor;
        UniPoly<GF> h = UniPoly<GF>::x(fld).rem(g);
        unsigned d = 0;
        while (g.deg() >= 1) {
            ++d;
            if ((int)(2 * d) > g.deg()) {
                out.push_back({g.monic(), part.multiplicity});
                break;
            }
            // h <- h^q mod g
            for (unsigned i = 0; i < fld->k(); ++i) h = pow_mod(h, fld->p(), g);
            UniPoly<GF> gd = gcd(h - UniPoly<GF>::x(fld), g);
            if (gd.deg() >= 1) {
                std::vector<UniPoly<GF>> pieces;
                detail::equal_degree_split(gd.monic(), d, pieces, rng);
                for (auto& irr : pieces) out.push_back({irr.monic(), part.multiplicity});
                g = g.divexact(gd);
                h = h.rem(g);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
        return detail::unipoly_less(a.poly, b.poly);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Roots
// ---------------------------------------------------------------------------

template <class F>
struct Root {
    typename F::Elem value;
    unsigned multiplicity;
};

// gcd-with-(x^q - x) splitting; works for any field size
inline std::vector<Root<GF>> roots_with_multiplicity_fast(const UniPoly<GF>& f) {
    if (f.is_zero()) throw algebra_error("roots_with_multiplicity: zero polynomial");
    const GF* fld = f.field();
    std::vector<Root<GF>> out;
    if (f.deg() < 1) return out;
    detail::SplitRng rng(0x13198a2e03707344ull ^ (uint64_t)f.deg());
    for (auto& part : squarefree_decomposition(f)) {
        UniPoly<GF> g = part.factor;
        UniPoly<GF> h = x_q_pow_mod(g);
        UniPoly<GF> lin = gcd(h - UniPoly<GF>::x(fld), g);
        if (lin.deg() < 1) continue;
        std::vector<UniPoly<GF>> pieces;
        detail::equal_degree_split(lin.monic(), 1, pieces, rng);
        for (auto& piece : pieces) out.push_back({fld->neg(piece.coeff(0)), part.multiplicity});
    }
    std::sort(out.begin(), out.end(), [fld](const Root<GF>& a, const Root<GF>& b) { return fld->less(a.value, b.value); });
    return out;
}

// All roots in the coefficient field, with multiplicities.
inline std::vector<Root<GF>> roots_with_multiplicity(const UniPoly<GF>& f) {
    if (f.is_zero()) throw algebra_error("roots_with_multiplicity: zero polynomial");
    const GF* fld = f.field();
    std::vector<Root<GF>> out;
    if (f.deg() < 1) return out;
    uint64_t q = fld->order_u64();
    if (q != 0 && q <= (1ull << 16)) {
        for (uint64_t i = 0; i < q; ++i) {
            GF::Elem x = fld->elem_at(i);
            if (!fld->is_zero(f.eval(x))) continue;
            unsigned m = 0;
            UniPoly<GF> g = f;
            UniPoly<GF> lin(fld, {fld->neg(x), fld->one()});
            for (;;) {
                auto [quo, rem] = g.divrem(lin);
                if (!rem.is_zero()) break;
                ++m;
                g = quo;
                if (g.is_zero()) break;
            }
            out.push_back({x, m});
        }
        return out;
    }
    return roots_with_multiplicity_fast(f);
}

// Rational roots only (documented restriction over Q): candidates p/q with
// p | constant, q | leading, after clearing denominators.
inline std::vector<Root<QF>> roots_with_multiplicity(const UniPoly<QF>& f) {
    if (f.is_zero()) throw algebra_error("roots_with_multiplicity: zero polynomial");
    std::vector<Root<QF>> out;
    if (f.deg() < 1) return out;
    // clear denominators
    mpz_class den(1);
    for (auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> z;
    for (auto& c : f.coeffs()) z.push_back(mpz_class(c * den));
    int lo = 0;
    while (lo < (int)z.size() && z[lo] == 0) ++lo;
    if (lo > 0) out.push_back({mpq_class(0), (unsigned)lo});
    mpz_class a0 = abs(z[lo]), an = abs(z.back());
    auto divisors = [](const mpz_class& n) {
        std::vector<mpz_class> d;
        for (mpz_class i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                d.push_back(i);
                if (i * i != n) d.push_back(n / i);
            }
        return d;
    };
    QF qf;
    for (auto& num : divisors(a0))
        for (auto& dq : divisors(an))
            for (int s : {1, -1}) {
                mpq_class cand(s * num, dq);
                cand.canonicalize();
                if (!qf.is_zero(f.eval(cand))) continue;
                bool seen = false;
                for (auto& r : out) seen |= (r.value == cand);
                if (seen) continue;
                unsigned m = 0;
                UniPoly<QF> g = f, lin(f.field(), {-cand, mpq_class(1)});
                for (;;) {
                    auto [quo, rem] = g.divrem(lin);
                    if (!rem.is_zero()) break;
                    ++m;
                    g = quo;
                    if (g.is_zero()) break;
                }
                out.push_back({cand, m});
            }
    return out;
}

// convenience: distinct roots in the field
inline std::vector<GF::Elem> roots(const UniPoly<GF>& f) {
    std::vector<GF::Elem> out;
    for (auto& r : roots_with_multiplicity(f)) out.push_back(r.value);
    return out;
}

// ---------------------------------------------------------------------------
// Extension towers and embeddings
// ---------------------------------------------------------------------------

// Deterministic embedding F_{p^k} -> F_{p^K}, k | K: the image of x is the
// smallest root (in coefficient order) of the source modulus in the target.
inline Embedding make_embedding(const GF& src, const GF& dst) {
    if (dst.p() != src.p() || dst.k() % src.k() != 0) throw field_error("make_embedding: incompatible fields");
    if (src.k() == 1) return Embedding{&src, &dst, dst.zero()};
    std::vector<GF::Elem> c;
    for (auto v : src.modulus()) c.push_back(dst.from_int((long long)v));
    UniPoly<GF> m(&dst, std::move(c));
    auto rts = roots(m);
    if (rts.empty()) throw field_error("make_embedding: modulus has no root (bad tower)");
    GF::Elem best = rts[0];
    for (auto& r : rts)
        if (dst.less(r, best)) best = r;
    return Embedding{&src, &dst, best};
}

// map a polynomial through an embedding
inline UniPoly<GF> map_poly(const Embedding& e, const UniPoly<GF>& f) {
    std::vector<GF::Elem> c;
    for (auto& x : f.coeffs()) c.push_back(e.map(x));
    return UniPoly<GF>(e.dst, std::move(c));
}

}  // namespace qlines

#endif
