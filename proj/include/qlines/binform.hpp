// Binary forms sum c_i x^i y^(d-i) with an explicit formal degree, so that
// roots at (1:0) and degree drops under specialization are handled correctly.
// The resultant and discriminant here are the formal-degree Sylvester
// determinants, valid over any coefficient ring with exact division.

#ifndef QLINES_BINFORM_HPP
#define QLINES_BINFORM_HPP

#include "qlines/factor.hpp"
#include "qlines/multipoly.hpp"

#include <vector>

namespace qlines {

// resultant of two binary forms given by formal coefficient vectors
// a (size da+1) and b (size db+1)
template <class Ops>
typename Ops::T formal_resultant(const std::vector<typename Ops::T>& a, int da,
                                 const std::vector<typename Ops::T>& b, int db, const Ops& ops) {
    if ((int)a.size() != da + 1 || (int)b.size() != db + 1)
        throw algebra_error("formal_resultant: coefficient count mismatch");
    if (da == 0 && db == 0) return ops.one();
    auto m = sylvester_matrix<typename Ops::T>(
        da, db, [&](int i) { return a[i]; }, [&](int i) { return b[i]; }, ops.zero());
    return bareiss_det(m, ops);
}

// repeated-root locus of a binary form of formal degree d:
// formal resultant of the two partials (both of formal degree d-1).
// Requires char coprime to d (Euler relation); vanishes exactly on forms
// with a repeated root in P^1, up to a nonzero constant.
template <class Ops>
typename Ops::T formal_discriminant(const std::vector<typename Ops::T>& c, int d, const Ops& ops) {
    if ((int)c.size() != d + 1) throw algebra_error("formal_discriminant: coefficient count mismatch");
    if (d < 2) throw algebra_error("formal_discriminant: degree must be >= 2");
    std::vector<typename Ops::T> fx, fy;
    for (int i = 1; i <= d; ++i) fx.push_back(ops.mul_int(c[i], (uint64_t)i));
    for (int i = 0; i < d; ++i) fy.push_back(ops.mul_int(c[i], (uint64_t)(d - i)));
    return formal_resultant(fx, d - 1, fy, d - 1, ops);
}

// ---------------------------------------------------------------------------
// Binary forms over a field: P^1 roots
// ---------------------------------------------------------------------------

template <class F>
struct BinaryForm {
    const F* fld;
    int d;  // formal degree
    std::vector<typename F::Elem> c;  // c[i] multiplies x^i y^(d-i)

    static BinaryForm from_unipoly(const UniPoly<F>& f, int d) {
        if (f.deg() > d) throw algebra_error("BinaryForm: degree exceeds formal degree");
        BinaryForm b{f.field(), d, {}};
        for (int i = 0; i <= d; ++i) b.c.push_back(f.coeff(i));
        return b;
    }
    UniPoly<F> dehomogenized() const { return UniPoly<F>(fld, std::vector<typename F::Elem>(c.begin(), c.end())); }
    bool is_zero() const {
        for (auto& x : c)
            if (!fld->is_zero(x)) return false;
        return true;
    }
    typename F::Elem eval(const typename F::Elem& x, const typename F::Elem& y) const {
        typename F::Elem acc = fld->zero();
        for (int i = 0; i <= d; ++i) {
            auto t = fld->mul(c[i], fld->mul(fld->pow(x, (uint64_t)i), fld->pow(y, (uint64_t)(d - i))));
            acc = fld->add(acc, t);
        }
        return acc;
    }
};

template <class F>
struct P1Root {
    bool at_infinity;               // the point (1:0)
    typename F::Elem value;         // x-coordinate of (value:1) when finite
    unsigned multiplicity;
};

inline std::vector<P1Root<GF>> p1_roots(const BinaryForm<GF>& f) {
    if (f.is_zero()) throw algebra_error("p1_roots: zero form");
    std::vector<P1Root<GF>> out;
    UniPoly<GF> g = f.dehomogenized();
    int drop = f.d - g.deg();
    if (drop > 0) out.push_back({true, f.fld->zero(), (unsigned)drop});
    for (auto& r : roots_with_multiplicity(g)) out.push_back({false, r.value, r.multiplicity});
    return out;
}

// multiplicity partition of the total root multiset (including conjugate
// orbits over the base field), e.g. {3}, {2,1}, {1,1,1} for a cubic
inline std::vector<unsigned> root_multiplicity_pattern(const BinaryForm<GF>& f) {
    if (f.is_zero()) throw algebra_error("root_multiplicity_pattern: zero form");
    std::vector<unsigned> pat;
    UniPoly<GF> g = f.dehomogenized();
    int drop = f.d - g.deg();
    if (drop > 0) pat.push_back((unsigned)drop);
    if (g.deg() >= 1)
        for (auto& fa : factorize(g))
            for (int i = 0; i < fa.poly.deg(); ++i) pat.push_back(fa.multiplicity);
    std::sort(pat.rbegin(), pat.rend());
    return pat;
}

}  // namespace qlines

#endif
