// Quartic surfaces in P^3: containment of lines, the pencil of planes through
// a contained line, residual cubics, and smoothness scanning.

#ifndef QLINES_SURFACE_HPP
#define QLINES_SURFACE_HPP

#include "qlines/factor.hpp"
#include "qlines/projective.hpp"

#include <optional>
#include <string>

namespace qlines {

enum class Smoothness { Unverified, Smooth, Singular };

template <class F>
struct QuarticSurface {
    using Elem = typename F::Elem;
    const F* fld;
    MultiPoly<F> f;  // homogeneous of degree 4 in x1..x4
    Smoothness smooth = Smoothness::Unverified;

    QuarticSurface(const F* field, MultiPoly<F> poly) : fld(field), f(std::move(poly)) {
        if (f.is_zero()) throw geometry_error("QuarticSurface: zero polynomial");
        if (f.nvars() != 4) throw geometry_error("QuarticSurface: needs 4 variables");
        if (!f.is_homogeneous() || f.total_degree() != 4)
            throw geometry_error("QuarticSurface: not homogeneous of degree 4");
    }

    bool contains(const ProjPoint<F>& pt) const {
        return fld->is_zero(f.eval({pt.x[0], pt.x[1], pt.x[2], pt.x[3]}));
    }

    std::array<MultiPoly<F>, 4> gradient() const {
        return {f.derivative(0), f.derivative(1), f.derivative(2), f.derivative(3)};
    }
};

// f restricted to the line as a binary quartic in the span parameters (s,t)
template <class F>
MultiPoly<F> restrict_to_line(const QuarticSurface<F>& S, const ProjLine<F>& L) {
    const F* fld = S.fld;
    std::vector<MultiPoly<F>> sub;
    for (int i = 0; i < 4; ++i) {
        auto si = MultiPoly<F>::var(fld, 2, 0).scaled(L.p.x[i]);
        auto ti = MultiPoly<F>::var(fld, 2, 1).scaled(L.q.x[i]);
        sub.push_back(si + ti);
    }
    return S.f.subst(sub);
}

template <class F>
bool line_in_surface(const QuarticSurface<F>& S, const ProjLine<F>& L) {
    return restrict_to_line(S, L).is_zero();
}

// ---------------------------------------------------------------------------
// The pencil of planes through a line
// ---------------------------------------------------------------------------

// Plane H_t for t = (t0:t1): zero set of t0*v1 - t1*v0, where (v0, v1) is the
// deterministic kernel basis of linear forms vanishing on L.  For the
// normalized line {x3=x4=0} this gives v0 = x3, v1 = x4 and H_(1:lambda) =
// {x4 = lambda x3}, H_(0:1) = {x3 = 0}.
template <class F>
struct PencilPlane {
    using Elem = typename F::Elem;
    const F* fld;
    ProjLine<F> base;
    std::pair<Elem, Elem> t;       // projective parameter, not both zero
    std::array<Elem, 4> form;      // coefficients of the linear form cutting H_t

    PencilPlane(const ProjLine<F>& L, Elem t0, Elem t1) : fld(L.fld), base(L), t{t0, t1} {
        if (fld->is_zero(t0) && fld->is_zero(t1)) throw geometry_error("PencilPlane: zero parameter");
        auto forms = L.vanishing_forms();
        for (int i = 0; i < 4; ++i)
            form[i] = fld->sub(fld->mul(t0, forms[1][i]), fld->mul(t1, forms[0][i]));
    }

    Elem eval(const ProjPoint<F>& pt) const {
        Elem s = fld->zero();
        for (int i = 0; i < 4; ++i) s = fld->add(s, fld->mul(form[i], pt.x[i]));
        return s;
    }

    // a deterministic third spanning point of the plane, off the base line:
    // combine the lexicographically first usable standard basis vectors
    ProjPoint<F> third_point() const {
        int m = -1;  // coordinate where the form is nonzero
        for (int i = 0; i < 4; ++i)
            if (!fld->is_zero(form[i])) {
                m = i;
                break;
            }
        if (m < 0) throw geometry_error("PencilPlane: zero linear form");
        for (int j = 0; j < 4; ++j) {
            if (j == m) continue;
            // candidate form[m] e_j - form[j] e_m lies in the plane
            std::array<Elem, 4> c;
            for (int i = 0; i < 4; ++i) c[i] = fld->zero();
            c[j] = form[m];
            c[m] = fld->neg(form[j]);
            ProjPoint<F> cand(fld, std::move(c));
            if (!base.contains(cand)) return cand;
        }
        throw geometry_error("PencilPlane: no independent point (degenerate)");
    }
};

// The residual cubic: f restricted to H_t in plane coordinates (a,b,c) with
// respect to the frame (P, Q, R), divided exactly by the coordinate c that
// cuts out L.  Variables of the result: 0 = along P, 1 = along Q, 2 = off L.
template <class F>
MultiPoly<F> residual_cubic(const QuarticSurface<F>& S, const PencilPlane<F>& H) {
    const F* fld = S.fld;
    ProjPoint<F> R = H.third_point();
    std::vector<MultiPoly<F>> sub;
    for (int i = 0; i < 4; ++i) {
        auto ai = MultiPoly<F>::var(fld, 3, 0).scaled(H.base.p.x[i]);
        auto bi = MultiPoly<F>::var(fld, 3, 1).scaled(H.base.q.x[i]);
        auto ci = MultiPoly<F>::var(fld, 3, 2).scaled(R.x[i]);
        sub.push_back(ai + bi + ci);
    }
    MultiPoly<F> restricted = S.f.subst(sub);
    if (restricted.is_zero()) throw geometry_error("residual_cubic: plane contained in surface");
    auto layers = restricted.coefficients_in(2);
    if (!layers.empty() && !layers[0].is_zero())
        throw geometry_error("residual_cubic: line not contained in surface");
    std::vector<MultiPoly<F>> shifted(layers.begin() + (layers.empty() ? 0 : 1), layers.end());
    return MultiPoly<F>::from_coefficients_in(fld, 3, 2, shifted);
}

// ---------------------------------------------------------------------------
// Smoothness scanning over finite fields
// ---------------------------------------------------------------------------

template <class F>
struct SmoothnessReport {
    Smoothness verdict;
    unsigned tower_checked = 0;                 // largest k scanned
    std::optional<std::array<typename F::Elem, 4>> witness;  // singular point if found
};

// Scan P^3(F_{p^m}) for m = 1..K for common zeros of f and its partials.
inline SmoothnessReport<GF> smoothness_check(const QuarticSurface<GF>& S, unsigned K,
                                             uint64_t point_budget = 200000000ull) {
    const GF* base = S.fld;
    SmoothnessReport<GF> rep{Smoothness::Smooth, 0, std::nullopt};
    for (unsigned m = 1; m <= K; ++m) {
        unsigned kk = base->k() * m;
        uint64_t q = 1, ok = 1;
        for (unsigned i = 0; i < kk && ok; ++i) {
            if (q > (1ull << 40) / base->p()) ok = 0;
            else q *= base->p();
        }
        if (!ok || q * q * q > point_budget) break;
        GF E(base->p(), kk);
        Embedding emb = make_embedding(*base, E);
        // map f and partials up
        auto lift = [&](const MultiPoly<GF>& g) {
            MultiPoly<GF> r(&E, 4);
            for (auto& [e, c] : g.terms()) r.add_term(e, emb.map(c));
            return r;
        };
        MultiPoly<GF> f = lift(S.f);
        std::array<MultiPoly<GF>, 4> grad = {f.derivative(0), f.derivative(1), f.derivative(2),
                                             f.derivative(3)};
        // chart-normalized point iteration: first nonzero coordinate = 1
        std::vector<GF::Elem> x(4, E.zero());
        for (int lead = 0; lead < 4; ++lead) {
            uint64_t cells = 1;
            for (int i = lead + 1; i < 4; ++i) cells *= q;
            for (uint64_t idx = 0; idx < cells; ++idx) {
                uint64_t rest = idx;
                for (int i = 0; i < lead; ++i) x[i] = E.zero();
                x[lead] = E.one();
                for (int i = lead + 1; i < 4; ++i) {
                    x[i] = E.elem_at(rest % q);
                    rest /= q;
                }
                if (!E.is_zero(f.eval(x))) continue;
                bool singular = true;
                for (auto& g : grad)
                    if (!E.is_zero(g.eval(x))) {
                        singular = false;
                        break;
                    }
                if (singular) {
                    rep.verdict = Smoothness::Singular;
                    rep.tower_checked = m;
                    rep.witness = std::array<GF::Elem, 4>{x[0], x[1], x[2], x[3]};
                    return rep;
                }
            }
        }
        rep.tower_checked = m;
    }
    return rep;
}

// reduce a rational surface mod p; fails when p divides a denominator or the
// reduction degenerates
inline std::optional<QuarticSurface<GF>> reduce_mod_p(const QuarticSurface<QF>& S, const GF& fp) {
    MultiPoly<GF> g(&fp, 4);
    for (auto& [e, c] : S.f.terms()) {
        mpz_class den = c.get_den();
        if (mpz_divisible_ui_p(den.get_mpz_t(), (unsigned long)fp.p())) return std::nullopt;
        g.add_term(e, fp.from_rational(c));
    }
    if (g.is_zero() || g.total_degree() != 4) return std::nullopt;
    return QuarticSurface<GF>(&fp, std::move(g));
}

}  // namespace qlines

#endif
