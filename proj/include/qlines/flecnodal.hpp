// Pointwise membership in the degree-20 flecnodal divisor of a smooth quartic
// and the incidence budgets it implies.  A point P of S is flecnodal when some
// line has contact order >= 4 with S at P; writing f(P + s u + t v) =
// A(s,t) + B(s,t) + C(s,t) with A, B, C the graded pieces of degrees 2, 3, 4
// in the tangent-plane frame (u, v), this happens exactly when the binary
// forms A and B share a root, i.e. Res(A, B) = 0.

#ifndef QLINES_FLECNODAL_HPP
#define QLINES_FLECNODAL_HPP

#include "qlines/binform.hpp"
#include "qlines/census.hpp"
#include "qlines/surface.hpp"

#include <string>
#include <vector>

namespace qlines {

struct flecnodal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
struct FlecnodalSample {
    ProjPoint<F> point;
    BinaryForm<F> A;  // degree-2 contact form in the tangent direction
    BinaryForm<F> B;  // degree-3 contact form
    typename F::Elem res;  // Res(A, B)
    bool member;
};

namespace detail {

// kernel basis of the gradient row at a smooth point: for each coordinate
// j != m (m = first nonzero gradient entry) the vector g_m e_j - g_j e_m
template <class F>
std::vector<std::array<typename F::Elem, 4>> tangent_kernel(
    const F& fld, const std::array<typename F::Elem, 4>& g) {
    int m = -1;
    for (int i = 0; i < 4 && m < 0; ++i)
        if (!fld.is_zero(g[i])) m = i;
    if (m < 0) throw flecnodal_error("flecnodal_member: surface is singular at the point");
    std::vector<std::array<typename F::Elem, 4>> ker;
    for (int j = 0; j < 4; ++j) {
        if (j == m) continue;
        std::array<typename F::Elem, 4> v{fld.zero(), fld.zero(), fld.zero(), fld.zero()};
        v[j] = g[m];
        v[m] = fld.neg(g[j]);
        ker.push_back(v);
    }
    return ker;
}

}  // namespace detail

// Tangent-direction frames are the pairs of kernel vectors that, together
// with P, span the tangent plane; `chart` selects among them so the verdict
// can be cross-checked in an independent frame.
template <class F>
FlecnodalSample<F> flecnodal_member(const QuarticSurface<F>& S, const ProjPoint<F>& P,
                                    unsigned chart = 0) {
    using Elem = typename F::Elem;
    const F& fld = *S.fld;
    if (!S.contains(P)) throw flecnodal_error("flecnodal_member: point not on the surface");
    std::array<Elem, 4> g;
    for (int i = 0; i < 4; ++i)
        g[i] = S.f.derivative((unsigned)i).eval({P.x[0], P.x[1], P.x[2], P.x[3]});
    auto ker = detail::tangent_kernel(fld, g);
    // admissible pairs: the tangent plane is spanned by P and two kernel vectors
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < (int)ker.size(); ++a)
        for (int b = a + 1; b < (int)ker.size(); ++b) {
            std::vector<std::vector<Elem>> m = {
                {P.x[0], P.x[1], P.x[2], P.x[3]},
                {ker[a][0], ker[a][1], ker[a][2], ker[a][3]},
                {ker[b][0], ker[b][1], ker[b][2], ker[b][3]}};
            if (mat_rank(fld, m) == 3) pairs.emplace_back(a, b);
        }
    if (pairs.empty()) throw flecnodal_error("flecnodal_member: no tangent frame");
    auto [a, b] = pairs[chart % pairs.size()];

    // expand f(P + s u + t v) and read off the graded pieces
    std::vector<MultiPoly<F>> sub;
    for (int i = 0; i < 4; ++i) {
        auto c = MultiPoly<F>::constant(&fld, 2, P.x[i]);
        auto su = MultiPoly<F>::var(&fld, 2, 0).scaled(ker[a][i]);
        auto tv = MultiPoly<F>::var(&fld, 2, 1).scaled(ker[b][i]);
        sub.push_back(c + su + tv);
    }
    auto expanded = S.f.subst(sub);
    BinaryForm<F> A{&fld, 2, std::vector<Elem>(3, fld.zero())};
    BinaryForm<F> B{&fld, 3, std::vector<Elem>(4, fld.zero())};
    for (auto& [e, c] : expanded.terms()) {
        unsigned d = e[0] + e[1];
        if (d == 2) A.c[e[0]] = fld.add(A.c[e[0]], c);
        else if (d == 3) B.c[e[0]] = fld.add(B.c[e[0]], c);
        else if (d < 2) throw flecnodal_error("flecnodal_member: tangent frame broken");
    }
    Elem res = formal_resultant(A.c, 2, B.c, 3, FieldOps<F>{&fld});
    return {P, A, B, res, fld.is_zero(res)};
}

// ---------------------------------------------------------------------------
// Incidence budgets from the degree-20 divisor
// ---------------------------------------------------------------------------

// a curve of degree c not contained in supp F_S meets at most 20c lines of S
inline constexpr int kVertexBudget = 20;
inline constexpr int kCurveLineBudgetPerDegree = 20;

struct BudgetReport {
    bool ok = true;
    size_t line_count = 0;
    int max_degree = 0;
    std::vector<std::string> findings;  // witnesses for any violation
};

inline BudgetReport line_budget_audit(const CensusResult& census, const IncidenceGraph& graph) {
    BudgetReport rep;
    rep.line_count = census.lines.size();
    if (rep.line_count > kLineBudget) {
        rep.ok = false;
        rep.findings.push_back("census has " + std::to_string(rep.line_count) +
                               " lines, exceeding the budget of " + std::to_string(kLineBudget));
    }
    for (size_t i = 0; i < graph.degree.size(); ++i) {
        rep.max_degree = std::max(rep.max_degree, graph.degree[i]);
        if (graph.degree[i] > kVertexBudget) {
            rep.ok = false;
            rep.findings.push_back("line " + std::to_string(i) + " meets " +
                                   std::to_string(graph.degree[i]) + " others, exceeding " +
                                   std::to_string(kVertexBudget));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Certified non-membership of a conic
// ---------------------------------------------------------------------------

// degree-2 rational parametrization (s:t) -> (c0(s,t) : ... : c3(s,t))
struct ConicParam {
    const GF* fld;
    std::array<BinaryForm<GF>, 4> coord;
};

// Exact certificate that a conic on S is not a component of supp F_S: the
// divisor has degree 20, so a conic inside its support would carry at most
// 20 * 2 = 40 of its points outside; one non-member among 41 distinct samples
// settles it.  Returns false only after 41 member samples, which conversely
// certifies membership by the same intersection bound.
inline bool conic_nonmembership(const QuarticSurface<GF>& S, const ConicParam& C) {
    const GF& fld = *S.fld;
    if (C.fld != S.fld) throw flecnodal_error("conic_nonmembership: field mismatch");
    for (auto& bf : C.coord)
        if (bf.d != 2 || bf.c.size() != 3)
            throw flecnodal_error("conic_nonmembership: parametrization is not quadratic");
    // containment: f(C(s,t)) must vanish as a binary octic
    std::vector<MultiPoly<GF>> sub;
    for (int i = 0; i < 4; ++i) {
        MultiPoly<GF> ci(&fld, 2);
        for (int j = 0; j <= 2; ++j) {
            if (fld.is_zero(C.coord[i].c[j])) continue;
            ci.add_term(ExpVec{(uint32_t)j, (uint32_t)(2 - j)}, C.coord[i].c[j]);
        }
        sub.push_back(std::move(ci));
    }
    if (!S.f.subst(sub).is_zero())
        throw flecnodal_error("conic_nonmembership: curve is not contained in the surface");
    // nondegeneracy: the image of a genuine conic spans a plane, so the
    // 4 x 3 coefficient matrix has rank 3 (a line or point gives rank <= 2)
    std::vector<std::vector<GF::Elem>> m;
    for (int i = 0; i < 4; ++i) m.push_back({C.coord[i].c[0], C.coord[i].c[1], C.coord[i].c[2]});
    if (mat_rank(fld, m) != 3)
        throw flecnodal_error("conic_nonmembership: degenerate parametrization (not a conic)");

    const int needed = 2 * kCurveLineBudgetPerDegree + 1;  // 41
    uint64_t q = fld.order_u64();
    std::vector<ProjPoint<GF>> seen;
    int members = 0;
    for (uint64_t idx = 0; idx <= q; ++idx) {
        GF::Elem s = idx < q ? fld.elem_at(idx) : fld.one();
        GF::Elem t = idx < q ? fld.one() : fld.zero();
        std::array<GF::Elem, 4> c;
        bool zero = true;
        for (int i = 0; i < 4; ++i) {
            c[i] = C.coord[i].eval(s, t);
            zero = zero && fld.is_zero(c[i]);
        }
        if (zero) continue;  // base point of the parametrization
        ProjPoint<GF> P(&fld, std::move(c));
        bool dup = false;
        for (auto& Q : seen) dup = dup || Q == P;
        if (dup) continue;
        seen.push_back(P);
        if (!flecnodal_member(S, P).member) return true;
        if (++members >= needed) return false;
    }
    throw flecnodal_error("enlarge field: fewer than 41 rational points on the conic");
}

// ---------------------------------------------------------------------------
// Symbolic chart computation of the degree-20 divisor (slow verification path)
// ---------------------------------------------------------------------------

namespace detail {

// remainder of r modulo f, eliminating powers x1^4 and higher; requires the
// x1^4 coefficient of f to be a nonzero constant
template <class F>
MultiPoly<F> reduce_mod_quartic(MultiPoly<F> r, const MultiPoly<F>& f) {
    const F& fld = *f.field();
    ExpVec top(4, 0);
    top[0] = 4;
    auto c = f.coeff(top);
    if (fld.is_zero(c))
        throw flecnodal_error("reduce_mod_quartic: quartic lacks the x1^4 monomial");
    // rule: x1^4 -> x1^4 - f/c, which has x1-degree <= 3
    MultiPoly<F> rest(&fld, 4);
    for (auto& [e, cc] : f.terms()) {
        if (e == top) continue;
        rest.add_term(e, fld.neg(fld.div(cc, c)));
    }
    while (true) {
        // highest x1-degree term with exponent >= 4
        bool found = false;
        ExpVec be;
        typename F::Elem bc = fld.zero();
        for (auto& [e, cc] : r.terms())
            if (e[0] >= 4 && (!found || e[0] > be[0])) {
                found = true;
                be = e;
                bc = cc;
            }
        if (!found) break;
        MultiPoly<F> mono(&fld, 4);
        ExpVec me = be;
        me[0] -= 4;
        mono.add_term(me, bc);
        MultiPoly<F> kill(&fld, 4);
        kill.add_term(be, fld.neg(bc));
        r = r + kill + mono * rest;
    }
    return r;
}

}  // namespace detail

template <class F>
struct FlecnodalChartPoly {
    MultiPoly<F> poly;   // homogeneous of degree 20; cuts supp F_S on the
                         // chart of S where d f / d x1 does not vanish
    int gradient_power;  // exact power of df/dx1 split off the raw resultant
    int collapse_power;  // power of x4 split off modulo the surface
};

// Over the locus f_1 = df/dx1 != 0 the tangent plane at x is spanned by
// u = (-f_2, f_1, 0, 0) and v = (-f_3, 0, f_1, 0); the resultant R of the
// degree-2 and degree-3 graded pieces of f(x + s u + t v) in (s, t) is a
// form of degree 44 in x.  The power f_1^6 divides R exactly.  The residual
// G picks up a spurious factor along x4 = 0, where the frame's direction
// space {w : w_4 = 0} meets the span of x itself, so the parametrized lines
// degenerate; on the surface this contributes x4^6, and the degree-20
// flecnodal form F is recovered by solving the linear system
// G = x4^6 * F + f * Q in the coefficients of F (taken with x1-degree <= 3,
// which pins a canonical representative).
template <class F>
FlecnodalChartPoly<F> flecnodal_chart_polynomial(const QuarticSurface<F>& S) {
    using Elem = typename F::Elem;
    const F& fld = *S.fld;
    std::array<MultiPoly<F>, 4> d = S.gradient();
    auto lift6 = [&](const MultiPoly<F>& g, int sign) {
        MultiPoly<F> r(&fld, 6);
        for (auto& [e, c] : g.terms()) {
            ExpVec ee(6, 0);
            for (int i = 0; i < 4; ++i) ee[i] = e[i];
            r.add_term(ee, sign < 0 ? fld.neg(c) : c);
        }
        return r;
    };
    auto s = MultiPoly<F>::var(&fld, 6, 4);
    auto t = MultiPoly<F>::var(&fld, 6, 5);
    std::array<MultiPoly<F>, 4> u = {lift6(d[1], -1), lift6(d[0], +1), MultiPoly<F>(&fld, 6),
                                     MultiPoly<F>(&fld, 6)};
    std::array<MultiPoly<F>, 4> v = {lift6(d[2], -1), MultiPoly<F>(&fld, 6), lift6(d[0], +1),
                                     MultiPoly<F>(&fld, 6)};
    std::vector<MultiPoly<F>> sub;
    for (int i = 0; i < 4; ++i) {
        ExpVec xi(6, 0);
        xi[i] = 1;
        MultiPoly<F> base(&fld, 6);
        base.add_term(xi, fld.one());
        sub.push_back(base + s * u[i] + t * v[i]);
    }
    auto expanded = S.f.subst(sub);
    MultiPolyOps<F> ops{&fld, 4};
    std::vector<MultiPoly<F>> A(3, ops.zero()), B(4, ops.zero());
    for (auto& [e, c] : expanded.terms()) {
        unsigned ds = e[4], dt = e[5], dd = ds + dt;
        if (dd != 2 && dd != 3) continue;
        ExpVec xe(4);
        for (int i = 0; i < 4; ++i) xe[i] = e[i];
        MultiPoly<F> term(&fld, 4);
        term.add_term(xe, c);
        if (dd == 2) A[ds] = A[ds] + term;
        else B[ds] = B[ds] + term;
    }
    MultiPoly<F> R = formal_resultant(A, 2, B, 3, ops);
    if (R.is_zero()) throw flecnodal_error("flecnodal_chart_polynomial: resultant vanished");

    // split off the exact power of f_1
    MultiPoly<F> G = R;
    int a = 0;
    while (true) {
        try {
            G = G.divexact(d[0]);
            ++a;
        } catch (algebra_error&) {
            break;
        }
    }
    int degG = G.total_degree();
    if (degG < 20)
        throw flecnodal_error("flecnodal_chart_polynomial: unexpected residual degree " +
                              std::to_string(degG));
    int b = degG - 20;

    // solve G = x4^b * F + f * Q for F of degree 20 with x1-degree <= 3
    MultiPoly<F> f1b = ops.one();
    for (int i = 0; i < b; ++i) f1b = f1b * MultiPoly<F>::var(&fld, 4, 3);
    auto rhs = detail::reduce_mod_quartic(G, S.f);
    std::vector<ExpVec> unknowns;
    for (uint32_t e0 = 0; e0 <= 3; ++e0)
        for (uint32_t e1 = 0; e0 + e1 <= 20; ++e1)
            for (uint32_t e2 = 0; e0 + e1 + e2 <= 20; ++e2)
                unknowns.push_back(ExpVec{e0, e1, e2, (uint32_t)(20 - e0 - e1 - e2)});
    std::vector<MultiPoly<F>> cols;
    std::map<ExpVec, int> rowof;
    auto note_rows = [&](const MultiPoly<F>& g) {
        for (auto& [e, c] : g.terms())
            if (!rowof.count(e)) rowof.emplace(e, (int)rowof.size());
    };
    for (auto& e : unknowns) {
        MultiPoly<F> mono(&fld, 4);
        mono.add_term(e, fld.one());
        cols.push_back(detail::reduce_mod_quartic(f1b * mono, S.f));
        note_rows(cols.back());
    }
    note_rows(rhs);
    size_t nrows = rowof.size(), ncols = unknowns.size() + 1;
    std::vector<std::vector<Elem>> M(nrows, std::vector<Elem>(ncols, fld.zero()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (auto& [e, c] : cols[j].terms()) M[rowof[e]][j] = c;
    for (auto& [e, c] : rhs.terms()) M[rowof[e]][ncols - 1] = c;
    row_reduce(fld, M);
    MultiPoly<F> F20(&fld, 4);
    for (size_t r = 0; r < nrows; ++r) {
        size_t piv = ncols;
        for (size_t j = 0; j < ncols; ++j)
            if (!fld.is_zero(M[r][j])) {
                piv = j;
                break;
            }
        if (piv == ncols) continue;
        if (piv == ncols - 1)
            throw flecnodal_error("flecnodal_chart_polynomial: no degree-20 representative");
        if (!fld.is_zero(M[r][ncols - 1])) F20.add_term(unknowns[piv], M[r][ncols - 1]);
    }
    if (F20.is_zero() || F20.total_degree() != 20)
        throw flecnodal_error("flecnodal_chart_polynomial: representative degenerated");
    return {F20, a, b};
}

}  // namespace qlines

#endif
