// Classification of plane cubic curves into Kodaira fiber types.  The
// classifier expects a field large enough that every component and every
// singular point of the cubic is rational; the fibration pipeline guarantees
// this by working over a degree-6 extension of the field of definition of the
// fiber location.  When the field is provably too small the classifier throws
// instead of guessing.

#ifndef QLINES_CUBIC_HPP
#define QLINES_CUBIC_HPP

#include "qlines/binform.hpp"
#include "qlines/census.hpp"
#include "qlines/kodaira.hpp"

#include <array>
#include <optional>
#include <vector>

namespace qlines {

struct PlaneCubicClass {
    Kodaira type;
    // rational linear components, as normalized linear forms a x1 + b x2 + c x3
    std::vector<std::array<GF::Elem, 3>> lines;
    // singular point data: the node/cusp of I1/II, the tangency or a node of
    // I2/III, the triple point of IV; empty for SMOOTH and I3 pairwise nodes
    std::optional<std::array<GF::Elem, 3>> singular_point;
};

namespace detail {

inline std::array<GF::Elem, 3> normalize_form3(const GF& fld, std::array<GF::Elem, 3> v) {
    int lead = -1;
    for (int i = 0; i < 3 && lead < 0; ++i)
        if (!fld.is_zero(v[i])) lead = i;
    if (lead < 0) throw algebra_error("normalize_form3: zero form");
    auto inv = fld.inv(v[lead]);
    for (auto& c : v) c = fld.mul(c, inv);
    return v;
}

// all rational linear factors of a nonzero homogeneous form in 3 variables,
// with multiplicities, by substitution root-finding in the three shapes
// x1 + a x2 + b x3, x2 + c x3, x3
inline std::vector<std::pair<std::array<GF::Elem, 3>, unsigned>> linear_factors3(
    const MultiPoly<GF>& f0) {
    const GF* fld = f0.field();
    std::vector<std::array<GF::Elem, 3>> found;
    auto push = [&](std::array<GF::Elem, 3> v) {
        v = normalize_form3(*fld, std::move(v));
        for (auto& w : found)
            if (fld->eq(w[0], v[0]) && fld->eq(w[1], v[1]) && fld->eq(w[2], v[2])) return;
        found.push_back(v);
    };

    // x1 + a x2 + b x3: substitute x1 = -(a x2 + b x3), unknowns in slots 3, 4
    {
        std::vector<MultiPoly<GF>> sub;
        auto a = MultiPoly<GF>::var(fld, 5, 3), b = MultiPoly<GF>::var(fld, 5, 4);
        sub.push_back(-(a * MultiPoly<GF>::var(fld, 5, 1) + b * MultiPoly<GF>::var(fld, 5, 2)));
        sub.push_back(MultiPoly<GF>::var(fld, 5, 1));
        sub.push_back(MultiPoly<GF>::var(fld, 5, 2));
        MultiPoly<GF> full = f0.subst(sub);
        // group by the (x2, x3) exponents
        std::map<std::pair<uint32_t, uint32_t>, MultiPoly<GF>> eqs;
        for (auto& [e, c] : full.terms()) {
            ExpVec ne = e;
            ne[1] = ne[2] = 0;
            auto& slot = eqs.try_emplace({e[1], e[2]}, MultiPoly<GF>(fld, 5)).first->second;
            slot.add_term(ne, c);
        }
        std::vector<MultiPoly<GF>> sys;
        for (auto& [k, v] : eqs) sys.push_back(v);
        try {
            for (auto& [av, bv] : detail::solve_pair(sys, 3, 4))
                push({fld->one(), av, bv});
        } catch (census_error&) {
            throw algebra_error("linear_factors3: degenerate factor system");
        }
    }
    // x2 + c x3: substitute x2 = -c x3, unknown in slot 3
    {
        std::vector<MultiPoly<GF>> sub;
        auto c = MultiPoly<GF>::var(fld, 4, 3);
        sub.push_back(MultiPoly<GF>::var(fld, 4, 0));
        sub.push_back(-(c * MultiPoly<GF>::var(fld, 4, 2)));
        sub.push_back(MultiPoly<GF>::var(fld, 4, 2));
        MultiPoly<GF> full = f0.subst(sub);
        std::map<std::pair<uint32_t, uint32_t>, MultiPoly<GF>> eqs;
        for (auto& [e, c2] : full.terms()) {
            ExpVec ne = e;
            ne[0] = ne[2] = 0;
            auto& slot = eqs.try_emplace({e[0], e[2]}, MultiPoly<GF>(fld, 4)).first->second;
            slot.add_term(ne, c2);
        }
        std::vector<MultiPoly<GF>> sys;
        for (auto& [k, v] : eqs) sys.push_back(v);
        auto g = detail::gcd_system(sys, 3);
        if (!g) throw algebra_error("linear_factors3: degenerate factor system");
        if (g->deg() >= 1)
            for (auto& r : roots_with_multiplicity_fast(*g)) push({fld->zero(), fld->one(), r.value});
    }
    // x3 alone
    {
        bool divides = true;
        for (auto& [e, c] : f0.terms()) divides = divides && e[2] >= 1;
        if (divides) push({fld->zero(), fld->zero(), fld->one()});
    }

    // multiplicities by division cascade
    std::vector<std::pair<std::array<GF::Elem, 3>, unsigned>> out;
    MultiPoly<GF> rem = f0;
    for (auto& v : found) {
        MultiPoly<GF> lin(fld, 3);
        for (int i = 0; i < 3; ++i)
            lin = lin + MultiPoly<GF>::var(fld, 3, (unsigned)i).scaled(v[i]);
        unsigned mult = 0;
        for (;;) {
            try {
                MultiPoly<GF> q = rem.divexact(lin);
                rem = std::move(q);
                ++mult;
            } catch (algebra_error&) {
                break;
            }
            if (rem.total_degree() < 1) break;
        }
        if (mult == 0) throw algebra_error("linear_factors3: candidate does not divide");
        out.push_back({v, mult});
    }
    return out;
}

// rational singular points of a plane curve: common projective zeros of the
// three partials, found chart by chart
inline std::vector<std::array<GF::Elem, 3>> singular_points3(const MultiPoly<GF>& f) {
    const GF* fld = f.field();
    std::array<MultiPoly<GF>, 3> d = {f.derivative(0), f.derivative(1), f.derivative(2)};
    std::vector<std::array<GF::Elem, 3>> pts;
    auto push = [&](std::array<GF::Elem, 3> v) {
        int lead = -1;
        for (int i = 0; i < 3 && lead < 0; ++i)
            if (!fld->is_zero(v[i])) lead = i;
        if (lead < 0) return;
        auto inv = fld->inv(v[lead]);
        for (auto& c : v) c = fld->mul(c, inv);
        for (auto& w : pts)
            if (fld->eq(w[0], v[0]) && fld->eq(w[1], v[1]) && fld->eq(w[2], v[2])) return;
        pts.push_back(v);
    };
    auto check = [&](const std::array<GF::Elem, 3>& v) {
        for (auto& g : d)
            if (!fld->is_zero(g.eval({v[0], v[1], v[2]}))) return false;
        return true;
    };
    // chart x_lead = 1, earlier coordinates zero
    for (int lead = 2; lead >= 0; --lead) {
        std::vector<MultiPoly<GF>> sys;
        for (auto& g : d) {
            MultiPoly<GF> s = g.eval_var((unsigned)lead, fld->one());
            for (int i = 0; i < lead; ++i) s = s.eval_var((unsigned)i, fld->zero());
            sys.push_back(std::move(s));
        }
        std::vector<unsigned> free;
        for (int i = lead + 1; i < 3; ++i) free.push_back((unsigned)i);
        if (free.empty()) {
            bool allz = true;
            for (auto& s : sys) allz = allz && s.is_zero();
            std::array<GF::Elem, 3> v = {fld->zero(), fld->zero(), fld->zero()};
            v[lead] = fld->one();
            if (allz && check(v)) push(v);
        } else if (free.size() == 1) {
            auto g = detail::gcd_system(sys, free[0]);
            if (!g) throw algebra_error("singular_points3: positive-dimensional singular locus");
            if (g->deg() >= 1)
                for (auto& r : roots_with_multiplicity_fast(*g)) {
                    std::array<GF::Elem, 3> v = {fld->zero(), fld->zero(), fld->zero()};
                    v[lead] = fld->one();
                    v[free[0]] = r.value;
                    if (check(v)) push(v);
                }
        } else {
            try {
                for (auto& [a, b] : detail::solve_pair(sys, free[0], free[1])) {
                    std::array<GF::Elem, 3> v = {fld->zero(), fld->zero(), fld->zero()};
                    v[lead] = fld->one();
                    v[free[0]] = a;
                    v[free[1]] = b;
                    if (check(v)) push(v);
                }
            } catch (census_error&) {
                throw algebra_error("singular_points3: positive-dimensional singular locus");
            }
        }
    }
    return pts;
}

// spanning points of the line {a x1 + b x2 + c x3 = 0}
inline std::array<std::array<GF::Elem, 3>, 2> line_span3(const GF& fld,
                                                         const std::array<GF::Elem, 3>& form) {
    std::vector<std::vector<GF::Elem>> m = {{form[0], form[1], form[2]}};
    auto ker = mat_kernel(fld, m);
    if (ker.size() != 2) throw algebra_error("line_span3: degenerate form");
    return {std::array<GF::Elem, 3>{ker[0][0], ker[0][1], ker[0][2]},
            std::array<GF::Elem, 3>{ker[1][0], ker[1][1], ker[1][2]}};
}

}  // namespace detail

// Classify a nonzero homogeneous plane cubic.  See the header comment for the
// field-size contract; PATHOLOGICAL is reserved for genuinely non-reduced
// curves, which cannot occur as fibers on a smooth quartic.
inline PlaneCubicClass classify_plane_cubic(const MultiPoly<GF>& gamma) {
    const GF* fld = gamma.field();
    if (gamma.is_zero()) throw algebra_error("classify_plane_cubic: zero input");
    if (gamma.nvars() != 3 || !gamma.is_homogeneous() || gamma.total_degree() != 3)
        throw algebra_error("classify_plane_cubic: needs a homogeneous cubic in 3 variables");

    PlaneCubicClass out;
    auto factors = detail::linear_factors3(gamma);
    unsigned total = 0;
    for (auto& [v, m] : factors) {
        total += m;
        for (unsigned i = 0; i < m; ++i) out.lines.push_back(v);
        if (m >= 2) {
            out.type = Kodaira::pathological("repeated line component");
            return out;
        }
    }

    if (factors.size() == 3) {
        std::vector<std::vector<GF::Elem>> m;
        for (auto& [v, mu] : factors) m.push_back({v[0], v[1], v[2]});
        int rank = mat_rank(*fld, m);
        if (rank == 2) {
            // concurrent: the common point spans the kernel of the form matrix
            auto ker = mat_kernel(*fld, m);
            out.singular_point = {ker[0][0], ker[0][1], ker[0][2]};
            out.type = {FiberType::IV, 0, {}};
        } else {
            out.type = {FiberType::I3, 0, {}};
        }
        return out;
    }

    if (factors.size() == 1) {
        MultiPoly<GF> lin(fld, 3);
        for (int i = 0; i < 3; ++i)
            lin = lin + MultiPoly<GF>::var(fld, 3, (unsigned)i).scaled(factors[0].first[i]);
        MultiPoly<GF> conic = gamma.divexact(lin);
        // symmetric matrix of the conic (char != 2)
        auto half = fld->inv(fld->from_int(2));
        auto cf = [&](unsigned i, unsigned j) {
            ExpVec e(3, 0);
            ++e[i];
            ++e[j];
            auto c = conic.coeff(e);
            return i == j ? c : fld->mul(c, half);
        };
        std::vector<std::vector<GF::Elem>> M = {{cf(0, 0), cf(0, 1), cf(0, 2)},
                                                {cf(0, 1), cf(1, 1), cf(1, 2)},
                                                {cf(0, 2), cf(1, 2), cf(2, 2)}};
        int rank = mat_rank(*fld, M);
        if (rank == 1) {
            out.type = Kodaira::pathological("line + double line");
            return out;
        }
        if (rank == 2)
            throw algebra_error("classify_plane_cubic: enlarge field (conic splits over an extension)");
        // irreducible conic; tangency against the line component
        auto span = detail::line_span3(*fld, factors[0].first);
        MultiPoly<GF> restr(fld, 2);
        {
            std::vector<MultiPoly<GF>> sub;
            for (int i = 0; i < 3; ++i)
                sub.push_back(MultiPoly<GF>::var(fld, 2, 0).scaled(span[0][i]) +
                              MultiPoly<GF>::var(fld, 2, 1).scaled(span[1][i]));
            restr = conic.subst(sub);
        }
        // binary quadratic in the line parameters; a double root means tangency
        std::vector<GF::Elem> c(3, fld->zero());
        for (auto& [e, cc] : restr.terms()) c[e[0]] = cc;
        BinaryForm<GF> bq{fld, 2, c};
        if (bq.is_zero()) {
            out.type = Kodaira::pathological("line inside the conic");
            return out;
        }
        auto pat = root_multiplicity_pattern(bq);
        if (pat.size() == 1 && pat[0] == 2) {
            out.type = {FiberType::III, 0, {}};
            // tangency point
            auto rts = p1_roots(bq);
            if (!rts.empty()) {
                auto& r = rts[0];
                std::array<GF::Elem, 3> pt;
                for (int i = 0; i < 3; ++i)
                    pt[i] = r.at_infinity ? span[0][i]
                                          : fld->add(fld->mul(r.value, span[0][i]), span[1][i]);
                out.singular_point = pt;
            }
        } else {
            out.type = {FiberType::I2, 0, {}};
        }
        return out;
    }

    if (factors.size() == 2)
        throw algebra_error("classify_plane_cubic: inconsistent factor count");

    // no rational linear factors: irreducible over this field
    auto sing = detail::singular_points3(gamma);
    if (sing.empty()) {
        out.type = Kodaira::smooth();
        return out;
    }
    if (sing.size() > 1)
        throw algebra_error("classify_plane_cubic: enlarge field (multiple singular points, unsplit components)");
    out.singular_point = sing[0];
    // move the singular point to (0:0:1) and read the tangent cone
    const auto& P = sing[0];
    std::vector<std::vector<GF::Elem>> cols;  // columns: two complements, then P
    {
        std::vector<std::vector<GF::Elem>> rows = {{P[0], P[1], P[2]}};
        int lead = 0;
        while (fld->is_zero(P[lead])) ++lead;
        std::vector<std::vector<GF::Elem>> T(3, std::vector<GF::Elem>(3, fld->zero()));
        int col = 0;
        for (int i = 0; i < 3; ++i) {
            if (i == lead) continue;
            T[i][col++] = fld->one();
        }
        for (int i = 0; i < 3; ++i) T[i][2] = P[i];
        cols = T;
    }
    MultiPoly<GF> moved = compose_linear(gamma, cols);
    auto layers = moved.coefficients_in(2);  // powers of x3 (the P-direction)
    // layers by x3-power: deg-3 cubic in (x1,x2) at power 0, etc.
    if (layers.size() > 3 && !layers[3].is_zero())
        throw algebra_error("classify_plane_cubic: singular point not on the curve");
    if (layers.size() > 2 && !layers[2].is_zero())
        throw algebra_error("classify_plane_cubic: point is not singular");
    MultiPoly<GF> q2 = layers.size() > 1 ? layers[1] : MultiPoly<GF>(fld, 3);
    if (q2.is_zero())
        throw algebra_error("classify_plane_cubic: enlarge field (triple point with unsplit lines)");
    // tangent cone: binary quadratic in (x1, x2)
    std::vector<GF::Elem> c(3, fld->zero());
    for (auto& [e, cc] : q2.terms()) c[e[0]] = cc;
    auto pat = root_multiplicity_pattern(BinaryForm<GF>{fld, 2, c});
    out.type = (pat.size() == 1 && pat[0] == 2) ? Kodaira{FiberType::II, 0, {}}
                                                : Kodaira{FiberType::I1, 0, {}};
    return out;
}

}  // namespace qlines

#endif
