// Normal form for quartics carrying a line whose 3:1 cover ramifies totally
// over two points: coordinates can then be chosen so that
//
//   f = x3 x1^3 + x4 x2^3 + x1 x2 q(x3, x4) + g(x3, x4)
//
// with deg q = 2, deg g = 4.  z_normal_form computes the change of
// coordinates exactly and recovers (q, g), or reports that the surface-line
// pair does not belong to the family.

#ifndef QLINES_ZFAMILY_HPP
#define QLINES_ZFAMILY_HPP

#include "qlines/fibration.hpp"

namespace qlines {

struct ZNormalForm {
    BinaryForm<GF> q;  // binary quadratic in (x3, x4); c[i] multiplies x3^i x4^(2-i)
    BinaryForm<GF> g;  // binary quartic in (x3, x4)
    std::vector<std::vector<GF::Elem>> transform;  // normal form f(x) = original(T x)
};

// the member of the family with the given q and g
inline MultiPoly<GF> z_family_quartic(const GF* fld, const BinaryForm<GF>& q,
                                      const BinaryForm<GF>& g) {
    if (q.d != 2 || g.d != 4) throw algebra_error("z_family_quartic: need deg q = 2, deg g = 4");
    MultiPoly<GF> f(fld, 4);
    f.add_term(ExpVec{3, 0, 1, 0}, fld->one());
    f.add_term(ExpVec{0, 3, 0, 1}, fld->one());
    for (int i = 0; i <= 2; ++i) f.add_term(ExpVec{1, 1, (uint32_t)i, (uint32_t)(2 - i)}, q.c[(size_t)i]);
    for (int i = 0; i <= 4; ++i) f.add_term(ExpVec{0, 0, (uint32_t)i, (uint32_t)(4 - i)}, g.c[(size_t)i]);
    return f;
}

namespace detail {

// apply a coordinate change given column-wise and fold it into the pencil
inline void compose_pencil(NormalizedPencil& np, const std::vector<std::vector<GF::Elem>>& A) {
    const GF* fld = np.fld;
    np.f = compose_linear(np.f, A);
    std::vector<std::vector<GF::Elem>> T(4, std::vector<GF::Elem>(4, fld->zero()));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int l = 0; l < 4; ++l)
                T[i][j] = fld->add(T[i][j], fld->mul(np.transform[i][l], A[l][j]));
    np.transform = T;
    np.alpha = extract_alphas(np.f);
}

inline std::vector<std::vector<GF::Elem>> identity4(const GF* fld) {
    std::vector<std::vector<GF::Elem>> A(4, std::vector<GF::Elem>(4, fld->zero()));
    for (int i = 0; i < 4; ++i) A[i][i] = fld->one();
    return A;
}

// the triple root of a binary cubic, as a projective point (x1 : x2)
inline std::array<GF::Elem, 2> triple_root_point(const GF& fld, const BinaryForm<GF>& b) {
    auto rts = p1_roots(b);
    if (rts.size() != 1 || rts[0].multiplicity != 3)
        throw fibration_error("z_normal_form: cover section is not a perfect cube");
    if (rts[0].at_infinity) return {fld.one(), fld.zero()};
    return {rts[0].value, fld.one()};
}

}  // namespace detail

inline ZNormalForm z_normal_form(const QuarticSurface<GF>& S, const ProjLine<GF>& L) {
    const GF* fld = S.fld;
    NormalizedPencil np = normalize_pencil(S, L);
    RamProfile prof = ramification_profile(np);
    if (prof.name != "2^2")
        throw fibration_error("not in the Z family: ramification profile is " + prof.name);
    std::vector<RamPoint> tot;
    for (auto& pt : prof.points)
        if (pt.index == 2) tot.push_back(pt);
    if (tot.size() == 1 && tot[0].orbit == 2)
        throw fibration_error("z_normal_form: enlarge field (conjugate branch points)");
    if (tot.size() != 2) throw fibration_error("z_normal_form: unexpected branch structure");

    // Moebius transformation in (x3, x4) taking the branch parameters to 0
    // and infinity.  b is encoded as the plane parameter lambda with x4 =
    // lambda x3; the new coordinates are x3' = x4 - b2 x3, x4' = x4 - b1 x3.
    auto lam_of = [&](const RamPoint& pt) -> std::optional<GF::Elem> {
        if (pt.at_infinity) return std::nullopt;
        return fld->neg(pt.minpoly.coeff(0));  // minpoly is monic linear
    };
    auto b1 = lam_of(tot[0]), b2 = lam_of(tot[1]);
    {
        // M acts on (x3, x4); we substitute its inverse
        GF::Elem m00, m01, m10, m11;
        if (b1 && b2) {
            m00 = fld->neg(*b2); m01 = fld->one();
            m10 = fld->neg(*b1); m11 = fld->one();
        } else if (!b2) {  // second branch point already at infinity
            m00 = fld->one();  m01 = fld->zero();
            m10 = fld->neg(*b1); m11 = fld->one();
        } else {  // first branch point at infinity
            m00 = fld->neg(*b2); m01 = fld->one();
            m10 = fld->one();  m11 = fld->zero();
        }
        GF::Elem det = fld->sub(fld->mul(m00, m11), fld->mul(m01, m10));
        GF::Elem dinv = fld->inv(det);
        auto A = detail::identity4(fld);
        A[2][2] = fld->mul(m11, dinv);
        A[2][3] = fld->neg(fld->mul(m01, dinv));
        A[3][2] = fld->neg(fld->mul(m10, dinv));
        A[3][3] = fld->mul(m00, dinv);
        detail::compose_pencil(np, A);
    }

    // align the total-ramification directions with x1 and x2: after the
    // Moebius step alpha[1][0] and alpha[0][1] are perfect cubes
    {
        auto P = detail::triple_root_point(*fld, np.a(1, 0));   // root of the lambda=0 section
        auto Pp = detail::triple_root_point(*fld, np.a(0, 1));  // root of the lambda=inf section
        // B(1,0) = Pp, B(0,1) = P; invertibility fails iff the roots coincide
        auto A = detail::identity4(fld);
        A[0][0] = Pp[0]; A[1][0] = Pp[1];
        A[0][1] = P[0];  A[1][1] = P[1];
        std::vector<std::vector<GF::Elem>> top = {{A[0][0], A[0][1]}, {A[1][0], A[1][1]}};
        if (mat_rank(*fld, top) != 2)
            throw fibration_error("z_normal_form: coincident ramification directions");
        detail::compose_pencil(np, A);
    }

    // scale x3, x4 so the leading coefficients become 1
    {
        GF::Elem s = np.a(1, 0).c[3], sp = np.a(0, 1).c[0];
        if (fld->is_zero(s) || fld->is_zero(sp))
            throw fibration_error("z_normal_form: lost the cube normalization");
        auto A = detail::identity4(fld);
        A[2][2] = fld->inv(s);
        A[3][3] = fld->inv(sp);
        detail::compose_pencil(np, A);
    }

    // absorb the x1^2 and x2^2 terms with x1 -> x1 + u(x3,x4), x2 -> x2 + v
    {
        GF::Elem third = fld->inv(fld->from_int(3));
        // coefficient of x1^2 x2^0 in alpha[i][j], i+j = 2, sits at c[2];
        // coefficient of x2^2 at c[0]
        GF::Elem u3 = fld->neg(fld->mul(np.a(2, 0).c[2], third));
        GF::Elem u4 = fld->neg(fld->mul(np.a(1, 1).c[2], third));
        GF::Elem v3 = fld->neg(fld->mul(np.a(1, 1).c[0], third));
        GF::Elem v4 = fld->neg(fld->mul(np.a(0, 2).c[0], third));
        auto A = detail::identity4(fld);
        A[0][2] = u3; A[0][3] = u4;
        A[1][2] = v3; A[1][3] = v4;
        detail::compose_pencil(np, A);
    }

    // every remaining monomial must belong to the normal form
    ZNormalForm out;
    out.q = BinaryForm<GF>{fld, 2, std::vector<GF::Elem>(3, fld->zero())};
    out.g = BinaryForm<GF>{fld, 4, std::vector<GF::Elem>(5, fld->zero())};
    out.transform = np.transform;
    for (auto& [e, c] : np.f.terms()) {
        if (e[0] == 3 && e[1] == 0 && e[2] == 1 && e[3] == 0) continue;
        if (e[0] == 0 && e[1] == 3 && e[2] == 0 && e[3] == 1) continue;
        if (e[0] == 1 && e[1] == 1 && e[2] + e[3] == 2) {
            out.q.c[e[2]] = c;
            continue;
        }
        if (e[0] == 0 && e[1] == 0 && e[2] + e[3] == 4) {
            out.g.c[e[2]] = c;
            continue;
        }
        throw fibration_error("not in the Z family: residual monomial survives normalization");
    }
    return out;
}

}  // namespace qlines

#endif
