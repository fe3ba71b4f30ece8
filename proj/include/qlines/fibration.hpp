// Genus-1 fibration attached to a line on a smooth quartic: the pencil of
// planes through the line, its residual plane cubics, the Kodaira types of the
// singular members, the ramification of the induced 3:1 cover of the line, and
// the first/second-kind dichotomy via the Segre resultant r(lambda).
//
// Completeness of the singular-fiber scan is certified arithmetically: the
// Euler numbers must add up to 24 (the Euler number of a K3 surface), so a
// missed fiber is impossible to silence.

#ifndef QLINES_FIBRATION_HPP
#define QLINES_FIBRATION_HPP

#include "qlines/cubic.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace qlines {

struct fibration_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Pencil normalization: move the line to {x3 = x4 = 0}
// ---------------------------------------------------------------------------

// After normalization f = sum_{i+j>=1} alpha[i][j](x1,x2) x3^i x4^j with
// alpha[i][j] a binary form of degree 4-i-j.  The plane of the pencil at
// parameter lambda is {x4 = lambda x3}; lambda = infinity is {x3 = 0}.
// The coordinates are additionally arranged so that the x1^3-coefficient of
// the intersection cubic g_lambda = alpha[1][0] + lambda alpha[0][1] is not
// identically zero, which the resultant computations below rely on.
struct NormalizedPencil {
    const GF* fld = nullptr;
    MultiPoly<GF> f;  // the quartic in the normalized coordinates
    std::vector<std::vector<GF::Elem>> transform;  // f(x) = original(T x)
    std::vector<std::vector<BinaryForm<GF>>> alpha;

    const BinaryForm<GF>& a(int i, int j) const { return alpha[(size_t)i][(size_t)j]; }
};

namespace detail {

inline std::vector<std::vector<BinaryForm<GF>>> extract_alphas(const MultiPoly<GF>& f) {
    const GF* fld = f.field();
    std::vector<std::vector<BinaryForm<GF>>> al(5);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j)
            al[(size_t)i].push_back(BinaryForm<GF>{fld, 4 - i - j,
                                    std::vector<GF::Elem>((size_t)(5 - i - j), fld->zero())});
    for (auto& [e, c] : f.terms()) al[e[2]][e[3]].c[e[0]] = c;
    return al;
}

inline bool unipoly_equal(const UniPoly<GF>& a, const UniPoly<GF>& b) {
    if (a.deg() != b.deg()) return false;
    const GF* fld = a.field() ? a.field() : b.field();
    if (!fld) return true;
    for (int i = 0; i <= a.deg(); ++i)
        if (!fld->eq(a.coeff(i), b.coeff(i))) return false;
    return true;
}

}  // namespace detail

inline NormalizedPencil normalize_pencil(const QuarticSurface<GF>& S, const ProjLine<GF>& L) {
    const GF* fld = S.fld;
    if (!line_in_surface(S, L)) throw fibration_error("line is not contained in the surface");

    // columns of T: the two spanning points, then standard basis vectors
    std::vector<std::vector<GF::Elem>> T(4, std::vector<GF::Elem>(4, fld->zero()));
    for (int i = 0; i < 4; ++i) {
        T[i][0] = L.p.x[i];
        T[i][1] = L.q.x[i];
    }
    bool ok = false;
    for (int j1 = 0; j1 < 4 && !ok; ++j1)
        for (int j2 = j1 + 1; j2 < 4 && !ok; ++j2) {
            for (int i = 0; i < 4; ++i) {
                T[i][2] = i == j1 ? fld->one() : fld->zero();
                T[i][3] = i == j2 ? fld->one() : fld->zero();
            }
            ok = mat_rank(*fld, T) == 4;
        }
    if (!ok) throw fibration_error("normalize_pencil: could not complete a basis");

    NormalizedPencil np;
    np.fld = fld;
    np.transform = T;
    np.f = compose_linear(S.f, T);
    for (auto& [e, c] : np.f.terms())
        if (e[2] + e[3] == 0) throw fibration_error("normalize_pencil: line containment lost");
    np.alpha = detail::extract_alphas(np.f);

    // make the x1^3-coefficient of the lambda-pencil of cubics nonzero
    if (fld->is_zero(np.a(1, 0).c[3]) && fld->is_zero(np.a(0, 1).c[3])) {
        if (np.a(1, 0).is_zero() && np.a(0, 1).is_zero())
            throw fibration_error("surface is singular along the line");
        bool shifted = false;
        for (uint64_t idx = 0; idx < 8 && !shifted; ++idx) {
            GF::Elem t = fld->elem_at(idx);
            // value of alpha at the point (1 : t)
            auto at1t = [&](const BinaryForm<GF>& b) {
                GF::Elem acc = fld->zero();
                for (int i = b.d; i >= 0; --i) acc = fld->add(fld->mul(acc, t), b.c[(size_t)i]);
                return acc;  // sum c[i] t^(d-i), Horner from the x-end
            };
            if (fld->is_zero(at1t(np.a(1, 0))) && fld->is_zero(at1t(np.a(0, 1)))) continue;
            std::vector<std::vector<GF::Elem>> B(4, std::vector<GF::Elem>(4, fld->zero()));
            for (int i = 0; i < 4; ++i) B[i][i] = fld->one();
            B[1][0] = t;  // x2 -> t x1 + x2
            np.f = compose_linear(np.f, B);
            // transform = T * B
            std::vector<std::vector<GF::Elem>> TB(4, std::vector<GF::Elem>(4, fld->zero()));
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    for (int l = 0; l < 4; ++l)
                        TB[i][j] = fld->add(TB[i][j], fld->mul(np.transform[i][l], B[l][j]));
            np.transform = TB;
            np.alpha = detail::extract_alphas(np.f);
            shifted = true;
        }
        if (!shifted) throw fibration_error("normalize_pencil: could not avoid the base point");
    }
    return np;
}

// ---------------------------------------------------------------------------
// Singular members of the pencil
// ---------------------------------------------------------------------------

struct FiberRecord {
    bool at_infinity = false;
    UniPoly<GF> minpoly;  // monic irreducible over the base field; empty at infinity
    unsigned orbit = 1;   // number of geometric fibers in the Galois orbit
    Kodaira type;
    int ram_index = 0;    // 0 unramified; 1 simple (2+1); 2 total (3)
};

namespace detail {

// residual cubic of the pencil as a polynomial in (x1, x2, x3, lambda)
inline MultiPoly<GF> pencil_cubic(const NormalizedPencil& np, bool flip) {
    MultiPoly<GF> g(np.fld, 4);
    for (auto& [e, c] : np.f.terms()) {
        ExpVec ne(4, 0);
        ne[0] = e[0];
        ne[1] = e[1];
        ne[2] = e[2] + e[3] - 1;
        ne[3] = flip ? e[2] : e[3];
        g.add_term(ne, c);
    }
    return g;
}

// the fiber cubic at a concrete lambda in an extension field
inline MultiPoly<GF> fiber_cubic(const NormalizedPencil& np, const GF& E, const Embedding& emb,
                                 const GF::Elem& lam, bool flip) {
    MultiPoly<GF> g(&E, 3);
    for (auto& [e, c] : np.f.terms()) {
        unsigned j = flip ? e[2] : e[3];
        GF::Elem v = emb.map(c);
        for (unsigned t = 0; t < j; ++t) v = E.mul(v, lam);
        ExpVec ne(3, 0);
        ne[0] = e[0];
        ne[1] = e[1];
        ne[2] = e[2] + e[3] - 1;
        g.add_term(ne, v);
    }
    return g;
}

// one elimination step: polynomials whose common zero set contains the
// projection of the common zero set of the input along `var`
inline std::vector<MultiPoly<GF>> elim_var(const std::vector<MultiPoly<GF>>& polys, unsigned var) {
    std::vector<MultiPoly<GF>> dep, out;
    for (auto& p : polys) {
        if (p.is_zero()) continue;
        (p.degree_in(var) > 0 ? dep : out).push_back(p);
    }
    // keep the cheapest few; any subset still yields a sound superset
    std::sort(dep.begin(), dep.end(), [](const MultiPoly<GF>& a, const MultiPoly<GF>& b) {
        return a.total_degree() < b.total_degree();
    });
    if (dep.size() > 4) dep.resize(4);
    for (size_t i = 0; i < dep.size(); ++i)
        for (size_t j = i + 1; j < dep.size(); ++j) out.push_back(resultant_in(dep[i], dep[j], var));
    return out;
}

}  // namespace detail

// Monic irreducible polynomials over the base field whose roots include every
// finite lambda with a singular fiber.  Spurious factors are allowed; the
// caller discards them by classifying the fiber.
inline std::vector<UniPoly<GF>> singular_lambda_candidates(const NormalizedPencil& np) {
    const GF* fld = np.fld;
    MultiPoly<GF> G = detail::pencil_cubic(np, false);
    std::array<MultiPoly<GF>, 3> d = {G.derivative(0), G.derivative(1), G.derivative(2)};

    std::vector<UniPoly<GF>> out;
    auto add_factors = [&](const UniPoly<GF>& g) {
        if (g.deg() < 1) return;
        for (auto& fa : factorize(g)) {
            bool seen = false;
            for (auto& m : out) seen = seen || detail::unipoly_equal(m, fa.poly);
            if (!seen) out.push_back(fa.poly);
        }
    };

    // charts of P^2 by the leading nonzero coordinate of the singular point
    for (int lead = 0; lead < 3; ++lead) {
        std::vector<MultiPoly<GF>> eqs;
        for (auto& g : d) {
            MultiPoly<GF> s = g.eval_var((unsigned)lead, fld->one());
            for (int i = 0; i < lead; ++i) s = s.eval_var((unsigned)i, fld->zero());
            eqs.push_back(std::move(s));
        }
        std::vector<unsigned> free;
        for (int i = lead + 1; i < 3; ++i) free.push_back((unsigned)i);

        std::optional<UniPoly<GF>> acc;
        auto fold = [&](const std::vector<MultiPoly<GF>>& lam_polys) {
            for (auto& p : lam_polys) {
                if (p.is_zero()) continue;
                UniPoly<GF> u = p.to_unipoly(3);
                acc = acc ? gcd(*acc, u) : u.monic();
            }
        };
        if (free.empty()) {
            fold(eqs);
        } else if (free.size() == 1) {
            fold(detail::elim_var(eqs, free[0]));
        } else {
            fold(detail::elim_var(detail::elim_var(eqs, free[0]), free[1]));
            fold(detail::elim_var(detail::elim_var(eqs, free[1]), free[0]));
        }
        if (!acc)
            throw fibration_error("singular_lambda_candidates: elimination degenerated");
        add_factors(*acc);
    }
    return out;
}

namespace detail {

// shared classification fields GF(p, K), cached per extension degree
struct FieldCache {
    uint64_t p;
    std::map<unsigned, std::shared_ptr<GF>> fields;
    const GF& get(unsigned K) {
        auto it = fields.find(K);
        if (it == fields.end())
            it = fields.emplace(K, std::make_shared<GF>(p, K)).first;
        return *it->second;
    }
};

}  // namespace detail

// All singular fibers of the pencil, as Galois orbits over the base field.
// Each orbit is classified over an extension of degree 6 * deg(minpoly),
// which is large enough to split every component and singular point.
inline std::vector<FiberRecord> singular_fibers(const NormalizedPencil& np) {
    const GF* fld = np.fld;
    detail::FieldCache cache{fld->p(), {}};
    std::vector<FiberRecord> out;

    for (auto& m : singular_lambda_candidates(np)) {
        unsigned dg = (unsigned)m.deg();
        if (dg * fld->k() > 24) continue;  // a real orbit satisfies orbit * euler <= 24
        const GF& E = cache.get(6 * dg * fld->k());
        Embedding emb = make_embedding(*fld, E);
        auto rts = roots(map_poly(emb, m));
        if (rts.empty()) throw fibration_error("singular_fibers: minpoly failed to split");
        GF::Elem lam = rts[0];
        for (auto& r : rts)
            if (E.less(r, lam)) lam = r;
        auto cls = classify_plane_cubic(detail::fiber_cubic(np, E, emb, lam, false));
        if (cls.type.t == FiberType::Smooth) continue;
        if (cls.type.t == FiberType::Pathological)
            throw fibration_error("singular_fibers: non-reduced fiber: " + cls.type.reason);
        out.push_back({false, m, dg, cls.type, 0});
    }

    // the fiber at lambda = infinity
    {
        const GF& E = cache.get(6 * fld->k());
        Embedding emb = make_embedding(*fld, E);
        auto cls = classify_plane_cubic(detail::fiber_cubic(np, E, emb, E.zero(), true));
        if (cls.type.t == FiberType::Pathological)
            throw fibration_error("singular_fibers: non-reduced fiber: " + cls.type.reason);
        if (cls.type.t != FiberType::Smooth)
            out.push_back({true, UniPoly<GF>(fld), 1, cls.type, 0});
    }
    return out;
}

// ---------------------------------------------------------------------------
// First vs second kind: the Segre resultant r(lambda)
// ---------------------------------------------------------------------------

struct LineKindResult {
    bool second;
    UniPoly<GF> r;  // identically zero exactly for second-kind lines
};

// r(lambda) = Res_{x1}(g_lambda(x1,1), h_lambda(x1,1)) where g is the cubic
// cut out on the line and h the bordered determinant carrying the inflection
// condition.  The line is of the second kind iff r vanishes identically; for
// first-kind lines deg r <= 18.
inline LineKindResult line_kind(const NormalizedPencil& np) {
    const GF* fld = np.fld;
    // build g, u, w in (x1, x2, lambda)
    auto form = [&](std::vector<const BinaryForm<GF>*> bs) {
        MultiPoly<GF> r(fld, 3);
        for (size_t j = 0; j < bs.size(); ++j)
            for (size_t i = 0; i < bs[j]->c.size(); ++i) {
                ExpVec e(3, 0);
                e[0] = (uint32_t)i;
                e[1] = (uint32_t)(bs[j]->c.size() - 1 - i);
                e[2] = (uint32_t)j;
                if (!fld->is_zero(bs[j]->c[i])) r.add_term(e, bs[j]->c[i]);
            }
        return r;
    };
    MultiPoly<GF> g = form({&np.a(1, 0), &np.a(0, 1)});
    MultiPoly<GF> u = form({&np.a(2, 0), &np.a(1, 1), &np.a(0, 2)});
    // The corner entry of the bordered determinant is d^2 Gamma / d x3^2
    // restricted to the line, which picks up a factor 2 from the x3^2 layer.
    // Without it, triple roots of r at triangle fibers are lost.
    MultiPoly<GF> w = form({&np.a(3, 0), &np.a(2, 1), &np.a(1, 2), &np.a(0, 3)})
                          .scaled(fld->from_int(2));

    MultiPoly<GF> g11 = g.derivative(0).derivative(0);
    MultiPoly<GF> g12 = g.derivative(0).derivative(1);
    MultiPoly<GF> g22 = g.derivative(1).derivative(1);
    MultiPoly<GF> u1 = u.derivative(0);
    MultiPoly<GF> u2 = u.derivative(1);
    MultiPoly<GF> h = g11 * (g22 * w - u2 * u2) - g12 * (g12 * w - u2 * u1) +
                      u1 * (g12 * u2 - g22 * u1);

    auto coeffs_x1 = [&](const MultiPoly<GF>& q) {
        MultiPoly<GF> qd = q.eval_var(1, fld->one());
        std::vector<UniPoly<GF>> c(4, UniPoly<GF>(fld));
        auto layers = qd.coefficients_in(0);
        for (size_t i = 0; i < layers.size() && i < 4; ++i) c[i] = layers[i].to_unipoly(2);
        return c;
    };
    UniPolyOps<GF> ops{fld};
    UniPoly<GF> r = formal_resultant(coeffs_x1(g), 3, coeffs_x1(h), 3, ops);
    return {r.is_zero(), r};
}

// ---------------------------------------------------------------------------
// Ramification of the 3:1 cover of the line
// ---------------------------------------------------------------------------

struct RamPoint {
    bool at_infinity = false;
    UniPoly<GF> minpoly;  // monic irreducible; empty at infinity
    unsigned orbit = 1;
    int index = 0;  // 1: the fiber cubic on the line degenerates to 2+1; 2: to 3
};

struct RamProfile {
    std::vector<RamPoint> points;
    std::string name;  // "1^4", "2.1^2" or "2^2"
};

inline RamProfile ramification_profile(const NormalizedPencil& np) {
    const GF* fld = np.fld;
    UniPolyOps<GF> ops{fld};
    auto lampoly = [&](const GF::Elem& c0, const GF::Elem& c1) {
        std::vector<GF::Elem> c = {c0, c1};
        return UniPoly<GF>(fld, std::move(c));
    };
    std::vector<UniPoly<GF>> gc;
    for (int i = 0; i <= 3; ++i) gc.push_back(lampoly(np.a(1, 0).c[(size_t)i], np.a(0, 1).c[(size_t)i]));
    UniPoly<GF> D = formal_discriminant(gc, 3, ops);  // degree <= 4 in lambda
    if (D.is_zero()) throw fibration_error("ramification_profile: discriminant vanishes identically");

    RamProfile prof;
    detail::FieldCache cache{fld->p(), {}};
    auto branch_index = [&](const BinaryForm<GF>& cubic) {
        auto pat = root_multiplicity_pattern(cubic);
        unsigned mx = 0;
        for (unsigned m : pat) mx = std::max(mx, m);
        if (mx == 2) return 1;
        if (mx == 3) return 2;
        return 0;  // squarefree: not actually a branch point
    };

    if (D.deg() < 4) {
        // branch point at lambda = infinity; the cover degenerates like alpha[0][1]
        int idx = branch_index(np.a(0, 1));
        if (idx == 0)
            throw fibration_error("ramification_profile: discriminant degree drop without branching");
        prof.points.push_back({true, UniPoly<GF>(fld), 1, idx});
    }
    for (auto& fa : factorize(D)) {
        unsigned dg = (unsigned)fa.poly.deg();
        const GF& E = cache.get(dg * fld->k());
        Embedding emb = make_embedding(*fld, E);
        auto rts = roots(map_poly(emb, fa.poly));
        if (rts.empty()) throw fibration_error("ramification_profile: branch minpoly failed to split");
        GF::Elem lam = rts[0];
        for (auto& r : rts)
            if (E.less(r, lam)) lam = r;
        std::vector<GF::Elem> c;
        for (int i = 0; i <= 3; ++i)
            c.push_back(E.add(emb.map(np.a(1, 0).c[(size_t)i]),
                              E.mul(lam, emb.map(np.a(0, 1).c[(size_t)i]))));
        int idx = branch_index(BinaryForm<GF>{&E, 3, c});
        if (idx == 0)
            throw fibration_error("ramification_profile: discriminant root without branching");
        prof.points.push_back({false, fa.poly, dg, idx});
    }

    unsigned total = 0, n2 = 0;
    for (auto& pt : prof.points) {
        total += pt.orbit * (unsigned)pt.index;
        if (pt.index == 2) n2 += pt.orbit;
    }
    if (total != 4)
        throw fibration_error("ramification_profile: Riemann-Hurwitz count is not 4");
    prof.name = n2 == 0 ? "1^4" : (n2 == 1 ? "2.1^2" : "2^2");
    return prof;
}

// mark each singular fiber with the ramification behaviour above it
inline void annotate_ramification(std::vector<FiberRecord>& fibers, const RamProfile& prof) {
    for (auto& f : fibers)
        for (auto& pt : prof.points) {
            if (f.at_infinity != pt.at_infinity) continue;
            if (!f.at_infinity && !detail::unipoly_equal(f.minpoly, pt.minpoly)) continue;
            f.ram_index = pt.index;
        }
}

// ---------------------------------------------------------------------------
// Audits and the assembled report
// ---------------------------------------------------------------------------

struct EulerAudit {
    int total = 0;            // must be 24 for a complete scan on a K3
    int reducible_orbits = 0; // geometric count of reducible fibers
    int line_count = 0;       // lines of the surface meeting the base line
};

inline EulerAudit euler_audit(const std::vector<FiberRecord>& fibers) {
    EulerAudit a;
    for (auto& f : fibers) {
        a.total += (int)f.orbit * euler_number(f.type);
        if (is_reducible_fiber(f.type)) a.reducible_orbits += (int)f.orbit;
        a.line_count += (int)f.orbit * line_component_count(f.type);
    }
    return a;
}

struct FibrationReport {
    NormalizedPencil np;
    std::vector<FiberRecord> fibers;
    LineKindResult kind;
    RamProfile profile;
    int N = 0;            // lines of the surface meeting the base line
    int euler_total = 0;
    bool pairing_ok = false;  // #I3 == #I1 + 2 #I2 (second kind only)
    bool gr_ok = false;       // N lies in the table value G_R (second kind only)
};

// admissible line-counts per ramification profile for second-kind lines
inline bool n_in_gr(const std::string& profile_name, int N) {
    if (profile_name == "1^4") return N == 12;
    if (profile_name == "2.1^2") return N == 15 || N == 16;
    if (profile_name == "2^2") return N == 18 || N == 19 || N == 20;
    return false;
}

inline bool semistable_pairing_holds(const std::vector<FiberRecord>& fibers) {
    int n1 = 0, n2 = 0, n3 = 0;
    for (auto& f : fibers) {
        if (f.type.t == FiberType::I1) n1 += (int)f.orbit;
        if (f.type.t == FiberType::I2) n2 += (int)f.orbit;
        if (f.type.t == FiberType::I3) n3 += (int)f.orbit;
    }
    return n3 == n1 + 2 * n2;
}

// second-kind lines: singular fibers are constrained by the ramification
// above them (unramified: I1/I3/IV; simple: II; total: I1/I2/IV)
inline bool second_kind_fiber_constraints_hold(const std::vector<FiberRecord>& fibers) {
    for (auto& f : fibers) {
        switch (f.ram_index) {
            case 0:
                if (!(f.type.t == FiberType::I1 || f.type.t == FiberType::I3 ||
                      f.type.t == FiberType::IV))
                    return false;
                break;
            case 1:
                if (f.type.t != FiberType::II) return false;
                break;
            case 2:
                if (!(f.type.t == FiberType::I1 || f.type.t == FiberType::I2 ||
                      f.type.t == FiberType::IV))
                    return false;
                break;
            default:
                return false;
        }
    }
    return true;
}

inline FibrationReport analyze_line(const QuarticSurface<GF>& S, const ProjLine<GF>& L) {
    FibrationReport rep;
    rep.np = normalize_pencil(S, L);
    rep.fibers = singular_fibers(rep.np);
    rep.kind = line_kind(rep.np);
    rep.profile = ramification_profile(rep.np);
    annotate_ramification(rep.fibers, rep.profile);
    EulerAudit audit = euler_audit(rep.fibers);
    rep.euler_total = audit.total;
    rep.N = audit.line_count;
    if (audit.total != 24)
        throw fibration_error("analyze_line: Euler numbers sum to " + std::to_string(audit.total) +
                              ", fiber scan incomplete or surface not a smooth K3");
    if (!rep.kind.second && rep.kind.r.deg() > 18)
        throw fibration_error("analyze_line: Segre resultant degree exceeds 18");
    if (rep.kind.second) {
        rep.pairing_ok = semistable_pairing_holds(rep.fibers);
        rep.gr_ok = n_in_gr(rep.profile.name, rep.N);
    }
    return rep;
}

}  // namespace qlines

#endif
