// Line enumeration on quartic surfaces over finite fields.
//
// Two independent enumerators share the chart decomposition of G(2,4) into
// six row-echelon cells (which partition the Grassmannian, so no cross-chart
// duplicates): a brute-force scan over all q^dim cell points, and an
// elimination solver that scans only the outermost unknown and finds the rest
// by root-finding and resultants.  Every elimination candidate is validated
// with line_in_surface, so spurious resultant roots are harmless.

#ifndef QLINES_CENSUS_HPP
#define QLINES_CENSUS_HPP

#include "qlines/surface.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <vector>

namespace qlines {

struct census_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Grassmannian charts
// ---------------------------------------------------------------------------

struct Chart {
    int id;
    int piv1, piv2;               // pivot columns of the 2x4 echelon matrix
    std::vector<int> row1_free;   // free columns of row 1
    std::vector<int> row2_free;   // free columns of row 2
};

inline const std::vector<Chart>& grassmann_charts() {
    static const std::vector<Chart> charts = [] {
        std::vector<Chart> cs;
        int id = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                Chart c{id++, i, j, {}, {}};
                for (int col = 0; col < 4; ++col) {
                    if (col == i || col == j) continue;
                    if (col > i) c.row1_free.push_back(col);
                    if (col > j) c.row2_free.push_back(col);
                }
                cs.push_back(std::move(c));
            }
        return cs;
    }();
    return charts;
}

template <class F>
ProjLine<F> line_from_chart(const F* fld, const Chart& ch, const std::vector<typename F::Elem>& u,
                            const std::vector<typename F::Elem>& v) {
    std::array<typename F::Elem, 4> P, Q;
    for (int i = 0; i < 4; ++i) P[i] = Q[i] = fld->zero();
    P[ch.piv1] = fld->one();
    Q[ch.piv2] = fld->one();
    for (size_t r = 0; r < ch.row1_free.size(); ++r) P[ch.row1_free[r]] = u[r];
    for (size_t r = 0; r < ch.row2_free.size(); ++r) Q[ch.row2_free[r]] = v[r];
    return ProjLine<F>(ProjPoint<F>(fld, std::move(P)), ProjPoint<F>(fld, std::move(Q)), ch.id);
}

// The five containment equations of a chart: coefficients of s^(4-m) t^m in
// f(s P(u) + t Q(v)).  Variables 0..nu-1 are the row-1 unknowns, nu..n-1 the
// row-2 unknowns.
template <class F>
std::array<MultiPoly<F>, 5> containment_equations(const QuarticSurface<F>& S, const Chart& ch) {
    const F* fld = S.fld;
    unsigned nu = (unsigned)ch.row1_free.size(), nvv = (unsigned)ch.row2_free.size();
    unsigned n = nu + nvv;
    unsigned vs = n, vt = n + 1;  // the (s, t) slots
    std::vector<MultiPoly<F>> sub;
    for (int col = 0; col < 4; ++col) {
        MultiPoly<F> pc(fld, n + 2), qc(fld, n + 2);
        if (col == ch.piv1) pc = MultiPoly<F>::constant(fld, n + 2, fld->one());
        if (col == ch.piv2) qc = MultiPoly<F>::constant(fld, n + 2, fld->one());
        for (size_t r = 0; r < ch.row1_free.size(); ++r)
            if (ch.row1_free[r] == col) pc = MultiPoly<F>::var(fld, n + 2, (unsigned)r);
        for (size_t r = 0; r < ch.row2_free.size(); ++r)
            if (ch.row2_free[r] == col) qc = MultiPoly<F>::var(fld, n + 2, nu + (unsigned)r);
        sub.push_back(MultiPoly<F>::var(fld, n + 2, vs) * pc + MultiPoly<F>::var(fld, n + 2, vt) * qc);
    }
    MultiPoly<F> full = S.f.subst(sub);
    std::array<MultiPoly<F>, 5> eqs;
    for (int m = 0; m <= 4; ++m) eqs[m] = MultiPoly<F>(fld, n + 2);
    for (auto& [e, c] : full.terms()) {
        if (e[vs] + e[vt] != 4) throw census_error("containment_equations: degree bookkeeping broken");
        ExpVec ne = e;
        ne[vs] = ne[vt] = 0;
        eqs[e[vt]].add_term(ne, c);
    }
    return eqs;
}

// ---------------------------------------------------------------------------
// Brute force
// ---------------------------------------------------------------------------

inline std::vector<ProjLine<GF>> enumerate_lines_bruteforce(const QuarticSurface<GF>& S) {
    const GF* fld = S.fld;
    uint64_t q = fld->order_u64();
    if (q == 0 || q > 60000) throw census_error("enumerate_lines_bruteforce: field too large");
    std::vector<ProjLine<GF>> out;
    for (const Chart& ch : grassmann_charts()) {
        unsigned n = (unsigned)(ch.row1_free.size() + ch.row2_free.size());
        uint64_t cells = 1;
        for (unsigned i = 0; i < n; ++i) cells *= q;
        std::vector<GF::Elem> u(ch.row1_free.size(), fld->zero());
        std::vector<GF::Elem> v(ch.row2_free.size(), fld->zero());
        for (uint64_t idx = 0; idx < cells; ++idx) {
            uint64_t rest = idx;
            for (auto& e : u) {
                e = fld->elem_at(rest % q);
                rest /= q;
            }
            for (auto& e : v) {
                e = fld->elem_at(rest % q);
                rest /= q;
            }
            ProjLine<GF> L = line_from_chart(fld, ch, u, v);
            if (line_in_surface(S, L)) out.push_back(std::move(L));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Elimination solver
// ---------------------------------------------------------------------------

namespace detail {

// roots in the base field of a polynomial that depends on at most variable
// `var`; a zero polynomial yields the whole field (flagged by all=true)
struct VarRoots {
    bool all = false;
    std::vector<GF::Elem> values;
};

inline VarRoots roots_in_var(const MultiPoly<GF>& f, unsigned var) {
    VarRoots r;
    if (f.is_zero()) {
        r.all = true;
        return r;
    }
    UniPoly<GF> u = f.to_unipoly(var);
    if (u.deg() < 1) return r;  // nonzero constant: no roots
    for (auto& root : roots_with_multiplicity_fast(u)) r.values.push_back(root.value);
    return r;
}

// gcd of the nonzero members, viewed as univariate in `var`
inline std::optional<UniPoly<GF>> gcd_system(const std::vector<MultiPoly<GF>>& eqs, unsigned var) {
    const GF* fld = nullptr;
    std::optional<UniPoly<GF>> g;
    for (auto& e : eqs) {
        if (e.is_zero()) continue;
        fld = e.field();
        UniPoly<GF> u = e.to_unipoly(var);
        g = g ? gcd(*g, u) : u;
        if (g->deg() == 0) return g;  // coprime already
    }
    return g;  // nullopt iff all equations vanish identically
}

// Solve the system eqs = 0 in the two variables (va, vb) over the base field.
// Only necessary conditions are used; callers validate candidates.
inline std::vector<std::pair<GF::Elem, GF::Elem>> solve_pair(const std::vector<MultiPoly<GF>>& eqs0,
                                                            unsigned va, unsigned vb) {
    std::vector<MultiPoly<GF>> eqs;
    const GF* fld = nullptr;
    for (auto& e : eqs0)
        if (!e.is_zero()) {
            eqs.push_back(e);
            fld = e.field();
        }
    if (eqs.empty()) throw census_error("non-isolated lines (two-parameter family)");
    std::vector<std::pair<GF::Elem, GF::Elem>> out;

    auto finish_with_va = [&](const GF::Elem& a) {
        std::vector<MultiPoly<GF>> spec;
        for (auto& e : eqs) spec.push_back(e.eval_var(va, a));
        auto g = gcd_system(spec, vb);
        if (!g) throw census_error("non-isolated lines (one-parameter family)");
        if (g->deg() < 1) return;
        for (auto& r : roots_with_multiplicity_fast(*g)) out.push_back({a, r.value});
    };

    // prefer a linear equation (the s^3 t coefficient always is, in v)
    for (auto& e : eqs) {
        if (e.degree_in(va) > 1 || e.degree_in(vb) > 1) continue;
        ExpVec ea(e.nvars(), 0), eb(e.nvars(), 0);
        ea[va] = 1;
        eb[vb] = 1;
        bool mixed = false;  // va*vb term would make it non-linear
        for (auto& [ex, c] : e.terms())
            if (ex[va] && ex[vb]) mixed = true;
        if (mixed) continue;
        GF::Elem ca = e.coeff(ea), cb = e.coeff(eb), cc = e.coeff(ExpVec(e.nvars(), 0));
        if (!fld->is_zero(cb)) {
            // vb = -(ca va + cc)/cb; substitute into the others
            std::vector<MultiPoly<GF>> rest;
            auto vbsub = (MultiPoly<GF>::var(fld, e.nvars(), va).scaled(ca) +
                          MultiPoly<GF>::constant(fld, e.nvars(), cc))
                             .scaled(fld->neg(fld->inv(cb)));
            for (auto& o : eqs) {
                if (&o == &e) continue;
                auto cs = o.coefficients_in(vb);
                MultiPoly<GF> acc(fld, o.nvars());
                for (size_t d = 0; d < cs.size(); ++d) acc = acc + cs[d] * vbsub.pow((unsigned)d);
                rest.push_back(acc);
            }
            auto g = gcd_system(rest, va);
            if (!g) throw census_error("non-isolated lines (one-parameter family)");
            if (g->deg() < 1) return out;
            for (auto& r : roots_with_multiplicity_fast(*g)) {
                GF::Elem b = fld->neg(fld->div(fld->add(fld->mul(ca, r.value), cc), cb));
                out.push_back({r.value, b});
            }
            return out;
        }
        if (!fld->is_zero(ca)) {
            finish_with_va(fld->neg(fld->div(cc, ca)));
            return out;
        }
        // constant equation: nonzero => no solutions
        return out;
    }

    // general route: pairwise elimination of vb
    std::optional<UniPoly<GF>> acc;
    for (size_t i = 0; i < eqs.size() && (!acc || acc->deg() > 0); ++i)
        for (size_t j = i + 1; j < eqs.size() && (!acc || acc->deg() > 0); ++j) {
            if (eqs[i].degree_in(vb) < 1 && eqs[j].degree_in(vb) < 1) continue;
            MultiPoly<GF> r = eqs[i].degree_in(vb) < 1
                                  ? eqs[i]
                                  : (eqs[j].degree_in(vb) < 1 ? eqs[j] : resultant_in(eqs[i], eqs[j], vb));
            if (r.is_zero()) continue;
            UniPoly<GF> ru = r.to_unipoly(va);
            acc = acc ? gcd(*acc, ru) : ru;
        }
    if (!acc) {
        // every pair shares a positive-dimensional component
        throw census_error("non-isolated lines (common curve of solutions)");
    }
    if (acc->deg() < 1) {
        // candidates only where degree-0 gcd: none, unless some eq forced va
        for (auto& e : eqs)
            if (e.degree_in(vb) < 1 && e.degree_in(va) >= 1) {
                auto vr = roots_in_var(e, va);
                for (auto& a : vr.values) finish_with_va(a);
                return out;
            }
        return out;
    }
    for (auto& r : roots_with_multiplicity_fast(*acc)) finish_with_va(r.value);
    return out;
}

}  // namespace detail

inline std::vector<ProjLine<GF>> enumerate_lines_elimination(const QuarticSurface<GF>& S) {
    const GF* fld = S.fld;
    uint64_t q = fld->order_u64();
    if (q == 0) throw census_error("enumerate_lines_elimination: field too large to scan");
    std::vector<ProjLine<GF>> out;
    auto try_candidate = [&](const Chart& ch, const std::vector<GF::Elem>& u,
                             const std::vector<GF::Elem>& v) {
        ProjLine<GF> L = line_from_chart(fld, ch, u, v);
        if (line_in_surface(S, L)) out.push_back(std::move(L));
    };
    for (const Chart& ch : grassmann_charts()) {
        unsigned nu = (unsigned)ch.row1_free.size(), nvv = (unsigned)ch.row2_free.size();
        auto eqs = containment_equations(S, ch);
        std::vector<MultiPoly<GF>> all(eqs.begin(), eqs.end());

        if (nu == 0 && nvv == 0) {
            bool ok = true;
            for (auto& e : all) ok = ok && e.is_zero();
            if (ok) try_candidate(ch, {}, {});
            continue;
        }
        if (nvv == 0) {
            // unknowns in row 1 only
            if (nu == 1) {
                auto g = detail::gcd_system(all, 0);
                if (!g) throw census_error("non-isolated lines (chart family)");
                if (g->deg() >= 1)
                    for (auto& r : roots_with_multiplicity_fast(*g)) try_candidate(ch, {r.value}, {});
                continue;
            }
            // nu == 2: scan variable 0
            bool all_zero = true;
            for (auto& e : all) all_zero = all_zero && e.is_zero();
            if (all_zero) throw census_error("non-isolated lines (plane in surface)");
            for (uint64_t ia = 0; ia < q; ++ia) {
                GF::Elem a = fld->elem_at(ia);
                std::vector<MultiPoly<GF>> spec;
                for (auto& e : all) spec.push_back(e.eval_var(0, a));
                auto g = detail::gcd_system(spec, 1);
                if (!g) throw census_error("non-isolated lines (chart family)");
                if (g->deg() < 1) continue;
                for (auto& r : roots_with_multiplicity_fast(*g)) try_candidate(ch, {a, r.value}, {});
            }
            continue;
        }
        // nvv >= 1: equation 0 involves only the row-1 unknowns
        std::vector<MultiPoly<GF>> rest = {eqs[1], eqs[2], eqs[3], eqs[4]};
        auto solve_v_and_emit = [&](const std::vector<GF::Elem>& u) {
            std::vector<MultiPoly<GF>> spec;
            for (auto& e : rest) {
                MultiPoly<GF> s = e;
                for (unsigned r = 0; r < nu; ++r) s = s.eval_var(r, u[r]);
                spec.push_back(std::move(s));
            }
            if (nvv == 1) {
                auto g = detail::gcd_system(spec, nu);
                if (!g) throw census_error("non-isolated lines (pencil through a point)");
                if (g->deg() < 1) return;
                for (auto& r : roots_with_multiplicity_fast(*g)) try_candidate(ch, u, {r.value});
            } else {
                for (auto& [b1, b2] : detail::solve_pair(spec, nu, nu + 1)) try_candidate(ch, u, {b1, b2});
            }
        };
        if (nu == 1) {
            auto vr = detail::roots_in_var(eqs[0], 0);
            if (vr.all)
                for (uint64_t ia = 0; ia < q; ++ia) solve_v_and_emit({fld->elem_at(ia)});
            else
                for (auto& a : vr.values) solve_v_and_emit({a});
            continue;
        }
        // nu == 2: scan variable 0, solve e0 for variable 1
        if (eqs[0].is_zero()) throw census_error("non-isolated lines (plane in surface)");
        for (uint64_t ia = 0; ia < q; ++ia) {
            GF::Elem a = fld->elem_at(ia);
            auto vr = detail::roots_in_var(eqs[0].eval_var(0, a), 1);
            if (vr.all)
                for (uint64_t ib = 0; ib < q; ++ib) solve_v_and_emit({a, fld->elem_at(ib)});
            else
                for (auto& b : vr.values) solve_v_and_emit({a, b});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Tower stabilization
// ---------------------------------------------------------------------------

template <class F>
unsigned line_def_degree(const ProjLine<F>& L) {
    unsigned d = 1;
    for (auto& c : L.pluecker) d = (unsigned)std::lcm(d, L.fld->def_degree(c));
    return d;
}

struct CensusResult {
    uint64_t p = 0;
    unsigned k_max = 0;
    bool stabilized = false;
    std::vector<uint64_t> count_per_level;  // cumulative geometric count C_k, nondecreasing
    std::shared_ptr<GF> field;              // merge field containing every census line
    std::vector<ProjLine<GF>> lines;        // sorted by Plücker key
    std::vector<unsigned> def_degree;       // per line, aligned with `lines`
};

inline constexpr unsigned kLineBudget = 80;  // hard cap from the degree-20 divisor bound

// Enumerate over F_{p^k} for k = 1..K.  New lines at level k are those of
// definition degree exactly k, so each geometric line is counted once and the
// per-level cumulative counts are nondecreasing by construction.
inline CensusResult stabilized_count(const QuarticSurface<GF>& S, unsigned K, bool use_elimination = true,
                                     unsigned* stabilized_at = nullptr) {
    const GF* base = S.fld;
    if (base->k() != 1) throw census_error("stabilized_count: base surface must live over F_p");
    uint64_t p = base->p();
    CensusResult res;
    res.p = p;
    res.k_max = K;

    struct LevelLine {
        unsigned k;
        std::array<GF::Elem, 4> P, Q;
    };
    std::vector<LevelLine> found;
    uint64_t cumulative = 0;
    std::vector<std::shared_ptr<GF>> fields;
    for (unsigned k = 1; k <= K; ++k) {
        auto fk = std::make_shared<GF>(p, k);
        fields.push_back(fk);
        MultiPoly<GF> fup(fk.get(), 4);
        for (auto& [e, c] : S.f.terms()) fup.add_term(e, fk->from_int((long long)c[0]));
        QuarticSurface<GF> Sk(fk.get(), std::move(fup));
        auto lines = use_elimination ? enumerate_lines_elimination(Sk) : enumerate_lines_bruteforce(Sk);
        for (auto& L : lines) {
            if (line_def_degree(L) != k) continue;
            ++cumulative;
            found.push_back({k, L.p.x, L.q.x});
        }
        res.count_per_level.push_back(cumulative);
        // the degree-20 divisor argument needs char >= 5; char 3 legitimately exceeds it
        if (p >= 5 && cumulative > kLineBudget)
            throw census_error("flecnodal budget violated: more than 80 lines");
        if (k >= 2 && res.count_per_level[k - 1] == res.count_per_level[k - 2] && !res.stabilized) {
            res.stabilized = true;
            if (stabilized_at) *stabilized_at = k;
        }
    }

    // merge field: smallest degree containing every line found
    unsigned M = 1;
    for (auto& ll : found) M = (unsigned)std::lcm(M, ll.k);
    res.field = std::make_shared<GF>(p, M);
    std::map<unsigned, Embedding> embs;
    for (auto& ll : found) {
        if (!embs.count(ll.k)) embs.emplace(ll.k, make_embedding(*fields[ll.k - 1], *res.field));
        const Embedding& e = embs.at(ll.k);
        std::array<GF::Elem, 4> P, Q;
        for (int i = 0; i < 4; ++i) {
            P[i] = e.map(ll.P[i]);
            Q[i] = e.map(ll.Q[i]);
        }
        res.lines.emplace_back(ProjPoint<GF>(res.field.get(), std::move(P)),
                               ProjPoint<GF>(res.field.get(), std::move(Q)));
    }
    std::vector<size_t> order(res.lines.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return res.lines[a] < res.lines[b]; });
    std::vector<ProjLine<GF>> sorted;
    std::vector<unsigned> degs;
    for (size_t i : order) {
        sorted.push_back(res.lines[i]);
        degs.push_back(found[i].k);
    }
    res.lines = std::move(sorted);
    res.def_degree = std::move(degs);
    for (size_t i = 1; i < res.lines.size(); ++i)
        if (res.lines[i] == res.lines[i - 1]) throw census_error("stabilized_count: duplicate line across levels");
    return res;
}

// single-level census wrapper (e.g. the char-3 Fermat regression over F_9)
inline CensusResult single_level_census(const QuarticSurface<GF>& S, bool use_elimination = true) {
    const GF* fld = S.fld;
    CensusResult res;
    res.p = fld->p();
    res.k_max = fld->k();
    res.field = std::make_shared<GF>(fld->spec());
    MultiPoly<GF> f2(res.field.get(), 4);
    for (auto& [e, c] : S.f.terms()) f2.add_term(e, c);
    QuarticSurface<GF> S2(res.field.get(), std::move(f2));
    res.lines = use_elimination ? enumerate_lines_elimination(S2) : enumerate_lines_bruteforce(S2);
    for (auto& L : res.lines) res.def_degree.push_back(line_def_degree(L));
    res.count_per_level = {(uint64_t)res.lines.size()};
    res.stabilized = false;
    return res;
}

// ---------------------------------------------------------------------------
// Incidence graph
// ---------------------------------------------------------------------------

struct IncidenceGraph {
    std::vector<std::vector<int>> adj;  // sorted neighbor lists
    std::vector<int> degree;
    struct Triple {
        int pivot;
        std::array<int, 3> lines;
        bool star;  // three concurrent lines; otherwise a triangle
    };
    std::vector<Triple> triples;
};

inline IncidenceGraph incidence_graph(const CensusResult& census) {
    const GF& fld = *census.field;
    size_t n = census.lines.size();
    IncidenceGraph g;
    g.adj.assign(n, {});
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            auto m = lines_meet(census.lines[i], census.lines[j]);
            if (m.kind == MeetKind::Equal) throw census_error("incidence_graph: duplicate lines");
            if (m.kind == MeetKind::Point) {
                g.adj[i].push_back((int)j);
                g.adj[j].push_back((int)i);
            }
        }
    for (auto& a : g.adj) g.degree.push_back((int)a.size());
    // coplanar groups per pivot
    for (size_t i = 0; i < n; ++i) {
        std::map<std::string, std::vector<int>> groups;
        for (int j : g.adj[i]) {
            // plane through lines i and j: kernel of the stacked 3x4 matrix
            const auto& li = census.lines[i];
            const auto& lj = census.lines[j];
            ProjPoint<GF> extra = li.contains(lj.p) ? lj.q : lj.p;
            std::vector<std::vector<GF::Elem>> m = {
                {li.p.x[0], li.p.x[1], li.p.x[2], li.p.x[3]},
                {li.q.x[0], li.q.x[1], li.q.x[2], li.q.x[3]},
                {extra.x[0], extra.x[1], extra.x[2], extra.x[3]}};
            auto ker = mat_kernel(fld, m);
            if (ker.size() != 1) throw census_error("incidence_graph: bad plane span");
            // normalize the form
            auto& v = ker[0];
            int lead = -1;
            for (int c = 0; c < 4; ++c)
                if (!fld.is_zero(v[c])) {
                    lead = c;
                    break;
                }
            auto inv = fld.inv(v[lead]);
            std::string key;
            for (int c = 0; c < 4; ++c) key += fld.to_string(fld.mul(v[c], inv)) + "|";
            groups[key].push_back(j);
        }
        for (auto& [key, members] : groups) {
            if (members.size() != 3) continue;
            auto m01 = lines_meet(census.lines[members[0]], census.lines[members[1]]);
            auto m02 = lines_meet(census.lines[members[0]], census.lines[members[2]]);
            auto m12 = lines_meet(census.lines[members[1]], census.lines[members[2]]);
            bool star = m01.kind == MeetKind::Point && m02.kind == MeetKind::Point &&
                        m12.kind == MeetKind::Point && *m01.point == *m02.point && *m01.point == *m12.point;
            g.triples.push_back({(int)i, {members[0], members[1], members[2]}, star});
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Order-3 diagonal symmetry [rho x1, rho^2 x2, x3, x4]
// ---------------------------------------------------------------------------

struct SigmaOrbits {
    std::vector<std::vector<int>> orbits;  // each of size 1 or 3
    std::vector<int> fixed;                // indices of the size-1 orbits
};

inline SigmaOrbits sigma_orbits(const CensusResult& census, const QuarticSurface<GF>& S0) {
    const GF& fld = *census.field;
    if (S0.fld->p() != fld.p()) throw census_error("sigma_orbits: characteristic mismatch");
    // lift the surface into the merge field of the census
    MultiPoly<GF> flift(&fld, 4);
    if (S0.fld->spec() == fld.spec()) {
        flift = S0.f;
    } else if (S0.fld->k() == 1) {
        for (auto& [e, c] : S0.f.terms()) flift.add_term(e, fld.from_int((long long)c[0]));
    } else {
        Embedding emb = make_embedding(*S0.fld, fld);
        for (auto& [e, c] : S0.f.terms()) flift.add_term(e, emb.map(c));
    }
    QuarticSurface<GF> S(&fld, std::move(flift));
    // primitive cube root of unity
    auto cube = UniPoly<GF>::from_ints(&fld, {1, 1, 1});
    auto rts = roots(cube);
    if (rts.empty()) throw census_error("sigma_orbits: no cube root of unity; enlarge the field");
    GF::Elem rho = rts[0];
    for (auto& r : rts)
        if (fld.less(r, rho)) rho = r;
    GF::Elem rho2 = fld.mul(rho, rho);
    // invariance of the surface: f(sigma x) must be proportional to f
    {
        MultiPoly<GF> fs(&fld, 4);
        for (auto& [e, c] : S.f.terms()) {
            GF::Elem scale = fld.mul(fld.pow(rho, (uint64_t)e[0]), fld.pow(rho2, (uint64_t)e[1]));
            fs.add_term(e, fld.mul(c, scale));
        }
        auto& [le, lc] = *S.f.terms().begin();
        GF::Elem ratio = fld.div(fs.coeff(le), lc);
        if (!(fs == S.f.scaled(ratio))) throw census_error("sigma_orbits: surface not invariant");
    }
    auto apply = [&](const ProjPoint<GF>& pt) {
        std::array<GF::Elem, 4> c = {fld.mul(rho, pt.x[0]), fld.mul(rho2, pt.x[1]), pt.x[2], pt.x[3]};
        return ProjPoint<GF>(&fld, std::move(c));
    };
    auto find = [&](const ProjLine<GF>& L) -> int {
        auto it = std::lower_bound(census.lines.begin(), census.lines.end(), L);
        if (it == census.lines.end() || !(*it == L)) return -1;
        return (int)(it - census.lines.begin());
    };
    SigmaOrbits so;
    std::vector<bool> seen(census.lines.size(), false);
    for (size_t i = 0; i < census.lines.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> orbit{(int)i};
        seen[i] = true;
        ProjLine<GF> cur(apply(census.lines[i].p), apply(census.lines[i].q));
        while (!(cur == census.lines[i])) {
            int j = find(cur);
            if (j < 0) throw census_error("sigma_orbits: image line missing from census");
            if (!seen[j]) {
                orbit.push_back(j);
                seen[j] = true;
            }
            cur = ProjLine<GF>(apply(cur.p), apply(cur.q));
        }
        if (orbit.size() == 1) so.fixed.push_back((int)i);
        if (orbit.size() != 1 && orbit.size() != 3)
            throw census_error("sigma_orbits: orbit size not 1 or 3");
        so.orbits.push_back(std::move(orbit));
    }
    return so;
}

}  // namespace qlines

#endif
