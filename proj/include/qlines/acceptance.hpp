// The verification suite: ten claims covering oracle equivalence of the two
// line enumerators, the pinned censuses (Schur 64, char-3 Fermat 112, the
// 60-line example), the fibration analysis on the special family, the Segre
// machinery, the flecnodal budgets, the lookup tables and the algebraic
// property suites.  Each claim reports one pass/fail line; anything computed
// that contradicts a published count is reported as a finding, never hidden.

#ifndef QLINES_ACCEPTANCE_HPP
#define QLINES_ACCEPTANCE_HPP

#include "qlines/census.hpp"
#include "qlines/cubic.hpp"
#include "qlines/factor.hpp"
#include "qlines/fibration.hpp"
#include "qlines/flecnodal.hpp"
#include "qlines/parallel.hpp"
#include "qlines/parse.hpp"
#include "qlines/zfamily.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qlines {

struct ClaimResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // failure explanation or a finding note
};

struct AcceptanceOptions {
    unsigned threads = 1;
    uint64_t seed = 2024;
    std::string data_dir = "data";  // location of the bundled surface files
};

namespace acceptance_detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline ProjLine<GF> base_line(const GF* fld) {
    return ProjLine<GF>(ProjPoint<GF>::from_ints(fld, {1, 0, 0, 0}),
                        ProjPoint<GF>::from_ints(fld, {0, 1, 0, 0}));
}

inline std::map<std::string, int> fiber_multiset(const FibrationReport& rep) {
    std::map<std::string, int> m;
    for (auto& f : rep.fibers) {
        std::string key = kodaira_name(f.type);
        if (f.ram_index) key += "/ram" + std::to_string(f.ram_index);
        m[key] += (int)f.orbit;
    }
    return m;
}

inline std::string multiset_str(const std::map<std::string, int>& m) {
    std::string s = "{";
    for (auto& [k, v] : m) s += k + ":" + std::to_string(v) + " ";
    if (s.size() > 1) s.pop_back();
    return s + "}";
}

inline GF::Elem random_elem(const GF& fld, std::mt19937_64& rng) {
    GF::Elem e(fld.k());
    for (unsigned j = 0; j < fld.k(); ++j) e[j] = rng() % fld.p();
    return e;
}

inline MultiPoly<GF> random_quartic(const GF& fld, std::mt19937_64& rng) {
    for (;;) {
        MultiPoly<GF> f(&fld, 4);
        for (uint32_t a = 0; a <= 4; ++a)
            for (uint32_t b = 0; a + b <= 4; ++b)
                for (uint32_t c = 0; a + b + c <= 4; ++c) {
                    ExpVec e{a, b, c, 4 - a - b - c};
                    auto v = random_elem(fld, rng);
                    if (!fld.is_zero(v)) f.add_term(e, v);
                }
        if (!f.is_zero() && f.total_degree() == 4) return f;
    }
}

inline BinaryForm<GF> random_binform(const GF& fld, int d, std::mt19937_64& rng) {
    std::vector<GF::Elem> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_elem(fld, rng));
    return BinaryForm<GF>{&fld, d, c};
}

inline bool same_line_sets(std::vector<ProjLine<GF>> a, std::vector<ProjLine<GF>> b) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

// shared state across the claims: loaded bundled surfaces, censuses reused by
// later claims, and every ramification profile computed along the way
struct Context {
    AcceptanceOptions opt;
    TaskRunner pool{1};
    std::optional<ParsedQuartic> schur, fermat3, example6, zmem;
    std::string load_error;

    std::optional<CensusResult> schur_census;
    std::optional<IncidenceGraph> schur_graph;
    std::optional<CensusResult> example6_census;
    std::optional<IncidenceGraph> example6_graph;

    std::vector<RamProfile> profiles;

    void note_profile(const FibrationReport& rep) { profiles.push_back(rep.profile); }
};

inline void load_bundled(Context& ctx) {
    try {
        ctx.schur = parse_surface_text(read_file(ctx.opt.data_dir + "/schur.quartic"));
        ctx.fermat3 = parse_surface_text(read_file(ctx.opt.data_dir + "/fermat3.quartic"));
        ctx.example6 = parse_surface_text(read_file(ctx.opt.data_dir + "/example6.quartic"));
        ctx.zmem = parse_surface_text(read_file(ctx.opt.data_dir + "/z_member.quartic"));
    } catch (const std::exception& e) {
        ctx.load_error = e.what();
    }
}

// --------------------------------------------------------------- claim 1 ---
inline ClaimResult claim_oracle_equivalence(Context& ctx) {
    ClaimResult res{1, "oracle equivalence of the two line enumerators", true, ""};
    struct Job {
        FieldSpec spec;
        MultiPoly<GF> f;
        std::shared_ptr<GF> fld;
        std::string tag;
    };
    std::vector<Job> jobs;
    std::mt19937_64 rng(ctx.opt.seed ^ 0x6f31c1);
    const std::pair<uint64_t, unsigned> field_list[] = {{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}};
    for (auto [p, k] : field_list) {
        auto fld = std::make_shared<GF>(p, k);
        for (int i = 0; i < 10; ++i)
            jobs.push_back({fld->spec(), random_quartic(*fld, rng), fld,
                            "random/" + fld->spec().str() + "/" + std::to_string(i)});
    }
    // bundled examples on their native fields
    if (ctx.schur && ctx.fermat3 && ctx.example6 && ctx.zmem) {
        std::vector<std::pair<const ParsedQuartic*, std::string>> bundled = {
            {&*ctx.schur, "schur"},
            {&*ctx.fermat3, "fermat3"},
            {&*ctx.example6, "example6"},
            {&*ctx.zmem, "z_member"}};
        for (auto& [P, tag] : bundled) {
            FieldSpec fs = P->field.value_or(FieldSpec::finite(13));
            auto fld = std::make_shared<GF>(fs);
            jobs.push_back({fs, realize(*P, fld.get()).f, fld, tag});
        }
    } else {
        return {1, res.name, false, "bundled surfaces missing: " + ctx.load_error};
    }
    std::vector<std::string> issues(jobs.size());
    ctx.pool.run(jobs.size(), [&](size_t i) {
        auto& job = jobs[i];
        QuarticSurface<GF> S(job.fld.get(), job.f);
        std::vector<ProjLine<GF>> brute = enumerate_lines_bruteforce(S);
        try {
            std::vector<ProjLine<GF>> elim = enumerate_lines_elimination(S);
            if (!same_line_sets(brute, elim))
                issues[i] = job.tag + ": enumerators disagree (" + std::to_string(brute.size()) +
                            " vs " + std::to_string(elim.size()) + ")";
        } catch (const census_error& e) {
            // "non-isolated lines" is a legitimate rejection only when the
            // surface really carries a positive-dimensional family
            if (brute.size() <= kLineBudget)
                issues[i] = job.tag + ": elimination refused (" + e.what() + ") but brute force found " +
                            std::to_string(brute.size()) + " isolated lines";
        }
    });
    int checked = 0;
    for (size_t i = 0; i < jobs.size(); ++i) {
        ++checked;
        if (!issues[i].empty()) {
            res.pass = false;
            res.detail = issues[i];
            return res;
        }
    }
    res.detail = std::to_string(checked) + " surfaces, identical line sets";
    return res;
}

// --------------------------------------------------------------- claim 2 ---
inline ClaimResult claim_schur_census(Context& ctx) {
    ClaimResult res{2, "Schur census: 64 lines, degree 18, coplanar-triple profile", true, ""};
    if (!ctx.schur) return {2, res.name, false, "bundled surface missing"};
    GF F(13);
    QuarticSurface<GF> S = realize(*ctx.schur, &F);
    auto census = stabilized_count(S, 3);
    auto graph = incidence_graph(census);
    if (!census.stabilized || census.lines.size() != 64)
        return {2, res.name, false, "census " + std::to_string(census.lines.size()) + ", expected 64"};
    for (int d : graph.degree)
        if (d != 18) return {2, res.name, false, "vertex degree " + std::to_string(d) + ", expected 18"};
    std::vector<int> stars(64, 0), tris(64, 0);
    for (auto& t : graph.triples) (t.star ? stars : tris)[(size_t)t.pivot]++;
    int six_star = 0, four_tri = 0, other = 0;
    for (int i = 0; i < 64; ++i) {
        if (stars[(size_t)i] == 6 && tris[(size_t)i] == 0) ++six_star;
        else if (stars[(size_t)i] == 0 && tris[(size_t)i] == 4) ++four_tri;
        else ++other;
    }
    if (six_star != 16 || four_tri != 48 || other != 0)
        return {2, res.name, false,
                "triple profile " + std::to_string(six_star) + "/" + std::to_string(four_tri) + "/" +
                    std::to_string(other) + ", expected 16 six-star + 48 four-triangle"};
    ctx.schur_census = std::move(census);
    ctx.schur_graph = std::move(graph);
    res.detail =
        "FINDING: coplanar triples are not 6 per vertex: 16 vertices carry 6 concurrent "
        "triples, 48 carry 4 triangles (plus conic planes); degrees are 18 everywhere";
    return res;
}

// --------------------------------------------------------------- claim 3 ---
inline ClaimResult claim_fermat3(Context& ctx) {
    ClaimResult res{3, "char-3 Fermat census over F_9: 112 lines", true, ""};
    if (!ctx.fermat3) return {3, res.name, false, "bundled surface missing"};
    GF F(3, 2);
    QuarticSurface<GF> S = realize(*ctx.fermat3, &F);
    auto census = single_level_census(S);
    if (census.lines.size() != 112)
        return {3, res.name, false, "census " + std::to_string(census.lines.size()) + ", expected 112"};
    res.detail = "112 lines";
    return res;
}

// --------------------------------------------------------------- claim 4 ---
inline ClaimResult claim_example6(Context& ctx) {
    ClaimResult res{4, "60-line example: stabilized census 60, pivot degree 20", true, ""};
    if (!ctx.example6) return {4, res.name, false, "bundled surface missing"};
    GF F(11);
    QuarticSurface<GF> S = realize(*ctx.example6, &F);
    auto census = stabilized_count(S, 3);
    if (!census.stabilized || census.lines.size() != 60)
        return {4, res.name, false, "census " + std::to_string(census.lines.size()) + ", expected 60"};
    auto graph = incidence_graph(census);
    ProjLine<GF> pivot = base_line(census.field.get());
    int deg = -1;
    for (size_t i = 0; i < census.lines.size(); ++i)
        if (census.lines[i] == pivot) deg = graph.degree[i];
    if (deg != 20)
        return {4, res.name, false, "pivot line degree " + std::to_string(deg) + ", expected 20"};
    ctx.example6_census = std::move(census);
    ctx.example6_graph = std::move(graph);
    res.detail = "60 lines, 20 of them meeting the second-kind pivot line";
    return res;
}

// --------------------------------------------------------------- claim 5 ---
inline bool squarefree_unit(const UniPoly<GF>& f) {
    return f.deg() >= 1 && gcd(f, f.derivative()).deg() == 0;
}

inline ClaimResult claim_z_generic(Context& ctx) {
    ClaimResult res{5, "special family, 20 generic members: SECOND/2^2, six I3 at the locus, N=18",
                    true, ""};
    GF F(13);
    std::mt19937_64 rng(ctx.opt.seed ^ 0x5a5a5a);
    auto L = base_line(&F);
    int done = 0, attempts = 0;
    while (done < 20 && attempts < 400) {
        ++attempts;
        auto q = random_binform(F, 2, rng), g = random_binform(F, 4, rng);
        // genericity: the triangle locus q^3 + 27 x3 x4 g and g itself must be
        // squarefree, prime to each other and avoid both ends of the pencil
        MultiPoly<GF> qm(&F, 2), gm(&F, 2);
        for (int i = 0; i <= 2; ++i) qm.add_term(ExpVec{(uint32_t)i, (uint32_t)(2 - i)}, q.c[(size_t)i]);
        for (int i = 0; i <= 4; ++i) gm.add_term(ExpVec{(uint32_t)i, (uint32_t)(4 - i)}, g.c[(size_t)i]);
        MultiPoly<GF> locus =
            qm * qm * qm +
            (MultiPoly<GF>::var(&F, 2, 0) * MultiPoly<GF>::var(&F, 2, 1) * gm).scaled(F.from_int(27));
        if (F.is_zero(g.c[0]) || F.is_zero(g.c[4])) continue;
        UniPoly<GF> lam_locus = locus.eval_var(0, F.one()).to_unipoly(1);
        UniPoly<GF> lam_g = gm.eval_var(0, F.one()).to_unipoly(1);
        if (lam_locus.deg() != 6 || F.is_zero(lam_locus.coeff(0))) continue;
        if (!squarefree_unit(lam_locus) || !squarefree_unit(lam_g)) continue;
        if (gcd(lam_locus, lam_g).deg() != 0) continue;

        QuarticSurface<GF> S(&F, z_family_quartic(&F, q, g));
        FibrationReport rep;
        try {
            rep = analyze_line(S, L);
        } catch (const fibration_error& e) {
            return {5, res.name, false, std::string("analysis failed on a generic member: ") + e.what()};
        }
        ctx.note_profile(rep);
        if (!rep.kind.second || rep.profile.name != "2^2")
            return {5, res.name, false, "member not SECOND/2^2"};
        if (rep.N != 18 || rep.euler_total != 24 || !rep.pairing_ok || !rep.gr_ok ||
            !second_kind_fiber_constraints_hold(rep.fibers))
            return {5, res.name, false,
                    "N=" + std::to_string(rep.N) + " euler=" + std::to_string(rep.euler_total)};
        auto m = fiber_multiset(rep);
        if (m != std::map<std::string, int>{{"I1", 4}, {"I1/ram2", 2}, {"I3", 6}})
            return {5, res.name, false, "fiber inventory " + multiset_str(m)};
        // the I3 fibers sit exactly at the zeros of the locus
        UniPoly<GF> prod = UniPoly<GF>::constant(&F, F.one());
        for (auto& f : rep.fibers)
            if (f.type == Kodaira::in(3)) {
                if (f.at_infinity) return {5, res.name, false, "I3 fiber escaped to infinity"};
                prod = prod * f.minpoly;
            }
        if (prod.deg() != 6 || !(prod - lam_locus.monic()).is_zero())
            return {5, res.name, false, "I3 fibers do not match the locus q^3 + 27 x3 x4 g"};
        ++done;
    }
    if (done < 20)
        return {5, res.name, false,
                "only " + std::to_string(done) + " generic members found in " +
                    std::to_string(attempts) + " draws"};
    res.detail = "20 members verified (" + std::to_string(attempts) + " draws)";
    return res;
}

// --------------------------------------------------------------- claim 6 ---
inline ClaimResult claim_z_degenerations(Context& ctx) {
    ClaimResult res{6, "degenerations: x4 | g gives an I2 fiber and N = 20; x3 | q a ramified IV",
                    true, ""};
    GF F(13);
    auto L = base_line(&F);
    auto bf = [&](int d, std::vector<long long> v) {
        std::vector<GF::Elem> c;
        for (auto x : v) c.push_back(F.from_int(x));
        return BinaryForm<GF>{&F, d, c};
    };
    // x4 | g (indeed x3 x4 | g, which realizes the maximal count N = 20)
    {
        QuarticSurface<GF> S(&F, z_family_quartic(&F, bf(2, {3, 2, 1}), bf(4, {0, 5, 3, 1, 0})));
        auto rep = analyze_line(S, L);
        ctx.note_profile(rep);
        auto m = fiber_multiset(rep);
        if (rep.N != 20 || !rep.gr_ok || m["I2/ram2"] == 0)
            return {6, res.name, false, "x4 | g member: N=" + std::to_string(rep.N) + " fibers " +
                                            multiset_str(m)};
    }
    // x3 | q: a ramified type-IV fiber appears
    {
        QuarticSurface<GF> S(&F, z_family_quartic(&F, bf(2, {0, 2, 1}), bf(4, {2, 5, 0, 1, 1})));
        auto rep = analyze_line(S, L);
        ctx.note_profile(rep);
        auto m = fiber_multiset(rep);
        if (m["IV/ram2"] == 0)
            return {6, res.name, false, "x3 | q member: fibers " + multiset_str(m)};
    }
    res.detail = "I2 at the degenerate end with N = 20; ramified IV under x3 | q";
    return res;
}

// --------------------------------------------------------------- claim 7 ---
inline ClaimResult claim_segre(Context& ctx) {
    ClaimResult res{7, "Segre machinery: deg r <= 18 on first-kind lines; triple roots at triangles",
                    true, ""};
    if (!ctx.schur_census) return {7, res.name, false, "Schur census unavailable (claim 2 failed)"};
    const CensusResult& census = *ctx.schur_census;
    const GF* Fc = census.field.get();
    QuarticSurface<GF> S2 = realize(*ctx.schur, Fc);
    std::vector<int> degs(census.lines.size(), -2);  // -1 = second kind
    ctx.pool.run(census.lines.size(), [&](size_t i) {
        auto kind = line_kind(normalize_pencil(S2, census.lines[i]));
        degs[i] = kind.second ? -1 : kind.r.deg();
    });
    int first_kind = 0;
    for (int d : degs) {
        if (d == -1) continue;
        if (d > 18) return {7, res.name, false, "first-kind line with deg r = " + std::to_string(d)};
        ++first_kind;
    }
    if (first_kind < 20)
        return {7, res.name, false, "only " + std::to_string(first_kind) + " first-kind lines"};

    // constructed quartics with a triangle (I3) or star (IV) fiber at lambda=0
    GF F(13);
    std::mt19937_64 rng(ctx.opt.seed ^ 0x7e57ed);
    auto L = base_line(&F);
    auto x = [&](int i) { return MultiPoly<GF>::var(&F, 4, i); };
    int built = 0, tries = 0;
    while (built < 5 && tries < 200) {
        ++tries;
        bool star = built >= 3;
        // three linear forms in (x1, x2, x3)
        std::array<std::array<GF::Elem, 3>, 3> l;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) l[(size_t)i][(size_t)j] = random_elem(F, rng);
        if (star) {
            // concurrent: l3 in the span of l1, l2
            auto a = random_elem(F, rng), b = random_elem(F, rng);
            for (int j = 0; j < 3; ++j)
                l[2][(size_t)j] = F.add(F.mul(a, l[0][(size_t)j]), F.mul(b, l[1][(size_t)j]));
        }
        auto lin = [&](int i) {
            MultiPoly<GF> s(&F, 4);
            for (int j = 0; j < 3; ++j) {
                ExpVec e(4, 0);
                e[(size_t)j] = 1;
                if (!F.is_zero(l[(size_t)i][(size_t)j])) s.add_term(e, l[(size_t)i][(size_t)j]);
            }
            return s;
        };
        MultiPoly<GF> triple = lin(0) * lin(1) * lin(2);
        if (triple.is_zero()) continue;
        MultiPoly<GF> C(&F, 4);  // random cubic
        for (uint32_t a = 0; a <= 3; ++a)
            for (uint32_t b = 0; a + b <= 3; ++b)
                for (uint32_t c = 0; a + b + c <= 3; ++c)
                    C.add_term(ExpVec{a, b, c, 3 - a - b - c}, random_elem(F, rng));
        if (C.is_zero() || C.total_degree() != 3) continue;
        MultiPoly<GF> f = x(3) * C + x(2) * triple;
        LineKindResult kind;
        RamProfile prof;
        PlaneCubicClass cls;
        try {
            QuarticSurface<GF> S(&F, f);
            if (!line_in_surface(S, L)) continue;
            // the fiber at lambda = 0 (the plane x4 = 0) is the product of the
            // three linear forms, classified directly as a plane cubic
            MultiPoly<GF> gamma(&F, 3);
            for (auto& [e, c] : triple.terms())
                gamma.add_term(ExpVec{e[0], e[1], e[2]}, c);
            cls = classify_plane_cubic(gamma);
            auto np = normalize_pencil(S, L);
            kind = line_kind(np);
            if (!kind.second) prof = ramification_profile(np);
        } catch (const std::exception&) {
            continue;  // degenerate draw
        }
        if (kind.second) continue;
        bool triangle_fiber = cls.type == Kodaira::in(3);
        bool star_fiber = cls.type.t == FiberType::IV;
        if (star ? !star_fiber : !triangle_fiber) continue;
        ctx.profiles.push_back(prof);
        const UniPoly<GF>& r = kind.r;
        if (r.is_zero() || !F.is_zero(r.coeff(0)) || !F.is_zero(r.coeff(1)) ||
            !F.is_zero(r.coeff(2)))
            return {7, res.name, false,
                    std::string(star ? "star" : "triangle") +
                        " fiber at lambda=0 is not a triple root of r"};
        ++built;
    }
    if (built < 5)
        return {7, res.name, false, "only " + std::to_string(built) + " usable constructions"};
    res.detail = std::to_string(first_kind) + " first-kind lines with deg r <= 18; " +
                 std::to_string(built) + " constructed triangle/star fibers are triple roots";
    return res;
}

// --------------------------------------------------------------- claim 8 ---
inline ClaimResult claim_budgets(Context& ctx) {
    ClaimResult res{8, "budgets: <= 80 lines, degree <= 20, lines flecnodal, conic certified out",
                    true, ""};
    if (!ctx.schur_census || !ctx.example6_census)
        return {8, res.name, false, "earlier censuses unavailable"};
    for (auto [census, graph, tag] :
         {std::make_tuple(&*ctx.schur_census, &*ctx.schur_graph, "schur"),
          std::make_tuple(&*ctx.example6_census, &*ctx.example6_graph, "example6")}) {
        auto rep = line_budget_audit(*census, *graph);
        if (!rep.ok) {
            std::string why = rep.findings.empty() ? "budget violated" : rep.findings.front();
            return {8, res.name, false, std::string(tag) + ": " + why};
        }
    }
    {
        GF F(13);
        QuarticSurface<GF> S = realize(*ctx.zmem, &F);
        auto census = single_level_census(S);
        auto graph = incidence_graph(census);
        auto rep = line_budget_audit(census, graph);
        if (!rep.ok) return {8, res.name, false, "z_member: budget violated"};
    }
    // every Schur line is flecnodal at 5 sample points
    {
        const CensusResult& census = *ctx.schur_census;
        const GF* Fc = census.field.get();
        QuarticSurface<GF> S2 = realize(*ctx.schur, Fc);
        std::vector<char> bad(census.lines.size(), 0);
        ctx.pool.run(census.lines.size(), [&](size_t i) {
            for (long long v = 0; v < 5; ++v) {
                auto P = census.lines[i].at(Fc->one(), Fc->from_int(v));
                if (!flecnodal_member(S2, P).member) bad[i] = 1;
            }
        });
        for (size_t i = 0; i < bad.size(); ++i)
            if (bad[i])
                return {8, res.name, false, "Schur line " + std::to_string(i) + " fails the flecnodal test"};
    }
    // the residual conic of the 60-line example is not a flecnodal component
    {
        GF F(13, 2);  // enough rational parameter points for 41 samples
        QuarticSurface<GF> S = realize(*ctx.example6, &F);
        ConicParam C{&F,
                     {BinaryForm<GF>{&F, 2, {F.zero(), F.one(), F.zero()}},
                      BinaryForm<GF>{&F, 2, {F.zero(), F.zero(), F.one()}},
                      BinaryForm<GF>{&F, 2, {F.neg(F.one()), F.zero(), F.zero()}},
                      BinaryForm<GF>{&F, 2, {F.zero(), F.zero(), F.zero()}}}};
        if (!conic_nonmembership(S, C))
            return {8, res.name, false, "residual conic certified as a flecnodal component"};
    }
    res.detail = "all censuses within budget; 64 x 5 flecnodal samples; conic certified";
    return res;
}

// --------------------------------------------------------------- claim 9 ---
inline ClaimResult claim_tables(Context&) {
    ClaimResult res{9, "base-change and flex-support tables match entry-for-entry", true, ""};
    using K = Kodaira;
    auto k = [](FiberType t) { return K{t, 0, {}}; };
    const std::vector<std::tuple<K, int, K>> base_change = {
        {k(FiberType::I1), 2, K::in(2)},      {k(FiberType::I1), 3, K::in(3)},
        {k(FiberType::I2), 2, K::in(4)},      {k(FiberType::I2), 3, K::in(6)},
        {k(FiberType::I3), 2, K::in(6)},      {k(FiberType::I3), 3, K::in(9)},
        {k(FiberType::II), 2, k(FiberType::IV)},     {k(FiberType::II), 3, k(FiberType::I0star)},
        {k(FiberType::III), 2, k(FiberType::I0star)}, {k(FiberType::III), 3, k(FiberType::IIIstar)},
        {k(FiberType::IV), 2, k(FiberType::IVstar)}, {k(FiberType::IV), 3, K::smooth()},
    };
    for (auto& [from, d, expect] : base_change)
        if (!(base_change_type(from, d) == expect))
            return {9, res.name, false, "base-change entry " + kodaira_name(from) + " under degree " +
                                            std::to_string(d)};
    const std::vector<std::tuple<K, std::vector<int>, std::string>> flex = {
        {k(FiberType::I1), {3}, "the node"},
        {k(FiberType::I2), {3, 0}, "both nodes"},
        {k(FiberType::I3), {3, 3, 3}, ""},
        {k(FiberType::II), {1}, "the cusp"},
        {k(FiberType::III), {1, 0}, "the tacnode"},
        {k(FiberType::IV), {1, 1, 1}, "the triple point"},
    };
    for (auto& [type, pts, locus] : flex) {
        auto row = flex_support(type);
        if (row.smooth_points_per_component != pts || row.singular_locus != locus)
            return {9, res.name, false, "flex-support row " + kodaira_name(type)};
    }
    res.detail = "12 base-change entries, 6 flex-support rows";
    return res;
}

// -------------------------------------------------------------- claim 10 ---
inline ClaimResult claim_properties(Context& ctx) {
    ClaimResult res{10, "property suites: resultant, squarefree reconstruction, Riemann-Hurwitz",
                    true, ""};
    auto random_unipoly = [](const GF& fld, int deg, std::mt19937_64& rng) {
        std::vector<GF::Elem> c;
        for (int i = 0; i <= deg; ++i) c.push_back(random_elem(fld, rng));
        if (fld.is_zero(c.back())) c.back() = fld.one();
        return UniPoly<GF>(&fld, std::move(c));
    };
    {
        GF F(101);
        std::mt19937_64 rng(ctx.opt.seed ^ 0xabcdef);
        for (int trial = 0; trial < 1000; ++trial) {
            auto a = random_unipoly(F, 1 + (int)(rng() % 4), rng);
            auto b = random_unipoly(F, 1 + (int)(rng() % 4), rng);
            auto c = random_unipoly(F, 1 + (int)(rng() % 3), rng);
            if (!F.eq(resultant(a, b * c), F.mul(resultant(a, b), resultant(a, c))))
                return {10, res.name, false, "resultant multiplicativity failed"};
        }
    }
    {
        GF F(7, 2);
        std::mt19937_64 rng(ctx.opt.seed ^ 0xfeed);
        for (int trial = 0; trial < 1000; ++trial) {
            UniPoly<GF> f = UniPoly<GF>::constant(&F, F.one());
            for (int i = 0; i < 3; ++i) {
                auto g = random_unipoly(F, 1 + (int)(rng() % 2), rng);
                unsigned m = 1 + (unsigned)(rng() % 3);
                for (unsigned j = 0; j < m; ++j) f = f * g;
            }
            UniPoly<GF> prod = UniPoly<GF>::constant(&F, F.one());
            for (auto& part : squarefree_decomposition(f))
                for (unsigned j = 0; j < part.multiplicity; ++j) prod = prod * part.factor;
            if (!(prod == f.monic()))
                return {10, res.name, false, "squarefree reconstruction failed"};
        }
    }
    // Riemann-Hurwitz on every ramification profile computed in this run:
    // the degree-3 cover of P^1 by the line has total ramification 4
    if (ctx.profiles.size() < 25)
        return {10, res.name, false,
                "only " + std::to_string(ctx.profiles.size()) + " ramification profiles collected"};
    for (auto& prof : ctx.profiles) {
        int total = 0;
        for (auto& pt : prof.points) total += (int)pt.orbit * pt.index;
        if (total != 4)
            return {10, res.name, false, "profile " + prof.name + " has ramification sum " +
                                             std::to_string(total)};
    }
    res.detail = "1000 + 1000 random cases; " + std::to_string(ctx.profiles.size()) +
                 " ramification profiles sum to 4";
    return res;
}

}  // namespace acceptance_detail

inline std::vector<ClaimResult> run_acceptance(const AcceptanceOptions& opt) {
    using namespace acceptance_detail;
    Context ctx;
    ctx.opt = opt;
    ctx.pool = TaskRunner(opt.threads);
    load_bundled(ctx);
    std::vector<ClaimResult> out;
    out.push_back(claim_oracle_equivalence(ctx));
    out.push_back(claim_schur_census(ctx));
    out.push_back(claim_fermat3(ctx));
    out.push_back(claim_example6(ctx));
    out.push_back(claim_z_generic(ctx));
    out.push_back(claim_z_degenerations(ctx));
    out.push_back(claim_segre(ctx));
    out.push_back(claim_budgets(ctx));
    out.push_back(claim_tables(ctx));
    out.push_back(claim_properties(ctx));
    return out;
}

}  // namespace qlines

#endif
