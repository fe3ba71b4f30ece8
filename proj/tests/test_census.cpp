#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlines/census.hpp"
#include "qlines/rational.hpp"

#include <random>

using namespace qlines;

static MultiPoly<GF> schur(const GF* fld) {
    auto x = [&](int i) { return MultiPoly<GF>::var(fld, 4, i); };
    return x(0).pow(4) - x(0) * x(1).pow(3) - x(2).pow(4) + x(2) * x(3).pow(3);
}

static MultiPoly<GF> fermat(const GF* fld) {
    auto x = [&](int i) { return MultiPoly<GF>::var(fld, 4, i); };
    return x(0).pow(4) + x(1).pow(4) + x(2).pow(4) + x(3).pow(4);
}

// the 60-line example surface with parameter r = -16/27
static MultiPoly<GF> example60(const GF* fld) {
    auto x = [&](int i) { return MultiPoly<GF>::var(fld, 4, i); };
    mpq_class r(-16, 27);
    auto c = [&](const mpq_class& v) { return MultiPoly<GF>::constant(fld, 4, fld->from_rational(v)); };
    return x(0).pow(3) * x(2) + x(0) * x(1) * x(2).pow(2) + x(1).pow(3) * x(3) +
           c(r) * x(2).pow(3) * x(3) - x(0) * x(1) * x(3).pow(2) - c(r) * x(2) * x(3).pow(3);
}

static MultiPoly<GF> random_quartic(const GF& F, std::mt19937_64& rng, int nterms = 8) {
    MultiPoly<GF> f(&F, 4);
    for (int t = 0; t < nterms; ++t) {
        ExpVec e(4, 0);
        int rem = 4;
        for (int i = 0; i < 3; ++i) {
            e[i] = (uint32_t)(rng() % (rem + 1));
            rem -= (int)e[i];
        }
        e[3] = (uint32_t)rem;
        f.add_term(e, F.from_int((long long)(rng() % F.p())));
    }
    return f;
}

TEST_CASE("chart decomposition covers the Grassmannian exactly once") {
    GF F(5);
    uint64_t q = 5;
    uint64_t total = 0;
    std::set<std::string> keys;
    for (const Chart& ch : grassmann_charts()) {
        unsigned n = (unsigned)(ch.row1_free.size() + ch.row2_free.size());
        uint64_t cells = 1;
        for (unsigned i = 0; i < n; ++i) cells *= q;
        total += cells;
        std::vector<GF::Elem> u(ch.row1_free.size()), v(ch.row2_free.size());
        for (uint64_t idx = 0; idx < cells; ++idx) {
            uint64_t rest = idx;
            for (auto& e : u) { e = F.elem_at(rest % q); rest /= q; }
            for (auto& e : v) { e = F.elem_at(rest % q); rest /= q; }
            auto L = line_from_chart(&F, ch, u, v);
            std::string key;
            for (auto& c : L.pluecker) key += F.to_string(c) + "|";
            CHECK(keys.insert(key).second);  // no duplicates across charts
        }
    }
    CHECK(total == (q * q + 1) * (q * q + q + 1));
}

TEST_CASE("containment equations vanish exactly for contained lines") {
    GF F(7);
    QuarticSurface<GF> S(&F, schur(&F));
    std::mt19937_64 rng(5);
    for (const Chart& ch : grassmann_charts()) {
        auto eqs = containment_equations(S, ch);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<GF::Elem> u, v, all;
            for (size_t i = 0; i < ch.row1_free.size(); ++i) u.push_back(F.from_int((long long)(rng() % 7)));
            for (size_t i = 0; i < ch.row2_free.size(); ++i) v.push_back(F.from_int((long long)(rng() % 7)));
            all = u;
            all.insert(all.end(), v.begin(), v.end());
            all.push_back(F.zero());
            all.push_back(F.zero());
            auto L = line_from_chart(&F, ch, u, v);
            bool contained = line_in_surface(S, L);
            bool zero = true;
            for (auto& e : eqs) zero = zero && F.is_zero(e.eval(all));
            CHECK(zero == contained);
        }
    }
}

TEST_CASE("oracle equivalence of the two enumerators") {
    std::mt19937_64 rng(99);
    int compared = 0;
    for (uint64_t q : {5, 7, 11, 13}) {
        GF F(q);
        for (int trial = 0; trial < 3; ++trial) {
            auto f = random_quartic(F, rng);
            if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != 4) continue;
            QuarticSurface<GF> S(&F, f);
            auto brute = enumerate_lines_bruteforce(S);
            try {
                auto elim = enumerate_lines_elimination(S);
                REQUIRE(brute.size() == elim.size());
                for (size_t i = 0; i < brute.size(); ++i) CHECK(brute[i] == elim[i]);
                ++compared;
            } catch (census_error&) {
                // a positive-dimensional family: the surface must contain at
                // least a pencil of lines, visible to brute force
                CHECK(brute.size() >= q + 1);
            }
        }
    }
    CHECK(compared >= 8);
    // named surfaces over F_9 (char 3) and F_13
    GF F9(3, 2);
    QuarticSurface<GF> fer(&F9, fermat(&F9));
    auto b9 = enumerate_lines_bruteforce(fer);
    auto e9 = enumerate_lines_elimination(fer);
    CHECK(b9.size() == 112);
    REQUIRE(b9.size() == e9.size());
    for (size_t i = 0; i < b9.size(); ++i) CHECK(b9[i] == e9[i]);
    GF F13(13);
    QuarticSurface<GF> sch(&F13, schur(&F13));
    auto b13 = enumerate_lines_bruteforce(sch);
    auto e13 = enumerate_lines_elimination(sch);
    CHECK(b13.size() == 64);
    REQUIRE(b13.size() == e13.size());
    for (size_t i = 0; i < b13.size(); ++i) CHECK(b13[i] == e13[i]);
}

TEST_CASE("plane-containing quartics are rejected by the elimination solver") {
    GF F(7);
    auto x = [&](int i) { return MultiPoly<GF>::var(&F, 4, i); };
    auto f = x(0) * (x(0).pow(3) + x(1).pow(3) + x(2).pow(3) + x(3).pow(3));
    QuarticSurface<GF> S(&F, f);
    CHECK_THROWS_AS(enumerate_lines_elimination(S), census_error);
}

TEST_CASE("stabilized tower counts for the named surfaces") {
    GF F13(13);
    QuarticSurface<GF> sch(&F13, schur(&F13));
    auto res = stabilized_count(sch, 3);
    CHECK(res.stabilized);
    CHECK(res.count_per_level == std::vector<uint64_t>{64, 64, 64});
    CHECK(res.lines.size() == 64);
    for (unsigned d : res.def_degree) CHECK(d == 1);
    for (size_t i = 0; i + 1 < res.count_per_level.size(); ++i)
        CHECK(res.count_per_level[i] <= res.count_per_level[i + 1]);

    GF F11(11);
    QuarticSurface<GF> ex(&F11, example60(&F11));
    auto res2 = stabilized_count(ex, 3);
    CHECK(res2.stabilized);
    CHECK(res2.lines.size() == 60);
    CHECK(res2.count_per_level.back() == 60);

    // surfaces without lines stabilize at zero
    GF F7(7);
    auto x = [&](int i) { return MultiPoly<GF>::var(&F7, 4, i); };
    auto f = x(0).pow(4) + x(1).pow(4) + x(2).pow(4) + x(3).pow(4) + x(0) * x(1) * x(2) * x(3) +
             x(0).pow(2) * x(1) * x(3) + x(2).pow(3) * x(0) + x(1).pow(2) * x(3).pow(2).scaled(F7.from_int(3));
    QuarticSurface<GF> generic(&F7, f);
    auto res3 = stabilized_count(generic, 3);
    CHECK(res3.count_per_level.back() <= 80);
}

TEST_CASE("Schur incidence structure: degree 18 with coplanar triples at every vertex") {
    GF F13(13);
    QuarticSurface<GF> sch(&F13, schur(&F13));
    auto res = stabilized_count(sch, 2);
    REQUIRE(res.lines.size() == 64);
    auto g = incidence_graph(res);
    std::vector<int> tri(64, 0), star(64, 0);
    for (auto& t : g.triples) (t.star ? star : tri)[t.pivot]++;
    int six_star = 0, four_tri = 0;
    for (int i = 0; i < 64; ++i) {
        CHECK(g.degree[i] == 18);
        CHECK(tri[i] + star[i] >= 4);  // degree > 12 forces coplanar triples
        if (star[i] == 6 && tri[i] == 0) ++six_star;
        if (tri[i] == 4 && star[i] == 0) ++four_tri;
    }
    // two line classes: 16 lines sit in six concurrent-triple planes, the
    // other 48 in four triangle planes (their remaining six incident lines
    // come from line + irreducible-conic plane sections)
    CHECK(six_star == 16);
    CHECK(four_tri == 48);
}

TEST_CASE("pivot line of the 60-line example meets 20 lines") {
    GF F11(11);
    QuarticSurface<GF> ex(&F11, example60(&F11));
    auto res = stabilized_count(ex, 2);
    REQUIRE(res.lines.size() == 60);
    // locate {x3=x4=0}
    ProjLine<GF> l0(ProjPoint<GF>::from_ints(res.field.get(), {1, 0, 0, 0}),
                    ProjPoint<GF>::from_ints(res.field.get(), {0, 1, 0, 0}));
    int idx = -1;
    for (size_t i = 0; i < res.lines.size(); ++i)
        if (res.lines[i] == l0) idx = (int)i;
    REQUIRE(idx >= 0);
    auto g = incidence_graph(res);
    CHECK(g.degree[idx] == 20);
    for (int d : g.degree) CHECK(d <= 20);
}

TEST_CASE("order-3 symmetry orbits of the 60-line example") {
    GF F13(13);
    QuarticSurface<GF> ex(&F13, example60(&F13));
    auto res = stabilized_count(ex, 2);
    REQUIRE(res.lines.size() == 60);
    auto so = sigma_orbits(res, ex);
    size_t total = 0;
    int fixed = 0;
    for (auto& o : so.orbits) {
        total += o.size();
        CHECK((o.size() == 1 || o.size() == 3));
        if (o.size() == 1) ++fixed;
    }
    CHECK(total == 60);
    CHECK(fixed == (int)so.fixed.size());
    CHECK((60 - fixed) % 3 == 0);
    // the base line {x3=x4=0} is fixed
    ProjLine<GF> l0(ProjPoint<GF>::from_ints(res.field.get(), {1, 0, 0, 0}),
                    ProjPoint<GF>::from_ints(res.field.get(), {0, 1, 0, 0}));
    bool l0_fixed = false;
    for (int i : so.fixed) l0_fixed = l0_fixed || res.lines[i] == l0;
    CHECK(l0_fixed);
}

TEST_CASE("symmetry check rejects non-invariant surfaces") {
    GF F13(13);
    QuarticSurface<GF> sch(&F13, schur(&F13));
    auto res = stabilized_count(sch, 2);
    CHECK_THROWS_AS(sigma_orbits(res, sch), census_error);
}
