#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlines/rational.hpp"
#include "qlines/surface.hpp"

#include <random>

using namespace qlines;

// x3 x1^3 + x4 x2^3 + x1 x2 q(x3,x4) + g(x3,x4), the shape carrying the
// normalized second-kind line {x3=x4=0}
template <class F>
static MultiPoly<F> special_quartic(const F* fld, const UniPoly<F>& q2, const UniPoly<F>& g4) {
    auto x = [&](int i) { return MultiPoly<F>::var(fld, 4, i); };
    auto lift34 = [&](const UniPoly<F>& u, int formal) {
        // binary form in (x3, x4) from coefficients of x3^i x4^(formal-i)
        MultiPoly<F> r(fld, 4);
        for (int i = 0; i <= formal; ++i) {
            ExpVec e(4, 0);
            e[2] = (uint32_t)i;
            e[3] = (uint32_t)(formal - i);
            r.add_term(e, u.coeff(i));
        }
        return r;
    };
    return x(2) * x(0).pow(3) + x(3) * x(1).pow(3) + x(0) * x(1) * lift34(q2, 2) + lift34(g4, 4);
}

TEST_CASE("kernel vectors annihilate the matrix") {
    GF F(11);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        size_t rows = 2 + rng() % 3, cols = 3 + rng() % 3;
        std::vector<std::vector<GF::Elem>> m(rows, std::vector<GF::Elem>(cols));
        for (auto& r : m)
            for (auto& v : r) v = F.from_int((long long)(rng() % 11));
        int rank = mat_rank(F, m);
        auto ker = mat_kernel(F, m);
        CHECK(rank + (int)ker.size() == (int)cols);
        for (auto& v : ker)
            for (auto& row : m) {
                GF::Elem s = F.zero();
                for (size_t j = 0; j < cols; ++j) s = F.add(s, F.mul(row[j], v[j]));
                CHECK(F.is_zero(s));
            }
    }
}

TEST_CASE("projective points normalize scalar multiples") {
    GF F(7);
    auto p1 = ProjPoint<GF>::from_ints(&F, {2, 4, 6, 0});
    auto p2 = ProjPoint<GF>::from_ints(&F, {1, 2, 3, 0});
    CHECK(p1 == p2);
    auto p3 = ProjPoint<GF>::from_ints(&F, {0, 0, 0, 3});
    CHECK(F.eq(p3.x[3], F.one()));
    CHECK_THROWS_AS(ProjPoint<GF>::from_ints(&F, {0, 0, 0, 0}), geometry_error);
}

TEST_CASE("line identity is independent of the spanning points") {
    GF F(7);
    auto a = ProjPoint<GF>::from_ints(&F, {1, 0, 2, 3});
    auto b = ProjPoint<GF>::from_ints(&F, {0, 1, 4, 5});
    ProjLine<GF> l1(a, b);
    // different spanning pair: a + b, a + 2b
    auto mix = [&](long long s, long long t) {
        std::array<GF::Elem, 4> c;
        for (int i = 0; i < 4; ++i)
            c[i] = F.add(F.mul(F.from_int(s), a.x[i]), F.mul(F.from_int(t), b.x[i]));
        return ProjPoint<GF>(&F, std::move(c));
    };
    ProjLine<GF> l2(mix(1, 1), mix(1, 2));
    CHECK(l1 == l2);
    CHECK(!(l1 < l2));
    CHECK(!(l2 < l1));
    CHECK_THROWS_AS(ProjLine<GF>(a, a), geometry_error);
    // vanishing forms kill both spanning points
    for (auto& form : l1.vanishing_forms()) {
        for (auto* pt : {&a, &b}) {
            GF::Elem s = F.zero();
            for (int i = 0; i < 4; ++i) s = F.add(s, F.mul(form[i], pt->x[i]));
            CHECK(F.is_zero(s));
        }
    }
}

TEST_CASE("meeting classification with pinned cases") {
    GF F(7);
    auto e = [&](int i) {
        std::array<long long, 4> c{0, 0, 0, 0};
        c[i] = 1;
        return ProjPoint<GF>::from_ints(&F, c);
    };
    ProjLine<GF> l12(e(0), e(1)), l13(e(0), e(2)), l34(e(2), e(3));
    auto m = lines_meet(l12, l13);
    CHECK(m.kind == MeetKind::Point);
    REQUIRE(m.point.has_value());
    CHECK(*m.point == e(0));
    CHECK(lines_meet(l12, l34).kind == MeetKind::Disjoint);
    ProjLine<GF> l12b(e(1), e(0));
    CHECK(lines_meet(l12, l12b).kind == MeetKind::Equal);
}

TEST_CASE("meet is symmetric and matches the 4x4 determinant") {
    GF F(7);
    std::mt19937_64 rng(13);
    FieldOps<GF> ops{&F};
    auto rand_line = [&]() -> std::optional<ProjLine<GF>> {
        auto rp = [&]() {
            std::array<GF::Elem, 4> c;
            bool nz = false;
            for (auto& v : c) {
                v = F.from_int((long long)(rng() % 7));
                nz = nz || !F.is_zero(v);
            }
            if (!nz) c[0] = F.one();
            return ProjPoint<GF>(&F, std::move(c));
        };
        auto a = rp(), b = rp();
        if (a == b) return std::nullopt;
        return ProjLine<GF>(a, b);
    };
    int done = 0;
    while (done < 10000) {
        auto l1 = rand_line(), l2 = rand_line();
        if (!l1 || !l2) continue;
        ++done;
        auto m12 = lines_meet(*l1, *l2);
        auto m21 = lines_meet(*l2, *l1);
        CHECK(m12.kind == m21.kind);
        std::vector<std::vector<GF::Elem>> mat = {
            {l1->p.x[0], l1->p.x[1], l1->p.x[2], l1->p.x[3]},
            {l1->q.x[0], l1->q.x[1], l1->q.x[2], l1->q.x[3]},
            {l2->p.x[0], l2->p.x[1], l2->p.x[2], l2->p.x[3]},
            {l2->q.x[0], l2->q.x[1], l2->q.x[2], l2->q.x[3]}};
        bool coplanar = F.is_zero(bareiss_det(mat, ops));
        CHECK(coplanar == (m12.kind != MeetKind::Disjoint));
        if (m12.kind == MeetKind::Point) {
            CHECK(l1->contains(*m12.point));
            CHECK(l2->contains(*m12.point));
        }
    }
}

TEST_CASE("line containment in a surface") {
    QF Q;
    // Schur quartic x1^4 - x1 x2^3 - x3^4 + x3 x4^3
    auto x = [&](int i) { return MultiPoly<QF>::var(&Q, 4, i); };
    auto f = x(0).pow(4) - x(0) * x(1).pow(3) - x(2).pow(4) + x(2) * x(3).pow(3);
    QuarticSurface<QF> S(&Q, f);
    ProjLine<QF> L(ProjPoint<QF>::from_ints(&Q, {1, 1, 0, 0}), ProjPoint<QF>::from_ints(&Q, {0, 0, 1, 1}));
    CHECK(line_in_surface(S, L));
    // a line through a point off the surface
    ProjLine<QF> L2(ProjPoint<QF>::from_ints(&Q, {1, 0, 0, 0}), ProjPoint<QF>::from_ints(&Q, {0, 1, 0, 0}));
    CHECK(!S.contains(L2.p));
    CHECK(!line_in_surface(S, L2));
}

TEST_CASE("special-family members contain the base line") {
    GF F(13);
    auto q2 = UniPoly<GF>::from_ints(&F, {1, 2, 3});
    auto g4 = UniPoly<GF>::from_ints(&F, {5, 0, 1, 0, 7});
    QuarticSurface<GF> S(&F, special_quartic(&F, q2, g4));
    ProjLine<GF> l0(ProjPoint<GF>::from_ints(&F, {1, 0, 0, 0}), ProjPoint<GF>::from_ints(&F, {0, 1, 0, 0}));
    CHECK(line_in_surface(S, l0));
}

TEST_CASE("residual cubic divides the restriction exactly") {
    GF F(13);
    auto q2 = UniPoly<GF>::from_ints(&F, {1, 4, 2});
    auto g4 = UniPoly<GF>::from_ints(&F, {3, 1, 0, 2, 6});
    QuarticSurface<GF> S(&F, special_quartic(&F, q2, g4));
    ProjLine<GF> l0(ProjPoint<GF>::from_ints(&F, {1, 0, 0, 0}), ProjPoint<GF>::from_ints(&F, {0, 1, 0, 0}));
    for (long long t0 = 0; t0 <= 3; ++t0)
        for (long long t1 = 0; t1 <= 3; ++t1) {
            if (t0 == 0 && t1 == 0) continue;
            PencilPlane<GF> H(l0, F.from_int(t0), F.from_int(t1));
            auto gamma = residual_cubic(S, H);
            CHECK(gamma.total_degree() == 3);
            CHECK(gamma.is_homogeneous());
            // rebuild the restriction and compare with c * gamma
            ProjPoint<GF> R = H.third_point();
            std::vector<MultiPoly<GF>> sub;
            for (int i = 0; i < 4; ++i) {
                auto ai = MultiPoly<GF>::var(&F, 3, 0).scaled(l0.p.x[i]);
                auto bi = MultiPoly<GF>::var(&F, 3, 1).scaled(l0.q.x[i]);
                auto ci = MultiPoly<GF>::var(&F, 3, 2).scaled(R.x[i]);
                sub.push_back(ai + bi + ci);
            }
            auto restricted = S.f.subst(sub);
            CHECK(gamma * MultiPoly<GF>::var(&F, 3, 2) == restricted);
        }
    // at the plane x3 = 0 the cubic picks up the pure x2^3 term
    PencilPlane<GF> Hinf(l0, F.zero(), F.one());
    auto gamma = residual_cubic(S, Hinf);
    ExpVec b3(3, 0);
    b3[1] = 3;
    CHECK(!F.is_zero(gamma.coeff(b3)));
}

TEST_CASE("residual cubic rejects lines off the surface") {
    GF F(7);
    auto x = [&](int i) { return MultiPoly<GF>::var(&F, 4, i); };
    auto f = x(0).pow(4) + x(1).pow(4) + x(2).pow(4) + x(3).pow(4);
    QuarticSurface<GF> S(&F, f);
    ProjLine<GF> L(ProjPoint<GF>::from_ints(&F, {1, 0, 0, 0}), ProjPoint<GF>::from_ints(&F, {0, 1, 0, 0}));
    PencilPlane<GF> H(L, F.one(), F.zero());
    CHECK_THROWS_AS(residual_cubic(S, H), geometry_error);
}

TEST_CASE("smoothness scan") {
    GF F5(5);
    auto x = [&](int i) { return MultiPoly<GF>::var(&F5, 4, i); };
    QuarticSurface<GF> fermat(&F5, x(0).pow(4) + x(1).pow(4) + x(2).pow(4) + x(3).pow(4));
    auto rep = smoothness_check(fermat, 2);
    CHECK(rep.verdict == Smoothness::Smooth);
    CHECK(rep.tower_checked == 2);

    QuarticSurface<GF> cone(&F5, x(0).pow(4) + x(1).pow(4) + x(2).pow(4));
    auto rep2 = smoothness_check(cone, 1);
    CHECK(rep2.verdict == Smoothness::Singular);
    REQUIRE(rep2.witness.has_value());
    auto& w = *rep2.witness;
    CHECK(F5.is_zero(w[0]));
    CHECK(F5.is_zero(w[1]));
    CHECK(F5.is_zero(w[2]));

    // double root of the degree-4 part on the far line makes the surface singular
    GF F7(7);
    auto q2 = UniPoly<GF>::from_ints(&F7, {1, 0, 1});
    auto g4 = UniPoly<GF>(&F7, {F7.zero(), F7.zero(), F7.one()});  // x3^2 x4^2
    QuarticSurface<GF> zsing(&F7, special_quartic(&F7, q2, g4));
    auto rep3 = smoothness_check(zsing, 1);
    CHECK(rep3.verdict == Smoothness::Singular);
}

TEST_CASE("reduction mod p of rational surfaces") {
    QF Q;
    auto x = [&](int i) { return MultiPoly<QF>::var(&Q, 4, i); };
    auto f = x(0).pow(4) - x(0) * x(1).pow(3) - x(2).pow(4) + x(2) * x(3).pow(3);
    QuarticSurface<QF> S(&Q, f);
    GF F7(7);
    auto red = reduce_mod_p(S, F7);
    REQUIRE(red.has_value());
    CHECK(red->f.total_degree() == 4);
    // a denominator divisible by p blocks the reduction
    auto g = f + x(0).pow(4).scaled(mpq_class(1, 7));
    QuarticSurface<QF> S2(&Q, g);
    CHECK(!reduce_mod_p(S2, F7).has_value());
}
