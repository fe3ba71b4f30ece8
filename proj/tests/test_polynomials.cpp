#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <doctest.h>

#include "qlines/binform.hpp"
#include "qlines/multipoly.hpp"
#include "qlines/rational.hpp"

#include <random>

using namespace qlines;

static MultiPoly<GF> random_mpoly(const GF& fld, unsigned nv, int maxdeg, int nterms, std::mt19937_64& rng) {
    MultiPoly<GF> r(&fld, nv);
    for (int t = 0; t < nterms; ++t) {
        ExpVec e(nv);
        for (unsigned i = 0; i < nv; ++i) e[i] = (uint32_t)(rng() % (maxdeg + 1));
        r.add_term(e, fld.from_int((long long)(rng() % fld.p())));
    }
    return r;
}

static std::vector<GF::Elem> random_point(const GF& fld, unsigned nv, std::mt19937_64& rng) {
    std::vector<GF::Elem> x;
    for (unsigned i = 0; i < nv; ++i) x.push_back(fld.from_int((long long)(rng() % fld.p())));
    return x;
}

TEST_CASE("multivariate ring identities") {
    GF F(101);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_mpoly(F, 3, 3, 5, rng);
        auto b = random_mpoly(F, 3, 3, 5, rng);
        auto c = random_mpoly(F, 3, 2, 4, rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        if (!b.is_zero()) CHECK((a * b).divexact(b) == a);
        auto x = random_point(F, 3, rng);
        CHECK(F.eq((a * b).eval(x), F.mul(a.eval(x), b.eval(x))));
        CHECK(F.eq((a + b).eval(x), F.add(a.eval(x), b.eval(x))));
        // product rule
        for (unsigned i = 0; i < 3; ++i)
            CHECK((a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i));
    }
}

TEST_CASE("exact division failure is detected") {
    GF F(7);
    auto x = MultiPoly<GF>::var(&F, 2, 0);
    auto y = MultiPoly<GF>::var(&F, 2, 1);
    CHECK_THROWS_AS((x * x + y).divexact(x), algebra_error);
    CHECK((x * x * y + x * y).divexact(x) == x * y + y);
}

TEST_CASE("coefficient views round-trip") {
    GF F(13, 2);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_mpoly(F, 3, 4, 8, rng);
        for (unsigned i = 0; i < 3; ++i) {
            auto cs = f.coefficients_in(i);
            CHECK(MultiPoly<GF>::from_coefficients_in(&F, 3, i, cs) == f);
        }
    }
    auto u = UniPoly<GF>::from_ints(&F, {1, 0, 5, 7});
    CHECK(MultiPoly<GF>::from_unipoly(u, 3, 1).to_unipoly(1) == u);
}

TEST_CASE("linear substitution") {
    GF F(11);
    std::mt19937_64 rng(9);
    auto f = random_mpoly(F, 3, 3, 6, rng);
    // identity
    std::vector<std::vector<GF::Elem>> id(3, std::vector<GF::Elem>(3, F.zero()));
    for (int i = 0; i < 3; ++i) id[i][i] = F.one();
    CHECK(compose_linear(f, id) == f);
    // composition agrees with evaluation: (f o A)(x) = f(Ax)
    std::vector<std::vector<GF::Elem>> a(3, std::vector<GF::Elem>(3));
    for (auto& row : a)
        for (auto& v : row) v = F.from_int((long long)(rng() % 11));
    auto g = compose_linear(f, a);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = random_point(F, 3, rng);
        std::vector<GF::Elem> ax;
        for (int i = 0; i < 3; ++i) {
            GF::Elem s = F.zero();
            for (int j = 0; j < 3; ++j) s = F.add(s, F.mul(a[i][j], x[j]));
            ax.push_back(s);
        }
        CHECK(F.eq(g.eval(x), f.eval(ax)));
    }
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
    QF Q;
    std::mt19937_64 rng(17);
    FieldOps<QF> ops{&Q};
    for (int trial = 0; trial < 50; ++trial) {
        size_t n = 2 + rng() % 3;
        std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
        for (auto& row : m)
            for (auto& v : row) v = mpq_class((long)(rng() % 19) - 9);
        // cofactor expansion along the first row
        std::function<mpq_class(const std::vector<std::vector<mpq_class>>&)> cof =
            [&](const std::vector<std::vector<mpq_class>>& a) -> mpq_class {
            size_t nn = a.size();
            if (nn == 1) return a[0][0];
            mpq_class s = 0;
            for (size_t j = 0; j < nn; ++j) {
                std::vector<std::vector<mpq_class>> sub;
                for (size_t i = 1; i < nn; ++i) {
                    std::vector<mpq_class> row;
                    for (size_t l = 0; l < nn; ++l)
                        if (l != j) row.push_back(a[i][l]);
                    sub.push_back(row);
                }
                mpq_class t = a[0][j] * cof(sub);
                s += (j % 2) ? -t : t;
            }
            return s;
        };
        CHECK(bareiss_det(m, ops) == cof(m));
    }
}

TEST_CASE("singular matrices have zero determinant") {
    GF F(7);
    FieldOps<GF> ops{&F};
    std::vector<std::vector<GF::Elem>> m(3, std::vector<GF::Elem>(3));
    std::mt19937_64 rng(31);
    for (int j = 0; j < 3; ++j) {
        m[0][j] = F.from_int((long long)(rng() % 7));
        m[1][j] = F.from_int((long long)(rng() % 7));
        m[2][j] = F.add(m[0][j], F.mul_scalar(m[1][j], 3));  // dependent row
    }
    CHECK(F.is_zero(bareiss_det(m, ops)));
}

TEST_CASE("elimination resultant agrees with the univariate one") {
    GF F(101);
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        // univariate polynomials embedded with a dummy second variable
        auto fu = UniPoly<GF>(&F, [&] {
            std::vector<GF::Elem> c;
            for (int i = 0; i <= 3; ++i) c.push_back(F.from_int((long long)(rng() % 101)));
            if (F.is_zero(c.back())) c.back() = F.one();
            return c;
        }());
        auto gu = UniPoly<GF>(&F, [&] {
            std::vector<GF::Elem> c;
            for (int i = 0; i <= 2; ++i) c.push_back(F.from_int((long long)(rng() % 101)));
            if (F.is_zero(c.back())) c.back() = F.one();
            return c;
        }());
        auto f = MultiPoly<GF>::from_unipoly(fu, 2, 0);
        auto g = MultiPoly<GF>::from_unipoly(gu, 2, 0);
        auto r = resultant_in(f, g, 0);
        CHECK(r.total_degree() <= 0);
        GF::Elem rv = r.is_zero() ? F.zero() : r.lead().second;
        CHECK(F.eq(rv, resultant(fu, gu)));
    }
}

TEST_CASE("elimination resultant vanishes exactly on common zeros") {
    GF F(13);
    // f = x^2 - y, g = x - y: common zeros where y = x^2 and y = x
    auto x = MultiPoly<GF>::var(&F, 2, 0);
    auto y = MultiPoly<GF>::var(&F, 2, 1);
    auto f = x * x - y;
    auto g = x - y;
    auto r = resultant_in(f, g, 0);  // polynomial in y, roots y = 0, 1
    auto ru = r.to_unipoly(1);
    auto rs = roots_with_multiplicity(ru);
    REQUIRE(rs.size() == 2);
    CHECK(F.eq(rs[0].value, F.from_int(0)));
    CHECK(F.eq(rs[1].value, F.from_int(1)));
    // planted common factor forces the zero polynomial
    auto h = x + y * y;
    CHECK(resultant_in(f * h, g * h, 0).is_zero());
}

TEST_CASE("Hessian determinant pinned value and covariance") {
    GF F(31);
    // f = x1 x2 x3 has Hessian determinant 2 x1 x2 x3
    auto f = MultiPoly<GF>::var(&F, 3, 0) * MultiPoly<GF>::var(&F, 3, 1) * MultiPoly<GF>::var(&F, 3, 2);
    CHECK(hessian_determinant(f) == f.scaled(F.from_int(2)));
    // hess(f o A) = det(A)^2 (hess f) o A
    std::mt19937_64 rng(41);
    auto g = random_mpoly(F, 3, 3, 7, rng);
    std::vector<std::vector<GF::Elem>> a(3, std::vector<GF::Elem>(3));
    for (auto& row : a)
        for (auto& v : row) v = F.from_int((long long)(rng() % 31));
    FieldOps<GF> ops{&F};
    auto deta = bareiss_det(a, ops);
    if (!F.is_zero(deta)) {
        auto lhs = hessian_determinant(compose_linear(g, a));
        auto rhs = compose_linear(hessian_determinant(g), a).scaled(F.mul(deta, deta));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("formal resultant sees roots at infinity") {
    GF F(7);
    FieldOps<GF> ops{&F};
    // a = x y (roots (0:1),(1:0)), b = y (root (1:0)): common root
    std::vector<GF::Elem> a = {F.zero(), F.one(), F.zero()};
    std::vector<GF::Elem> b = {F.one(), F.zero()};
    CHECK(F.is_zero(formal_resultant(a, 2, b, 1, ops)));
    // dehomogenized versions are coprime, so the naive resultant misses it
    auto au = UniPoly<GF>(&F, {F.zero(), F.one()});
    auto bu = UniPoly<GF>::constant(&F, F.one());
    CHECK(!F.is_zero(resultant(au, bu)));
    // b' = x (root (0:1)): no common root with x + y
    std::vector<GF::Elem> c = {F.one(), F.one()};
    std::vector<GF::Elem> bx = {F.zero(), F.one()};
    CHECK(!F.is_zero(formal_resultant(c, 1, bx, 1, ops)));
}

TEST_CASE("formal resultant is a determinant: pinned 2x2 case") {
    QF Q;
    FieldOps<QF> ops{&Q};
    // res(a1 x + a0 y, b1 x + b0 y) = a1 b0 - a0 b1
    std::vector<mpq_class> a = {mpq_class(3), mpq_class(5)};
    std::vector<mpq_class> b = {mpq_class(2), mpq_class(7)};
    CHECK(formal_resultant(a, 1, b, 1, ops) == mpq_class(5 * 2 - 3 * 7));
}

TEST_CASE("formal discriminant detects repeated roots including infinity") {
    GF F(7);
    FieldOps<GF> ops{&F};
    auto cubic = [&](std::initializer_list<int> v) {
        std::vector<GF::Elem> c;
        for (int x : v) c.push_back(F.from_int(x));
        return c;
    };
    // x y (x - y): simple roots 0, infinity, 1
    CHECK(!F.is_zero(formal_discriminant(cubic({0, -1, 1, 0}), 3, ops)));
    // x y^2: double root at (0:1)... x y^2 = coefficient of x^1 y^2
    CHECK(F.is_zero(formal_discriminant(cubic({0, 1, 0, 0}), 3, ops)));
    // x^2 y: double root at (0:1)? no, double at... x^2 y vanishes doubly at x=0? x^2 y has root x=0 twice, y=0 once
    CHECK(F.is_zero(formal_discriminant(cubic({0, 0, 1, 0}), 3, ops)));
    // (x - y)^3 = x^3 - 3x^2 y + 3x y^2 - y^3
    CHECK(F.is_zero(formal_discriminant(cubic({-1, 3, -3, 1}), 3, ops)));
    // x^3 - y^3: three distinct roots (cube roots of unity over extensions)
    CHECK(!F.is_zero(formal_discriminant(cubic({-1, 0, 0, 1}), 3, ops)));
}

TEST_CASE("formal discriminant over a polynomial coefficient ring") {
    GF F(13);
    UniPolyOps<GF> ops{&F};
    // g = x^3 + t x y^2: repeated root exactly at t = 0, and disc(x^3+px) = -4p^3
    auto t = UniPoly<GF>::x(&F);
    std::vector<UniPoly<GF>> c = {ops.zero(), t, ops.zero(), ops.one()};
    auto d = formal_discriminant(c, 3, ops);
    REQUIRE(d.deg() == 3);
    auto rs = roots_with_multiplicity(d);
    REQUIRE(rs.size() == 1);
    CHECK(F.eq(rs[0].value, F.zero()));
    CHECK(rs[0].multiplicity == 3);
}

TEST_CASE("projective roots of binary forms") {
    GF F(7);
    // x^3 y - x y^3 = x y (x - y)(x + y)
    auto u = UniPoly<GF>::from_ints(&F, {0, -1, 0, 1});  // f(x,1) = x^3 - x
    auto bf = BinaryForm<GF>::from_unipoly(u, 4);
    auto rs = p1_roots(bf);
    REQUIRE(rs.size() == 4);
    CHECK(rs[0].at_infinity);
    CHECK(rs[0].multiplicity == 1);
    for (auto& r : rs) CHECK(r.multiplicity == 1);
    // multiplicity patterns
    auto irr = UniPoly<GF>::from_ints(&F, {1, 0, 1});  // x^2 + 1, irreducible mod 7
    CHECK(root_multiplicity_pattern(BinaryForm<GF>::from_unipoly(irr, 3)) == std::vector<unsigned>{1, 1, 1});
    auto sq = UniPoly<GF>::from_ints(&F, {0, 0, 1});  // x^2 y
    CHECK(root_multiplicity_pattern(BinaryForm<GF>::from_unipoly(sq, 3)) == std::vector<unsigned>{2, 1});
    auto cube = UniPoly<GF>::from_ints(&F, {-1, 3, -3, 1});  // (x - 1)^3
    CHECK(root_multiplicity_pattern(BinaryForm<GF>::from_unipoly(cube, 3)) == std::vector<unsigned>{3});
    auto inf2 = UniPoly<GF>::from_ints(&F, {0, 1});  // x y^2
    CHECK(root_multiplicity_pattern(BinaryForm<GF>::from_unipoly(inf2, 3)) == std::vector<unsigned>{2, 1});
}
