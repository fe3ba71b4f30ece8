// Points and lines in P^3 with exact coordinates.  Lines carry a normalized
// Plücker key used for deduplication; equality of lines is equality of keys.

#ifndef QLINES_PROJECTIVE_HPP
#define QLINES_PROJECTIVE_HPP

#include "qlines/multipoly.hpp"

#include <array>
#include <optional>
#include <vector>

namespace qlines {

struct geometry_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Small dense linear algebra over a field
// ---------------------------------------------------------------------------

// Gaussian elimination; returns the rank, m is left in row-echelon form
template <class F>
int row_reduce(const F& fld, std::vector<std::vector<typename F::Elem>>& m) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && fld.is_zero(m[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        auto inv = fld.inv(m[r][c]);
        for (size_t j = c; j < cols; ++j) m[r][j] = fld.mul(m[r][j], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || fld.is_zero(m[i][c])) continue;
            auto factor = m[i][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] = fld.sub(m[i][j], fld.mul(factor, m[r][j]));
        }
        ++r;
    }
    return (int)r;
}

template <class F>
int mat_rank(const F& fld, std::vector<std::vector<typename F::Elem>> m) {
    return row_reduce(fld, m);
}

// basis of the right kernel
template <class F>
std::vector<std::vector<typename F::Elem>> mat_kernel(const F& fld,
                                                      std::vector<std::vector<typename F::Elem>> m) {
    size_t cols = m.empty() ? 0 : m[0].size();
    row_reduce(fld, m);
    // locate pivot columns
    std::vector<int> pivot_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols; ++c) {
        if (r < m.size() && !fld.is_zero(m[r][c])) {
            pivot_of_col[c] = (int)r;
            ++r;
        }
    }
    std::vector<std::vector<typename F::Elem>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<typename F::Elem> v(cols, fld.zero());
        v[c] = fld.one();
        for (size_t cc = 0; cc < c; ++cc)
            if (pivot_of_col[cc] >= 0) v[cc] = fld.neg(m[pivot_of_col[cc]][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Projective points
// ---------------------------------------------------------------------------

template <class F>
struct ProjPoint {
    using Elem = typename F::Elem;
    const F* fld;
    std::array<Elem, 4> x;

    ProjPoint(const F* f, std::array<Elem, 4> coords) : fld(f), x(std::move(coords)) { normalize(); }

    static ProjPoint from_ints(const F* f, std::array<long long, 4> v) {
        std::array<Elem, 4> c{f->from_int(v[0]), f->from_int(v[1]), f->from_int(v[2]), f->from_int(v[3])};
        return ProjPoint(f, std::move(c));
    }

    void normalize() {
        int lead = -1;
        for (int i = 0; i < 4; ++i)
            if (!fld->is_zero(x[i])) {
                lead = i;
                break;
            }
        if (lead < 0) throw geometry_error("ProjPoint: all coordinates zero");
        auto inv = fld->inv(x[lead]);
        for (int i = 0; i < 4; ++i) x[i] = fld->mul(x[i], inv);
    }

    bool operator==(const ProjPoint& o) const {
        for (int i = 0; i < 4; ++i)
            if (!fld->eq(x[i], o.x[i])) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Projective lines with Plücker keys
// ---------------------------------------------------------------------------

// Plücker index order: (12, 13, 14, 23, 24, 34)
template <class F>
std::array<typename F::Elem, 6> pluecker_of(const F& fld, const std::array<typename F::Elem, 4>& a,
                                            const std::array<typename F::Elem, 4>& b) {
    auto minor = [&](int i, int j) {
        return fld.sub(fld.mul(a[i], b[j]), fld.mul(a[j], b[i]));
    };
    return {minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)};
}

template <class F>
struct ProjLine {
    using Elem = typename F::Elem;
    const F* fld;
    ProjPoint<F> p, q;            // spanning points
    std::array<Elem, 6> pluecker;  // normalized: first nonzero coordinate = 1
    int chart;                     // Grassmannian chart that produced it; -1 if ad hoc

    ProjLine(ProjPoint<F> a, ProjPoint<F> b, int chart_id = -1)
        : fld(a.fld), p(std::move(a)), q(std::move(b)), chart(chart_id) {
        pluecker = pluecker_of(*fld, p.x, q.x);
        int lead = -1;
        for (int i = 0; i < 6; ++i)
            if (!fld->is_zero(pluecker[i])) {
                lead = i;
                break;
            }
        if (lead < 0) throw geometry_error("ProjLine: spanning points are equal");
        auto inv = fld->inv(pluecker[lead]);
        for (int i = 0; i < 6; ++i) pluecker[i] = fld->mul(pluecker[i], inv);
        // Plücker quadric: p12 p34 - p13 p24 + p14 p23 = 0
        auto rel = fld->add(fld->sub(fld->mul(pluecker[0], pluecker[5]), fld->mul(pluecker[1], pluecker[4])),
                            fld->mul(pluecker[2], pluecker[3]));
        if (!fld->is_zero(rel)) throw geometry_error("ProjLine: Plücker relation violated");
    }

    bool operator==(const ProjLine& o) const {
        for (int i = 0; i < 6; ++i)
            if (!fld->eq(pluecker[i], o.pluecker[i])) return false;
        return true;
    }
    bool operator<(const ProjLine& o) const {
        for (int i = 0; i < 6; ++i)
            if (!fld->eq(pluecker[i], o.pluecker[i])) return fld->less(pluecker[i], o.pluecker[i]);
        return false;
    }

    // the two-dimensional space of linear forms vanishing on the line
    std::vector<std::vector<Elem>> vanishing_forms() const {
        std::vector<std::vector<Elem>> m = {{p.x[0], p.x[1], p.x[2], p.x[3]},
                                            {q.x[0], q.x[1], q.x[2], q.x[3]}};
        auto forms = mat_kernel(*fld, m);
        if (forms.size() != 2) throw geometry_error("ProjLine: degenerate span");
        return forms;
    }

    bool contains(const ProjPoint<F>& pt) const {
        std::vector<std::vector<Elem>> m = {{p.x[0], p.x[1], p.x[2], p.x[3]},
                                            {q.x[0], q.x[1], q.x[2], q.x[3]},
                                            {pt.x[0], pt.x[1], pt.x[2], pt.x[3]}};
        return mat_rank(*fld, m) == 2;
    }

    // point at parameter (s:t) = s p + t q
    ProjPoint<F> at(const Elem& s, const Elem& t) const {
        std::array<Elem, 4> c;
        for (int i = 0; i < 4; ++i) c[i] = fld->add(fld->mul(s, p.x[i]), fld->mul(t, q.x[i]));
        return ProjPoint<F>(fld, std::move(c));
    }
};

enum class MeetKind { Disjoint, Point, Equal };

template <class F>
struct MeetResult {
    MeetKind kind;
    std::optional<ProjPoint<F>> point;
};

template <class F>
MeetResult<F> lines_meet(const ProjLine<F>& l1, const ProjLine<F>& l2) {
    const F& fld = *l1.fld;
    std::vector<std::vector<typename F::Elem>> m = {
        {l1.p.x[0], l1.p.x[1], l1.p.x[2], l1.p.x[3]},
        {l1.q.x[0], l1.q.x[1], l1.q.x[2], l1.q.x[3]},
        {l2.p.x[0], l2.p.x[1], l2.p.x[2], l2.p.x[3]},
        {l2.q.x[0], l2.q.x[1], l2.q.x[2], l2.q.x[3]}};
    int rank = mat_rank(fld, m);
    if (rank == 4) return {MeetKind::Disjoint, std::nullopt};
    if (rank == 2) return {MeetKind::Equal, std::nullopt};
    // rank 3: a relation a p1 + b q1 + c p2 + d q2 = 0 yields the point
    std::vector<std::vector<typename F::Elem>> mt(4, std::vector<typename F::Elem>(4));
    for (int i = 0; i < 4; ++i) {
        mt[i][0] = l1.p.x[i];
        mt[i][1] = l1.q.x[i];
        mt[i][2] = l2.p.x[i];
        mt[i][3] = l2.q.x[i];
    }
    auto ker = mat_kernel(fld, mt);
    if (ker.empty()) throw geometry_error("lines_meet: inconsistent rank");
    auto& v = ker[0];
    std::array<typename F::Elem, 4> c;
    for (int i = 0; i < 4; ++i)
        c[i] = fld.add(fld.mul(v[0], l1.p.x[i]), fld.mul(v[1], l1.q.x[i]));
    bool zero = true;
    for (auto& e : c) zero = zero && fld.is_zero(e);
    if (zero)
        for (int i = 0; i < 4; ++i)
            c[i] = fld.add(fld.mul(v[2], l2.p.x[i]), fld.mul(v[3], l2.q.x[i]));
    return {MeetKind::Point, ProjPoint<F>(&fld, std::move(c))};
}

}  // namespace qlines

#endif
