// Sparse multivariate polynomials over a field, stored as a lex-ordered term
// map.  Exact division works by leading-term cancellation, which is all the
// fraction-free determinant code needs.

#ifndef QLINES_MULTIPOLY_HPP
#define QLINES_MULTIPOLY_HPP

#include "qlines/unipoly.hpp"

#include <boost/container/small_vector.hpp>
#include <map>
#include <string>
#include <vector>

namespace qlines {

using ExpVec = boost::container::small_vector<uint32_t, 4>;

template <class F>
class MultiPoly {
public:
    using Elem = typename F::Elem;
    using Terms = std::map<ExpVec, Elem>;

    MultiPoly() : fld_(nullptr), nvars_(0) {}
    MultiPoly(const F* fld, unsigned nvars) : fld_(fld), nvars_(nvars) {}

    static MultiPoly zero(const F* fld, unsigned nvars) { return MultiPoly(fld, nvars); }
    static MultiPoly constant(const F* fld, unsigned nvars, Elem v) {
        MultiPoly r(fld, nvars);
        if (!fld->is_zero(v)) r.t_.emplace(ExpVec(nvars, 0), std::move(v));
        return r;
    }
    static MultiPoly var(const F* fld, unsigned nvars, unsigned i) {
        MultiPoly r(fld, nvars);
        ExpVec e(nvars, 0);
        e[i] = 1;
        r.t_.emplace(std::move(e), fld->one());
        return r;
    }
    static MultiPoly term(const F* fld, unsigned nvars, Elem c, ExpVec e) {
        MultiPoly r(fld, nvars);
        if (!fld->is_zero(c)) r.t_.emplace(std::move(e), std::move(c));
        return r;
    }

    const F* field() const { return fld_; }
    unsigned nvars() const { return nvars_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t nterms() const { return t_.size(); }

    void add_term(const ExpVec& e, const Elem& c) {
        if (fld_->is_zero(c)) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second = fld_->add(it->second, c);
            if (fld_->is_zero(it->second)) t_.erase(it);
        }
    }

    Elem coeff(const ExpVec& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? fld_->zero() : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (auto& [e, c] : t_) {
            int s = 0;
            for (auto x : e) s += (int)x;
            if (s > d) d = s;
        }
        return d;
    }
    int degree_in(unsigned i) const {
        int d = -1;
        for (auto& [e, c] : t_)
            if ((int)e[i] > d) d = (int)e[i];
        return d;
    }
    bool is_homogeneous() const {
        int d = -2;
        for (auto& [e, c] : t_) {
            int s = 0;
            for (auto x : e) s += (int)x;
            if (d == -2) d = s;
            if (s != d) return false;
        }
        return true;
    }
    bool depends_on(unsigned i) const { return degree_in(i) > 0; }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (auto& [e, c] : o.t_) r.add_term(e, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (auto& [e, c] : o.t_) r.add_term(e, fld_->neg(c));
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r(fld_, nvars_);
        for (auto& [e, c] : t_) r.t_.emplace(e, fld_->neg(c));
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r(fld_, nvars_);
        for (auto& [e1, c1] : t_)
            for (auto& [e2, c2] : o.t_) {
                ExpVec e(nvars_);
                for (unsigned i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, fld_->mul(c1, c2));
            }
        return r;
    }
    MultiPoly scaled(const Elem& s) const {
        MultiPoly r(fld_, nvars_);
        if (fld_->is_zero(s)) return r;
        for (auto& [e, c] : t_) r.t_.emplace(e, fld_->mul(c, s));
        return r;
    }
    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(fld_, nvars_, fld_->one());
        for (unsigned i = 0; i < e; ++i) r = r * (*this);
        return r;
    }
    bool operator==(const MultiPoly& o) const {
        if (t_.size() != o.t_.size()) return false;
        auto it = o.t_.begin();
        for (auto& [e, c] : t_) {
            if (e != it->first || !fld_->eq(c, it->second)) return false;
            ++it;
        }
        return true;
    }

    MultiPoly derivative(unsigned i) const {
        MultiPoly r(fld_, nvars_);
        for (auto& [e, c] : t_) {
            if (e[i] == 0) continue;
            ExpVec ne = e;
            --ne[i];
            r.add_term(ne, fld_->mul_scalar(c, e[i]));
        }
        return r;
    }

    Elem eval(const std::vector<Elem>& x) const {
        Elem acc = fld_->zero();
        for (auto& [e, c] : t_) {
            Elem t = c;
            for (unsigned i = 0; i < nvars_; ++i)
                if (e[i]) t = fld_->mul(t, fld_->pow(x[i], (uint64_t)e[i]));
            acc = fld_->add(acc, t);
        }
        return acc;
    }

    // substitute x_i -> sub[i]; the sub polynomials may use any variable count
    MultiPoly subst(const std::vector<MultiPoly>& sub) const {
        unsigned outv = sub.empty() ? nvars_ : sub[0].nvars();
        MultiPoly r(fld_, outv);
        for (auto& [e, c] : t_) {
            MultiPoly t = constant(fld_, outv, c);
            for (unsigned i = 0; i < nvars_; ++i)
                if (e[i]) t = t * sub[i].pow(e[i]);
            r = r + t;
        }
        return r;
    }

    // substitute a constant for variable i (the variable slot remains, exponent 0)
    MultiPoly eval_var(unsigned i, const Elem& v) const {
        MultiPoly r(fld_, nvars_);
        for (auto& [e, c] : t_) {
            ExpVec ne = e;
            ne[i] = 0;
            r.add_term(ne, e[i] ? fld_->mul(c, fld_->pow(v, (uint64_t)e[i])) : c);
        }
        return r;
    }

    // view as univariate in x_i: out[j] = coefficient of x_i^j (with x_i set to 0)
    std::vector<MultiPoly> coefficients_in(unsigned i) const {
        std::vector<MultiPoly> out((size_t)std::max(0, degree_in(i)) + 1, MultiPoly(fld_, nvars_));
        for (auto& [e, c] : t_) {
            ExpVec ne = e;
            ne[i] = 0;
            out[e[i]].add_term(ne, c);
        }
        return out;
    }

    // inverse of coefficients_in
    static MultiPoly from_coefficients_in(const F* fld, unsigned nvars, unsigned i,
                                          const std::vector<MultiPoly>& cs) {
        MultiPoly r(fld, nvars);
        for (size_t j = 0; j < cs.size(); ++j)
            for (auto& [e, c] : cs[j].t_) {
                ExpVec ne = e;
                ne[i] += (uint32_t)j;
                r.add_term(ne, c);
            }
        return r;
    }

    // requires every term to use only variable i
    UniPoly<F> to_unipoly(unsigned i) const {
        std::vector<Elem> c((size_t)std::max(0, degree_in(i)) + 1, fld_->zero());
        for (auto& [e, cf] : t_) {
            for (unsigned j = 0; j < nvars_; ++j)
                if (j != i && e[j]) throw algebra_error("to_unipoly: extra variable present");
            c[e[i]] = cf;
        }
        return UniPoly<F>(fld_, std::move(c));
    }

    static MultiPoly from_unipoly(const UniPoly<F>& f, unsigned nvars, unsigned i) {
        MultiPoly r(f.field(), nvars);
        for (int j = 0; j <= f.deg(); ++j) {
            ExpVec e(nvars, 0);
            e[i] = (uint32_t)j;
            r.add_term(e, f.coeff(j));
        }
        return r;
    }

    // lex-leading term
    std::pair<ExpVec, Elem> lead() const {
        if (t_.empty()) throw algebra_error("lead of zero polynomial");
        auto it = std::prev(t_.end());
        return {it->first, it->second};
    }

    // exact division; throws when the quotient does not exist
    MultiPoly divexact(const MultiPoly& d) const {
        if (d.is_zero()) throw algebra_error("MultiPoly: division by zero");
        MultiPoly r = *this, q(fld_, nvars_);
        auto [de, dc] = d.lead();
        Elem dcinv = fld_->inv(dc);
        while (!r.is_zero()) {
            auto [re, rc] = r.lead();
            ExpVec qe(nvars_);
            for (unsigned i = 0; i < nvars_; ++i) {
                if (re[i] < de[i]) throw algebra_error("MultiPoly: division not exact");
                qe[i] = re[i] - de[i];
            }
            Elem qc = fld_->mul(rc, dcinv);
            MultiPoly t = term(fld_, nvars_, qc, qe);
            q = q + t;
            r = r - t * d;
        }
        return q;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += fld_->to_string(it->second);
            for (unsigned i = 0; i < nvars_; ++i) {
                if (!it->first[i]) continue;
                s += "*" + names[i];
                if (it->first[i] > 1) s += "^" + std::to_string(it->first[i]);
            }
        }
        return s;
    }

private:
    const F* fld_;
    unsigned nvars_;
    Terms t_;
};

// ---------------------------------------------------------------------------
// Ring operation bundles for the fraction-free linear algebra below
// ---------------------------------------------------------------------------

template <class F>
struct FieldOps {
    const F* fld;
    using T = typename F::Elem;
    T zero() const { return fld->zero(); }
    T one() const { return fld->one(); }
    bool is_zero(const T& a) const { return fld->is_zero(a); }
    T add(const T& a, const T& b) const { return fld->add(a, b); }
    T sub(const T& a, const T& b) const { return fld->sub(a, b); }
    T neg(const T& a) const { return fld->neg(a); }
    T mul(const T& a, const T& b) const { return fld->mul(a, b); }
    T mul_int(const T& a, uint64_t s) const { return fld->mul_scalar(a, s); }
    T divexact(const T& a, const T& b) const { return fld->div(a, b); }
};

template <class F>
struct UniPolyOps {
    const F* fld;
    using T = UniPoly<F>;
    T zero() const { return T(fld); }
    T one() const { return T::constant(fld, fld->one()); }
    bool is_zero(const T& a) const { return a.is_zero(); }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T neg(const T& a) const { return -a; }
    T mul(const T& a, const T& b) const { return a * b; }
    T mul_int(const T& a, uint64_t s) const { return a.scaled(fld->mul_scalar(fld->one(), s)); }
    T divexact(const T& a, const T& b) const { return a.divexact(b); }
};

template <class F>
struct MultiPolyOps {
    const F* fld;
    unsigned nvars;
    using T = MultiPoly<F>;
    T zero() const { return T(fld, nvars); }
    T one() const { return T::constant(fld, nvars, fld->one()); }
    bool is_zero(const T& a) const { return a.is_zero(); }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T neg(const T& a) const { return -a; }
    T mul(const T& a, const T& b) const { return a * b; }
    T mul_int(const T& a, uint64_t s) const { return a.scaled(fld->mul_scalar(fld->one(), s)); }
    T divexact(const T& a, const T& b) const { return a.divexact(b); }
};

// Bareiss fraction-free determinant.  Works over any integral domain whose
// ops bundle provides exact division; row swaps flip the sign.
template <class Ops>
typename Ops::T bareiss_det(std::vector<std::vector<typename Ops::T>> m, const Ops& ops) {
    size_t n = m.size();
    if (n == 0) return ops.one();
    for (auto& row : m)
        if (row.size() != n) throw algebra_error("bareiss_det: matrix not square");
    bool negate = false;
    typename Ops::T prev = ops.one();
    for (size_t k = 0; k + 1 < n; ++k) {
        if (ops.is_zero(m[k][k])) {
            size_t s = k + 1;
            while (s < n && ops.is_zero(m[s][k])) ++s;
            if (s == n) return ops.zero();
            std::swap(m[k], m[s]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                auto num = ops.sub(ops.mul(m[i][j], m[k][k]), ops.mul(m[i][k], m[k][j]));
                m[i][j] = ops.divexact(num, prev);
            }
            m[i][k] = ops.zero();
        }
        prev = m[k][k];
    }
    return negate ? ops.neg(m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// Sylvester matrix of a (degree da, rows on top) and b, entries produced by
// the coefficient accessors; shared by the formal-degree resultants.
template <class T, class CoeffA, class CoeffB>
std::vector<std::vector<T>> sylvester_matrix(int da, int db, CoeffA ca, CoeffB cb, const T& zero) {
    int n = da + db;
    std::vector<std::vector<T>> m(n, std::vector<T>(n, zero));
    for (int r = 0; r < db; ++r)
        for (int i = 0; i <= da; ++i) m[r][r + da - i] = ca(i);
    for (int r = 0; r < da; ++r)
        for (int i = 0; i <= db; ++i) m[db + r][r + db - i] = cb(i);
    return m;
}

// Resultant of f and g with respect to variable i, eliminating it.  Degrees
// are the true degrees in x_i; entries live in the remaining variables.
template <class F>
MultiPoly<F> resultant_in(const MultiPoly<F>& f, const MultiPoly<F>& g, unsigned i) {
    const F* fld = f.field();
    unsigned nv = f.nvars();
    int da = f.degree_in(i), db = g.degree_in(i);
    if (da < 0 || db < 0) throw algebra_error("resultant_in: zero input");
    MultiPolyOps<F> ops{fld, nv};
    if (da == 0 && db == 0) return ops.one();
    auto fc = f.coefficients_in(i);
    auto gc = g.coefficients_in(i);
    auto ca = [&](int j) { return fc[j]; };
    auto cb = [&](int j) { return gc[j]; };
    auto m = sylvester_matrix<MultiPoly<F>>(da, db, ca, cb, ops.zero());
    return bareiss_det(m, ops);
}

// Determinant of the Hessian matrix of second partials.
template <class F>
MultiPoly<F> hessian_determinant(const MultiPoly<F>& f) {
    const F* fld = f.field();
    unsigned n = f.nvars();
    std::vector<std::vector<MultiPoly<F>>> h(n, std::vector<MultiPoly<F>>(n, MultiPoly<F>(fld, n)));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) h[i][j] = h[j][i] = f.derivative(i).derivative(j);
    return bareiss_det(h, MultiPolyOps<F>{fld, n});
}

// x_i -> sum_j a[i][j] x_j
template <class F>
MultiPoly<F> compose_linear(const MultiPoly<F>& f, const std::vector<std::vector<typename F::Elem>>& a) {
    const F* fld = f.field();
    unsigned n = f.nvars();
    std::vector<MultiPoly<F>> sub;
    for (unsigned i = 0; i < n; ++i) {
        MultiPoly<F> s(fld, n);
        for (unsigned j = 0; j < n; ++j)
            s = s + MultiPoly<F>::var(fld, n, j).scaled(a[i][j]);
        sub.push_back(s);
    }
    return f.subst(sub);
}

}  // namespace qlines

#endif
