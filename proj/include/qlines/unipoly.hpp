// Dense univariate polynomials over a field (GF or QF).
//
// Resultants follow the Sylvester-determinant convention with the rows of the
// first argument on top; discriminant(a) = (-1)^(d(d-1)/2) res(a,a')/lc(a).

#ifndef QLINES_UNIPOLY_HPP
#define QLINES_UNIPOLY_HPP

#include "qlines/gf.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qlines {

struct algebra_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
class UniPoly {
public:
    using Elem = typename F::Elem;

    UniPoly() : fld_(nullptr) {}
    explicit UniPoly(const F* fld) : fld_(fld) {}
    UniPoly(const F* fld, std::vector<Elem> coeffs) : fld_(fld), c_(std::move(coeffs)) { trim(); }

    static UniPoly zero(const F* fld) { return UniPoly(fld); }
    static UniPoly constant(const F* fld, Elem v) { return UniPoly(fld, {std::move(v)}); }
    static UniPoly x(const F* fld) { return UniPoly(fld, {fld->zero(), fld->one()}); }
    // c0 + c1 x + ... from small ints
    static UniPoly from_ints(const F* fld, std::initializer_list<long long> v) {
        std::vector<Elem> c;
        for (auto i : v) c.push_back(fld->from_int(i));
        return UniPoly(fld, std::move(c));
    }

    const F* field() const { return fld_; }
    int deg() const { return (int)c_.size() - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : fld_->zero(); }
    const Elem& lc() const { return c_.back(); }

    void set_coeff(int i, Elem v) {
        if (i >= (int)c_.size()) c_.resize(i + 1, fld_->zero());
        c_[i] = std::move(v);
        trim();
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<Elem> r(std::max(c_.size(), o.c_.size()), fld_->zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = fld_->add(r[i], o.c_[i]);
        return UniPoly(fld_, std::move(r));
    }
    UniPoly operator-(const UniPoly& o) const {
        std::vector<Elem> r(std::max(c_.size(), o.c_.size()), fld_->zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = fld_->sub(r[i], o.c_[i]);
        return UniPoly(fld_, std::move(r));
    }
    UniPoly operator-() const {
        std::vector<Elem> r;
        r.reserve(c_.size());
        for (auto& x : c_) r.push_back(fld_->neg(x));
        return UniPoly(fld_, std::move(r));
    }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly(fld_);
        std::vector<Elem> r(c_.size() + o.c_.size() - 1, fld_->zero());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (fld_->is_zero(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = fld_->add(r[i + j], fld_->mul(c_[i], o.c_[j]));
        }
        return UniPoly(fld_, std::move(r));
    }
    UniPoly scaled(const Elem& s) const {
        std::vector<Elem> r;
        r.reserve(c_.size());
        for (auto& x : c_) r.push_back(fld_->mul(x, s));
        return UniPoly(fld_, std::move(r));
    }
    bool operator==(const UniPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!fld_->eq(c_[i], o.c_[i])) return false;
        return true;
    }

    // quotient and remainder; the divisor must be nonzero
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const {
        if (d.is_zero()) throw algebra_error("UniPoly: division by zero polynomial");
        UniPoly q(fld_), r = *this;
        Elem lcinv = fld_->inv(d.lc());
        while (r.deg() >= d.deg()) {
            int shift = r.deg() - d.deg();
            Elem c = fld_->mul(r.lc(), lcinv);
            q.set_coeff(shift, c);
            for (int i = 0; i <= d.deg(); ++i)
                r.c_[shift + i] = fld_->sub(r.c_[shift + i], fld_->mul(c, d.c_[i]));
            r.trim();
            if (r.is_zero()) break;
        }
        return {q, r};
    }
    UniPoly rem(const UniPoly& d) const { return divrem(d).second; }
    UniPoly quo(const UniPoly& d) const { return divrem(d).first; }

    // exact division; throws if the remainder is nonzero
    UniPoly divexact(const UniPoly& d) const {
        auto [q, r] = divrem(d);
        if (!r.is_zero()) throw algebra_error("UniPoly: division not exact");
        return q;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(fld_->inv(lc()));
    }

    UniPoly derivative() const {
        if (deg() < 1) return UniPoly(fld_);
        std::vector<Elem> r(c_.size() - 1, fld_->zero());
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = fld_->mul_scalar(c_[i], (uint64_t)i);
        return UniPoly(fld_, std::move(r));
    }

    Elem eval(const Elem& x) const {
        Elem acc = fld_->zero();
        for (size_t i = c_.size(); i-- > 0;) acc = fld_->add(fld_->mul(acc, x), c_[i]);
        return acc;
    }

    // f(x + a)
    UniPoly taylor_shift(const Elem& a) const {
        UniPoly r(fld_);
        UniPoly lin = UniPoly(fld_, {a, fld_->one()});
        for (size_t i = c_.size(); i-- > 0;) {
            r = r * lin;
            r = r + constant(fld_, c_[i]);
        }
        return r;
    }

    // reverse of coefficients up to formal degree d (x^d f(1/x))
    UniPoly reversed(int d) const {
        std::vector<Elem> r(d + 1, fld_->zero());
        for (int i = 0; i <= deg() && i <= d; ++i) r[d - i] = c_[i];
        return UniPoly(fld_, std::move(r));
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (fld_->is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            s += fld_->to_string(c_[i]);
            if (i >= 1) s += "*" + var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && fld_->is_zero(c_.back())) c_.pop_back();
    }

    const F* fld_;
    std::vector<Elem> c_;
};

template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
    while (!b.is_zero()) {
        UniPoly<F> r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// res(a,b) via the Euclidean PRS, tracking the Sylvester-determinant value.
template <class F>
typename F::Elem resultant(UniPoly<F> a, UniPoly<F> b) {
    const F* fld = a.field() ? a.field() : b.field();
    if (!fld) throw algebra_error("resultant: no field");
    if (a.is_zero() && b.is_zero()) throw algebra_error("resultant: both inputs zero");
    if (a.is_zero() || b.is_zero()) {
        // res(0, b) = 0 unless the other is a nonzero constant (empty matrix)
        const UniPoly<F>& nz = a.is_zero() ? b : a;
        return nz.deg() == 0 ? fld->one() : fld->zero();
    }
    typename F::Elem acc = fld->one();
    bool negate = false;
    while (true) {
        if (b.deg() == 0) {
            acc = fld->mul(acc, fld->pow(b.lc(), (uint64_t)a.deg()));
            break;
        }
        if (a.deg() < b.deg()) {
            if ((a.deg() % 2) && (b.deg() % 2)) negate = !negate;
            std::swap(a, b);
            continue;
        }
        UniPoly<F> r = a.rem(b);
        if (r.is_zero()) return fld->zero();
        // res(a,b) = (-1)^(da db) lc(b)^(da - dr) res(b,r)
        if ((a.deg() % 2) && (b.deg() % 2)) negate = !negate;
        acc = fld->mul(acc, fld->pow(b.lc(), (uint64_t)(a.deg() - r.deg())));
        a = std::move(b);
        b = std::move(r);
    }
    return negate ? fld->neg(acc) : acc;
}

template <class F>
typename F::Elem discriminant(const UniPoly<F>& a) {
    const F* fld = a.field();
    if (a.deg() < 2) throw algebra_error("discriminant: degree must be >= 2");
    UniPoly<F> da = a.derivative();
    typename F::Elem r = resultant(a, da);
    r = fld->div(r, a.lc());
    int d = a.deg();
    if (((uint64_t)d * (d - 1) / 2) % 2) r = fld->neg(r);
    return r;
}

// base^e mod m
template <class F>
UniPoly<F> pow_mod(UniPoly<F> base, uint64_t e, const UniPoly<F>& m) {
    UniPoly<F> r = UniPoly<F>::constant(base.field(), base.field()->one());
    base = base.rem(m);
    while (e) {
        if (e & 1) r = (r * base).rem(m);
        base = (base * base).rem(m);
        e >>= 1;
    }
    return r;
}

}  // namespace qlines

#endif
