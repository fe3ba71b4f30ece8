// The rational field, with the same operation surface as GF so the
// polynomial layer can be instantiated over either.

#ifndef QLINES_RATIONAL_HPP
#define QLINES_RATIONAL_HPP

#include "qlines/gf.hpp"

#include <gmpxx.h>
#include <string>

namespace qlines {

class QF {
public:
    using Elem = mpq_class;

    FieldSpec spec() const { return FieldSpec::rationals(); }
    uint64_t p() const { return 0; }
    unsigned k() const { return 1; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem((long)v); }
    Elem from_rational(const mpq_class& r) const { return r; }

    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem mul_scalar(const Elem& a, uint64_t s) const { return a * Elem((unsigned long)s); }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw field_error("division by zero in Q");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    Elem pow(const Elem& a, uint64_t e) const {
        Elem r(1), base = a;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    bool less(const Elem& a, const Elem& b) const { return a < b; }

private:
    const Elem& inv_guard(const Elem& b) const {
        if (is_zero(b)) throw field_error("division by zero in Q");
        return b;
    }
};

}  // namespace qlines

#endif
