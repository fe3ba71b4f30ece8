// Kodaira fiber types for genus-1 fibrations with the lookup data used by the
// fibration analysis: Euler numbers, line-component counts, behaviour under
// cyclic base change, and the flex-locus support table.

#ifndef QLINES_KODAIRA_HPP
#define QLINES_KODAIRA_HPP

#include "qlines/unipoly.hpp"

#include <string>

namespace qlines {

enum class FiberType {
    Smooth,      // I_0
    I1,
    I2,
    I3,
    II,
    III,
    IV,
    IVstar,
    I0star,
    IIIstar,
    In,          // general I_n, n from the companion field
    Pathological
};

struct Kodaira {
    FiberType t = FiberType::Smooth;
    int n = 0;                 // only meaningful for FiberType::In
    std::string reason;        // only for Pathological

    static Kodaira smooth() { return {FiberType::Smooth, 0, {}}; }
    static Kodaira in(int n) {
        if (n == 0) return {FiberType::Smooth, 0, {}};
        if (n == 1) return {FiberType::I1, 0, {}};
        if (n == 2) return {FiberType::I2, 0, {}};
        if (n == 3) return {FiberType::I3, 0, {}};
        return {FiberType::In, n, {}};
    }
    static Kodaira pathological(std::string why) { return {FiberType::Pathological, 0, std::move(why)}; }

    bool operator==(const Kodaira& o) const { return t == o.t && n == o.n; }
};

inline int euler_number(const Kodaira& k) {
    switch (k.t) {
        case FiberType::Smooth: return 0;
        case FiberType::I1: return 1;
        case FiberType::I2: return 2;
        case FiberType::I3: return 3;
        case FiberType::II: return 2;
        case FiberType::III: return 3;
        case FiberType::IV: return 4;
        case FiberType::IVstar: return 8;
        case FiberType::I0star: return 6;
        case FiberType::IIIstar: return 9;
        case FiberType::In: return k.n;
        case FiberType::Pathological: break;
    }
    throw algebra_error("euler_number: pathological fiber");
}

// lines among the components of a plane-cubic fiber
inline int line_component_count(const Kodaira& k) {
    switch (k.t) {
        case FiberType::Smooth:
        case FiberType::I1:
        case FiberType::II: return 0;
        case FiberType::I2:
        case FiberType::III: return 1;
        case FiberType::I3:
        case FiberType::IV: return 3;
        default: break;
    }
    throw algebra_error("line_component_count: not a plane-cubic fiber type");
}

inline bool is_semistable(const Kodaira& k) {
    return k.t == FiberType::I1 || k.t == FiberType::I2 || k.t == FiberType::I3 ||
           k.t == FiberType::In;
}

inline bool is_reducible_fiber(const Kodaira& k) {
    switch (k.t) {
        case FiberType::Smooth:
        case FiberType::I1:
        case FiberType::II: return false;
        case FiberType::I2:
        case FiberType::I3:
        case FiberType::III:
        case FiberType::IV: return true;
        default: break;
    }
    throw algebra_error("is_reducible_fiber: not a plane-cubic fiber type");
}

inline std::string kodaira_name(const Kodaira& k) {
    switch (k.t) {
        case FiberType::Smooth: return "I0";
        case FiberType::I1: return "I1";
        case FiberType::I2: return "I2";
        case FiberType::I3: return "I3";
        case FiberType::II: return "II";
        case FiberType::III: return "III";
        case FiberType::IV: return "IV";
        case FiberType::IVstar: return "IV*";
        case FiberType::I0star: return "I0*";
        case FiberType::IIIstar: return "III*";
        case FiberType::In: return "I" + std::to_string(k.n);
        case FiberType::Pathological: return "pathological(" + k.reason + ")";
    }
    return "?";
}

// fiber type after a cyclic base change of degree d totally ramified at the
// fiber in question
inline Kodaira base_change_type(const Kodaira& k, int d) {
    if (d != 1 && d != 2 && d != 3) throw algebra_error("base_change_type: degree must be 1, 2 or 3");
    if (d == 1) return k;
    switch (k.t) {
        case FiberType::Smooth: return Kodaira::smooth();
        case FiberType::I1: return Kodaira::in(d);
        case FiberType::I2: return Kodaira::in(2 * d);
        case FiberType::I3: return Kodaira::in(3 * d);
        case FiberType::In: return Kodaira::in(k.n * d);
        case FiberType::II: return d == 2 ? Kodaira{FiberType::IV, 0, {}} : Kodaira{FiberType::I0star, 0, {}};
        case FiberType::III: return d == 2 ? Kodaira{FiberType::I0star, 0, {}} : Kodaira{FiberType::IIIstar, 0, {}};
        case FiberType::IV: return d == 2 ? Kodaira{FiberType::IVstar, 0, {}} : Kodaira::smooth();
        default: break;
    }
    throw algebra_error("base_change_type: unsupported fiber type");
}

// Where the closure of the flex locus of the smooth fibers meets a singular
// fiber.  `smooth_points_per_component` lists the count on each component;
// `singular_locus` names the singular point(s) included.
struct FlexSupport {
    std::vector<int> smooth_points_per_component;
    std::string singular_locus;
};

inline FlexSupport flex_support(const Kodaira& k) {
    switch (k.t) {
        case FiberType::I1: return {{3}, "the node"};
        case FiberType::I2: return {{3, 0}, "both nodes"};  // smooth points on the line component
        case FiberType::I3: return {{3, 3, 3}, ""};
        case FiberType::II: return {{1}, "the cusp"};
        case FiberType::III: return {{1, 0}, "the tacnode"};  // smooth point on the line component
        case FiberType::IV: return {{1, 1, 1}, "the triple point"};
        default: break;
    }
    throw algebra_error("flex_support: no table row for this fiber type");
}

}  // namespace qlines

#endif
