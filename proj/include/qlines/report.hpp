// JSON and plain-text report rendering for the command-line front end.  All
// orderings are inherited from the (sorted) module outputs, so a fixed input
// yields a byte-identical report.

#ifndef QLINES_REPORT_HPP
#define QLINES_REPORT_HPP

#include "qlines/census.hpp"
#include "qlines/fibration.hpp"
#include "qlines/flecnodal.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace qlines {

using nlohmann::json;

inline json field_json(uint64_t p, unsigned k) { return json{{"p", p}, {"k", k}}; }

inline json line_json(const GF& fld, const ProjLine<GF>& L, unsigned def_degree) {
    json pl = json::array();
    for (auto& c : L.pluecker) pl.push_back(fld.to_string(c));
    return json{{"pluecker", pl}, {"def_degree", def_degree}};
}

inline json census_json(const std::string& surface, const CensusResult& census,
                        const IncidenceGraph& graph) {
    const GF& fld = *census.field;
    json lines = json::array();
    for (size_t i = 0; i < census.lines.size(); ++i)
        lines.push_back(line_json(fld, census.lines[i], census.def_degree[i]));
    json triples = json::array();
    for (auto& t : graph.triples)
        triples.push_back(json{{"pivot", t.pivot},
                               {"lines", json::array({t.lines[0], t.lines[1], t.lines[2]})},
                               {"star", t.star}});
    return json{{"surface", surface},
                {"field", field_json(census.p, census.k_max)},
                {"stabilized", census.stabilized},
                {"count", census.lines.size()},
                {"levels", census.count_per_level},
                {"lines", lines},
                {"graph", json{{"degrees", graph.degree}, {"triples", triples}}}};
}

inline std::string census_text(const std::string& surface, const CensusResult& census,
                               const IncidenceGraph& graph) {
    const GF& fld = *census.field;
    std::ostringstream os;
    os << "surface: " << surface << "\n";
    os << "field: F_" << census.p << (census.k_max > 1 ? "^" + std::to_string(census.k_max) : "")
       << (census.stabilized ? " (stabilized tower)" : "") << "\n";
    os << "lines: " << census.lines.size() << "  (per level:";
    for (auto c : census.count_per_level) os << " " << c;
    os << ")\n";
    int stars = 0, triangles = 0;
    for (auto& t : graph.triples) (t.star ? stars : triangles)++;
    os << "coplanar triples: " << triangles << " triangles, " << stars << " stars\n";
    os << "  #  deg  def  pluecker\n";
    for (size_t i = 0; i < census.lines.size(); ++i) {
        os << "  " << i << "  " << graph.degree[i] << "  " << census.def_degree[i] << "  [";
        for (int j = 0; j < 6; ++j)
            os << (j ? ", " : "") << fld.to_string(census.lines[i].pluecker[j]);
        os << "]\n";
    }
    return os.str();
}

inline json fiber_json(const FiberRecord& f) {
    const GF* fld = f.minpoly.field();
    json lines = json::array();
    int per_fiber = 0;
    try {
        per_fiber = line_component_count(f.type);
    } catch (const algebra_error&) {
        per_fiber = -1;  // not a plane-cubic type
    }
    for (unsigned i = 0; i < f.orbit; ++i) lines.push_back(per_fiber);
    return json{{"t", f.at_infinity ? "inf" : f.minpoly.str("t")},
                {"type", kodaira_name(f.type)},
                {"orbit", f.orbit},
                {"ram", f.ram_index},
                {"lines", lines},
                {"euler", euler_number(f.type)},
                {"field", fld ? fld->spec().str() : ""}};
}

inline json fibration_json(const std::string& line_desc, const FibrationReport& rep) {
    json fibers = json::array();
    for (auto& f : rep.fibers) fibers.push_back(fiber_json(f));
    json checks = {{"flex_support", second_kind_fiber_constraints_hold(rep.fibers)}};
    if (rep.kind.second) {
        checks["G_R"] = rep.gr_ok;
        checks["pairing"] = rep.pairing_ok;
    } else {
        checks["G_R"] = nullptr;
        checks["pairing"] = nullptr;
    }
    json out{{"line", line_desc},
             {"kind", rep.kind.second ? "SECOND" : "FIRST"},
             {"R", rep.profile.name},
             {"fibers", fibers},
             {"N", rep.N},
             {"euler", rep.euler_total},
             {"checks", checks}};
    if (!rep.kind.second) out["r_degree"] = rep.kind.r.deg();
    return out;
}

inline std::string fibration_text(const std::string& line_desc, const FibrationReport& rep) {
    std::ostringstream os;
    os << "line: " << line_desc << "\n";
    os << "kind: " << (rep.kind.second ? "SECOND" : "FIRST");
    if (!rep.kind.second) os << "  (deg r = " << rep.kind.r.deg() << ")";
    os << "\n";
    os << "ramification profile: " << rep.profile.name << "\n";
    os << "singular fibers (Euler total " << rep.euler_total << "):\n";
    for (auto& f : rep.fibers) {
        os << "  " << kodaira_name(f.type) << "  at "
           << (f.at_infinity ? "t = inf" : f.minpoly.str("t") + " = 0") << "  orbit " << f.orbit;
        if (f.ram_index) os << "  (ramification index " << f.ram_index + 1 << ")";
        os << "\n";
    }
    os << "lines meeting the base line: N = " << rep.N << "\n";
    if (rep.kind.second)
        os << "checks: G_R " << (rep.gr_ok ? "ok" : "FAIL") << ", pairing "
           << (rep.pairing_ok ? "ok" : "FAIL") << ", flex support "
           << (second_kind_fiber_constraints_hold(rep.fibers) ? "ok" : "FAIL") << "\n";
    return os.str();
}

inline json flecnodal_json(const GF& fld, const FlecnodalSample<GF>& s) {
    json pt = json::array();
    for (auto& c : s.point.x) pt.push_back(fld.to_string(c));
    return json{{"point", pt}, {"member", s.member}, {"res_value", fld.to_string(s.res)}};
}

inline std::string flecnodal_text(const GF& fld, const FlecnodalSample<GF>& s) {
    std::ostringstream os;
    os << "point: (";
    for (int i = 0; i < 4; ++i) os << (i ? " : " : "") << fld.to_string(s.point.x[i]);
    os << ")\n";
    os << "flecnodal member: " << (s.member ? "yes" : "no") << "  (Res(A,B) = "
       << fld.to_string(s.res) << ")\n";
    return os.str();
}

}  // namespace qlines

#endif
