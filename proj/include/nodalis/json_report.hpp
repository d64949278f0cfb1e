#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "nodalis/intersect.hpp"
#include "nodalis/node.hpp"
#include "nodalis/prime_field.hpp"
#include "nodalis/quad_ext.hpp"
#include "nodalis/rational.hpp"
#include "nodalis/translate.hpp"

// JSON rendering of the report types. All field elements are serialized as
// exact strings; no value in a report is ever a float.

namespace nodalis {

using Json = nlohmann::json;

inline Json field_json(const Rational::Ctx&) { return Json{{"kind", "rationals"}}; }

inline Json field_json(const Fp::Ctx& ctx) {
    return Json{{"kind", "prime_field"}, {"p", std::to_string(ctx.p)}};
}

inline Json field_json(const QuadExt<Rational>::Ctx& ctx) {
    return Json{{"kind", "quadratic_extension"},
                {"base", field_json(ctx.base)},
                {"d", to_string(ctx.d)}};
}

inline Json field_json(const QuadExt<Fp>::Ctx& ctx) {
    return Json{{"kind", "quadratic_extension"},
                {"base", field_json(ctx.base)},
                {"d", to_string(ctx.d)}};
}

template <FieldElement K>
Json series_json(const TruncatedSeries<K>& s, const std::string& var = "X") {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
    return Json{{"coefficients", coeffs},
                {"precision", s.precision()},
                {"rendered", s.to_string(var)}};
}

/// Finite orders are integers; an order at or past the precision is the
/// string "at_least_<N>".
inline Json ord_json(const std::optional<std::size_t>& o, std::size_t precision) {
    if (o) return Json(*o);
    return Json("at_least_" + std::to_string(precision));
}

/// Finite multiplicities are integers; a line lying on the curve reports
/// "infinite".
inline Json multiplicity_json(const std::optional<std::size_t>& m) {
    if (m) return Json(*m);
    return Json("infinite");
}

template <FieldElement K>
Json point_json(const AffinePoint<K>& p) {
    return Json::array({to_string(p.x), to_string(p.y)});
}

template <FieldElement K>
Json node_report_json(const NodeReport<K>& r) {
    Json j{{"point", point_json(r.point)}, {"classification", to_string(r.classification)}};
    if (r.tangent_cone)
        j["tangent_cone"] =
            Json::array({r.tangent_cone->first.to_string(), r.tangent_cone->second.to_string()});
    if (r.extension_needed) j["extension_needed"] = to_string(*r.extension_needed);
    if (r.line_survey) {
        Json survey = Json::array();
        for (const auto& [line, mult] : *r.line_survey)
            survey.push_back(Json{{"line", line.to_string()}, {"multiplicity", multiplicity_json(mult)}});
        j["line_survey"] = survey;
    }
    return j;
}

template <FieldElement K>
Json branch_pair_json(const BranchPair<K>& b) {
    return Json{{"eta1", series_json(b.eta1)},
                {"eta2", series_json(b.eta2)},
                {"precision", b.precision},
                {"slopes", Json::array({to_string(b.slopes.first), to_string(b.slopes.second)})},
                {"tangents", Json::array({branch_tangents(b).first.to_string(),
                                          branch_tangents(b).second.to_string()})}};
}

template <FieldElement K>
Json intersection_report_json(const IntersectionReport<K>& r) {
    Json j{{"per_branch", Json::array({multiplicity_json(r.per_branch[0]),
                                       multiplicity_json(r.per_branch[1])})},
           {"total", multiplicity_json(r.total)},
           {"containment", r.containment},
           {"branch_vanishes", Json::array({r.branch_vanishes[0], r.branch_vanishes[1]})},
           {"through_node", r.through_node},
           {"precision_used", r.precision_used}};
    if (r.oracle_total) j["oracle_total"] = *r.oracle_total;
    if (r.contact) j["contact"] = to_string(*r.contact);
    return j;
}

template <FieldElement K>
Json translation_report_json(const TranslationReport<K>& r) {
    Json change = Json::array();
    for (const auto& m : r.change) change.push_back(to_string(m));
    return Json{
        {"direction", Json::array({to_string(r.direction.first), to_string(r.direction.second)})},
        {"coordinate_change", change},
        {"c1", series_json(r.c1, "t")},
        {"c2", series_json(r.c2, "t")},
        {"q1", Json::array({series_json(r.q1[0], "t"), series_json(r.q1[1], "t")})},
        {"q2", Json::array({series_json(r.q2[0], "t"), series_json(r.q2[1], "t")})},
        {"q_on_C_residual", Json::array({ord_json(r.on_curve_residual[0], r.precision),
                                         ord_json(r.on_curve_residual[1], r.precision)})},
        {"q_on_Ct_residual", Json::array({ord_json(r.on_translate_residual[0], r.precision),
                                          ord_json(r.on_translate_residual[1], r.precision)})},
        {"distinctness_ord", r.distinctness_ord},
        {"transversality_ord", Json::array({r.transversality_ord[0], r.transversality_ord[1]})},
        {"precision", r.precision}};
}

} // namespace nodalis
