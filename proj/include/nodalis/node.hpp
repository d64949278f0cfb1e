#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nodalis/errors.hpp"
#include "nodalis/poly.hpp"

namespace nodalis {

enum class PointClass {
    not_on_curve,
    smooth,
    ordinary_double_point,
    other_singular,
    needs_extension, // tangent cone splits only after adjoining a square root
};

inline std::string to_string(PointClass c) {
    switch (c) {
        case PointClass::not_on_curve: return "not_on_curve";
        case PointClass::smooth: return "smooth";
        case PointClass::ordinary_double_point: return "ordinary_double_point";
        case PointClass::other_singular: return "other_singular";
        case PointClass::needs_extension: return "needs_extension";
    }
    return "?";
}

/// Infinite multiplicity (the line is a component through the point) is the
/// nullopt sentinel wherever a line multiplicity is optional.
template <FieldElement K>
struct NodeReport {
    AffinePoint<K> point;
    PointClass classification;
    std::optional<std::pair<LinearForm<K>, LinearForm<K>>> tangent_cone;
    std::optional<K> extension_needed;
    std::optional<std::vector<std::pair<LinearForm<K>, std::optional<std::size_t>>>> line_survey;
};

/// Classifies the marked point of F: off the curve, smooth, an ordinary
/// double point (lowest homogeneous part of degree 2 with distinct linear
/// factors), or some worse singularity. A tangent cone that only splits over
/// a quadratic extension is reported as needs_extension rather than silently
/// extending the field.
template <FieldElement K>
NodeReport<K> classify_point(const BivariatePoly<K>& f, const AffinePoint<K>& p) {
    if (f.is_zero()) throw Error("cannot classify points of the zero polynomial");
    NodeReport<K> report{p, PointClass::not_on_curve, std::nullopt, std::nullopt, std::nullopt};
    BivariatePoly<K> g = f.translate_to_origin(p);
    if (!g.coeff(0, 0).is_zero()) return report;
    if (!g.homogeneous_part(1).is_zero()) {
        report.classification = PointClass::smooth;
        return report;
    }
    BivariatePoly<K> cone = g.homogeneous_part(2);
    if (cone.is_zero()) {
        report.classification = PointClass::other_singular;
        return report;
    }
    auto split = split_binary_quadratic(cone);
    if (auto* ext = std::get_if<NeedsExtension<K>>(&split)) {
        report.classification = PointClass::needs_extension;
        report.extension_needed = ext->d;
        return report;
    }
    const auto& s = std::get<QuadraticSplit<K>>(split);
    if (s.distinct) {
        report.classification = PointClass::ordinary_double_point;
        report.tangent_cone = std::make_pair(s.l1, s.l2);
    } else {
        report.classification = PointClass::other_singular;
    }
    return report;
}

template <FieldElement K>
std::vector<NodeReport<K>> classify_points(const BivariatePoly<K>& f,
                                           const std::vector<AffinePoint<K>>& candidates) {
    std::vector<NodeReport<K>> out;
    out.reserve(candidates.size());
    for (const auto& p : candidates) out.push_back(classify_point(f, p));
    return out;
}

/// Intersection multiplicity of F with the line l at p: the order of the
/// restriction of the translated curve to l. nullopt = the restriction
/// vanishes identically (l is a component of F).
template <FieldElement K>
std::optional<std::size_t> line_multiplicity(const BivariatePoly<K>& f, const AffinePoint<K>& p,
                                             const LinearForm<K>& l) {
    auto restriction = restrict_to_line(f.translate_to_origin(p), l);
    return restriction.poly.ord();
}

/// Deterministic line sample at p: the tangent-cone lines (when known) plus
/// the lines of slope 0, 1, -1, 2, 3, duplicates removed.
template <FieldElement K>
std::vector<LinearForm<K>> default_line_sample(
    const typename K::Ctx& ctx,
    const std::optional<std::pair<LinearForm<K>, LinearForm<K>>>& cone) {
    std::vector<LinearForm<K>> sample;
    auto push = [&](const LinearForm<K>& l) {
        for (const auto& s : sample)
            if (s == l) return;
        sample.push_back(l);
    };
    if (cone) {
        push(cone->first);
        push(cone->second);
    }
    for (long long s : {0, 1, -1, 2, 3}) push(LinearForm<K>::with_slope(ctx, ctx.from_int(s)));
    return sample;
}

/// Finite-sample version of the line characterization of an ordinary double
/// point: true exactly when precisely two sampled lines meet the curve with
/// multiplicity above 2 and every other sampled line meets it with
/// multiplicity exactly 2. An identically vanishing restriction (the line is
/// a component) counts as multiplicity above 2.
template <FieldElement K>
bool verify_odp_by_lines(const BivariatePoly<K>& f, const AffinePoint<K>& p,
                         const std::vector<LinearForm<K>>& sample) {
    std::vector<LinearForm<K>> distinct;
    for (const auto& l : sample) {
        bool seen = false;
        for (const auto& d : distinct) seen = seen || d == l;
        if (!seen) distinct.push_back(l);
    }
    if (distinct.size() < 5)
        throw Error("degenerate line sample: need the two candidate tangents plus at least 3 "
                    "other distinct lines");
    std::size_t above = 0;
    for (const auto& l : distinct) {
        auto m = line_multiplicity(f, p, l);
        if (!m || *m > 2)
            ++above;
        else if (*m != 2)
            return false;
    }
    return above == 2;
}

} // namespace nodalis
