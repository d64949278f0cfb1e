#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <utility>

#include "nodalis/errors.hpp"
#include "nodalis/weierstrass.hpp"

namespace nodalis {

/// Outcome of translating a nodal curve along a non-tangent direction,
/// rendered as identities of formal series in the translation parameter t.
/// c1 and c2 are the reversion outputs: the x-coordinates of the two
/// intersection points in the internal coordinate system where the direction
/// is the Y-axis. q1 and q2 are the points mapped back to the original
/// coordinates. Residual orders are nullopt when the residual vanishes to
/// the full working precision (the expected outcome).
template <FieldElement K>
struct TranslationReport {
    std::pair<K, K> direction;
    std::array<K, 4> change; // row-major matrix of the internal coordinate change
    TruncatedSeries<K> c1, c2;
    std::array<TruncatedSeries<K>, 2> q1, q2; // {x(t), y(t)} in original coordinates
    std::array<std::optional<std::size_t>, 2> on_curve_residual;
    std::array<std::optional<std::size_t>, 2> on_translate_residual;
    std::size_t distinctness_ord = 0;
    std::array<std::size_t, 2> transversality_ord{};
    std::size_t precision = 0;
};

/// True when the line v*X - u*Y = 0 avoids both tangent lines.
template <FieldElement K>
bool check_direction(const std::pair<LinearForm<K>, LinearForm<K>>& tangents, const K& u,
                     const K& v) {
    if (u.is_zero() && v.is_zero()) throw Error("translation direction must be nonzero");
    LinearForm<K> l(v, -u);
    return l != tangents.first && l != tangents.second;
}

template <FieldElement K>
bool check_direction(const BivariatePoly<K>& f, const BranchPair<K>& b, const K& u, const K& v) {
    (void)f;
    return check_direction(branch_tangents(b), u, v);
}

/// The unit U(X) = (eta_1(X) - eta_2(X)) / X; U(0) is the slope difference,
/// nonzero for a valid branch pair.
template <FieldElement K>
TruncatedSeries<K> branch_gap_unit(const BranchPair<K>& b) {
    auto u = (b.eta1 - b.eta2).div_xk(1);
    if (!u.is_unit()) throw std::logic_error("branch gap is not a unit times X");
    return u;
}

namespace detail {

/// Order in t of g_C - g_D along the path, where g_C = -F_X/F_Y evaluated
/// along (x(t), y(t)) and g_D uses the path shifted to (x(t), y(t) - t),
/// which lies on the translated curve. The limits at t = 0 are the two
/// branch slopes, so order 0 is the transversality statement.
template <FieldElement K>
std::size_t gradient_gap_order(const BivariatePoly<K>& f, const TruncatedSeries<K>& x,
                               const TruncatedSeries<K>& y) {
    auto [fx, fy] = f.partials();
    auto grad_along = [&](const TruncatedSeries<K>& px, const TruncatedSeries<K>& py) {
        auto a = fx.evaluate_series(px, py);
        auto bden = fy.evaluate_series(px, py);
        auto k = bden.ord();
        if (!k)
            throw PreconditionError(
                "F_Y vanishes along the intersection path; the gradient is undefined in these "
                "coordinates");
        return (-a.div_xk(*k)) * bden.div_xk(*k).inverse();
    };
    auto t = TruncatedSeries<K>::identity(x.ctx(), std::min(x.precision(), y.precision()));
    auto g_curve = grad_along(x, y);
    auto g_shift = grad_along(x, y - t);
    auto o = (g_curve - g_shift).ord();
    if (!o) throw std::logic_error("gradient gap vanishes to working precision");
    return *o;
}

} // namespace detail

/// Symbolic verification that translating the nodal curve along (u, v)
/// produces exactly two nearby intersection points, one per branch, meeting
/// transversally. Internally the direction is rotated onto the Y-axis;
/// there the two x-coordinates solve (eta_1 - eta_2)(x) = +-t, handled by
/// series reversion of the unit-times-X gap.
template <FieldElement K>
TranslationReport<K> translation_intersections(const BivariatePoly<K>& f,
                                               const std::pair<LinearForm<K>, LinearForm<K>>& tangents,
                                               const K& u, const K& v, std::size_t n) {
    const auto& ctx = f.ctx();
    if (n < 3) throw Error("translation verification needs precision at least 3");
    if (!check_direction(tangents, u, v))
        throw PreconditionError(
            "translation direction lies along a branch tangent; pick a direction off the "
            "tangent cone");
    // columns: any completion, then the direction; translating the image
    // curve by t along the Y-axis matches translating F by t along (u, v).
    std::array<K, 4> m = v.is_zero() ? std::array<K, 4>{ctx.zero(), u, ctx.one(), ctx.zero()}
                                     : std::array<K, 4>{ctx.one(), u, ctx.zero(), v};
    BivariatePoly<K> g = f.linear_change(m[0], m[1], m[2], m[3]);
    auto factored = factor_node_branches(g, n);
    auto* pair = std::get_if<BranchPair<K>>(&factored);
    if (!pair) throw std::logic_error("internal coordinates lost the splitting field");

    auto gap = branch_gap_unit(*pair);
    auto c1 = revert_unit_times_x(gap, n);
    auto c2 = revert_unit_times_x(-gap, n);

    std::array<TruncatedSeries<K>, 2> p1{c1, pair->eta1.compose(c1)};
    std::array<TruncatedSeries<K>, 2> p2{c2, pair->eta2.compose(c2)};
    auto t = TruncatedSeries<K>::identity(ctx, n);

    TranslationReport<K> report{{u, v}, m, c1, c2, p1, p2, {}, {}, 0, {}, n};
    report.on_curve_residual = {g.evaluate_series(p1[0], p1[1]).ord(),
                                g.evaluate_series(p2[0], p2[1]).ord()};
    report.on_translate_residual = {g.evaluate_series(p1[0], p1[1] - t).ord(),
                                    g.evaluate_series(p2[0], p2[1] - t).ord()};
    auto gapord = (c1 - c2).ord();
    if (!gapord) throw std::logic_error("the two intersection points coincide to precision");
    report.distinctness_ord = *gapord;
    report.transversality_ord = {detail::gradient_gap_order(g, p1[0], p1[1]),
                                 detail::gradient_gap_order(g, p2[0], p2[1])};
    auto back = [&](const std::array<TruncatedSeries<K>, 2>& p) {
        return std::array<TruncatedSeries<K>, 2>{p[0].scale(m[0]) + p[1].scale(m[1]),
                                                 p[0].scale(m[2]) + p[1].scale(m[3])};
    };
    report.q1 = back(p1);
    report.q2 = back(p2);
    return report;
}

template <FieldElement K>
TranslationReport<K> translation_intersections(const BivariatePoly<K>& f, const BranchPair<K>& b,
                                               const K& u, const K& v, std::size_t n) {
    return translation_intersections(f, branch_tangents(b), u, v, n);
}

/// Standalone recomputation of the transversality orders for a finished
/// report (both expected to be 0).
template <FieldElement K>
std::array<std::size_t, 2> transversality(const BivariatePoly<K>& f,
                                          const TranslationReport<K>& report) {
    BivariatePoly<K> g = f.linear_change(report.change[0], report.change[1], report.change[2],
                                         report.change[3]);
    auto factored = factor_node_branches(g, report.precision);
    const auto& pair = std::get<BranchPair<K>>(factored);
    return {detail::gradient_gap_order(g, report.c1, pair.eta1.compose(report.c1)),
            detail::gradient_gap_order(g, report.c2, pair.eta2.compose(report.c2))};
}

} // namespace nodalis
