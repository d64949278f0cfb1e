#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nodalis/errors.hpp"
#include "nodalis/weierstrass.hpp"

namespace nodalis {

enum class Contact { transverse, tangent_to_branch_1, tangent_to_branch_2, tangent_to_both };

inline std::string to_string(Contact c) {
    switch (c) {
        case Contact::transverse: return "transverse";
        case Contact::tangent_to_branch_1: return "tangent_to_branch_1";
        case Contact::tangent_to_branch_2: return "tangent_to_branch_2";
        case Contact::tangent_to_both: return "tangent_to_both";
    }
    return "?";
}

/// Intersection data of a second curve H with the node of F at the origin.
/// per_branch entries and total are nullopt when the corresponding
/// substituted series vanishes to full precision (H contains that branch, or
/// all of F when containment is set).
template <FieldElement K>
struct IntersectionReport {
    std::array<std::optional<std::size_t>, 2> per_branch;
    std::optional<std::size_t> total;
    bool containment = false;
    std::array<bool, 2> branch_vanishes{false, false};
    bool through_node = true;
    std::size_t precision_used = 0;
    std::optional<std::size_t> oracle_total;
    std::optional<Contact> contact;
};

/// Order in T of H(T, eta(T)); nullopt when the order reaches the bound,
/// which signals containment of the branch or insufficient precision --
/// callers disambiguate with divides().
template <FieldElement K>
std::optional<std::size_t> branch_multiplicity(const BivariatePoly<K>& h,
                                               const TruncatedSeries<K>& eta,
                                               std::size_t bound) {
    if (eta.precision() < bound)
        throw InsufficientPrecision("branch parametrization precision below the requested bound");
    auto t = TruncatedSeries<K>::identity(eta.ctx(), eta.precision());
    auto o = h.evaluate_series(t, eta).ord();
    if (o && *o < bound) return o;
    return std::nullopt;
}

/// Smooth-contact classification: compares the tangent line of H at the
/// origin with the two branch tangents through the dual pairing
/// H_X(0,0) + H_Y(0,0) * eta_j'(0), and cross-checks against the branch
/// multiplicities (order above 1 exactly when the pairing vanishes).
template <FieldElement K>
Contact classify_smooth_contact(const BivariatePoly<K>& f, const BivariatePoly<K>& h,
                                const BranchPair<K>& b) {
    (void)f;
    auto [hx, hy] = h.partials();
    K gx = hx.coeff(0, 0), gy = hy.coeff(0, 0);
    if (!h.coeff(0, 0).is_zero())
        throw PreconditionError("H does not pass through the origin");
    if (gx.is_zero() && gy.is_zero())
        throw PreconditionError(
            "H is singular at the origin; smooth-contact classification is unavailable (only "
            "the total >= 2 bound applies)");
    bool t1 = (gx + gy * b.slopes.first).is_zero();
    bool t2 = (gx + gy * b.slopes.second).is_zero();
    std::size_t bound = std::min<std::size_t>(b.precision, 3);
    auto m1 = branch_multiplicity(h, b.eta1, bound);
    auto m2 = branch_multiplicity(h, b.eta2, bound);
    bool deep1 = !m1 || *m1 > 1;
    bool deep2 = !m2 || *m2 > 1;
    if (deep1 != t1 || deep2 != t2)
        throw std::logic_error("smooth-contact: dual pairing disagrees with branch orders");
    if (t1 && t2) return Contact::tangent_to_both;
    if (t1) return Contact::tangent_to_branch_1;
    if (t2) return Contact::tangent_to_branch_2;
    return Contact::transverse;
}

/// Total intersection multiplicity of F and H at the origin, via the order
/// of the resultant after a shear that (a) makes both leading Y-coefficients
/// constant and (b) leaves the origin as the only common point over X = 0.
/// Shear candidates are tried in a fixed order, so results are reproducible.
template <FieldElement K>
std::size_t oracle_total_multiplicity(const BivariatePoly<K>& f, const BivariatePoly<K>& h) {
    const auto& ctx = f.ctx();
    if (!f.coeff(0, 0).is_zero() || !h.coeff(0, 0).is_zero()) return 0;
    BivariatePoly<K> ftop = f.homogeneous_part(f.degree());
    BivariatePoly<K> htop = h.homogeneous_part(h.degree());

    std::vector<std::pair<K, K>> directions; // candidate images (m12, m22) of Y
    directions.emplace_back(ctx.zero(), ctx.one());
    for (long long a = 1; a <= 24; ++a) {
        directions.emplace_back(ctx.from_int(a), ctx.one());
        directions.emplace_back(ctx.from_int(-a), ctx.one());
    }
    directions.emplace_back(ctx.one(), ctx.zero());

    for (const auto& [c1, c2] : directions) {
        if (ftop.evaluate(c1, c2).is_zero() || htop.evaluate(c1, c2).is_zero()) continue;
        K m11 = c2.is_zero() ? ctx.zero() : ctx.one();
        K m21 = c2.is_zero() ? ctx.one() : ctx.zero();
        BivariatePoly<K> fs = f.linear_change(m11, c1, m21, c2);
        BivariatePoly<K> hs = h.linear_change(m11, c1, m21, c2);
        auto g = poly_gcd(fs.coeff_of_x(0), hs.coeff_of_x(0));
        if (g.is_zero() || g.ord() != static_cast<std::size_t>(g.degree()))
            continue; // another common point over X = 0; try the next shear
        auto r = resultant_y(fs, hs);
        if (r.is_zero())
            throw PreconditionError("curves share a common component (resultant vanishes)");
        return *r.ord();
    }
    throw PreconditionError("no admissible shear found for the resultant oracle");
}

/// Branched intersection of H with the node of F at the origin. The
/// containment clause (both branch series vanishing identically) assumes F
/// irreducible, which is the caller's assertion; for reducible F a branch
/// whose series vanishes to full precision is flagged in branch_vanishes
/// rather than folded into a global verdict.
template <FieldElement K>
IntersectionReport<K> intersect_at_node(const BivariatePoly<K>& f, const BivariatePoly<K>& h,
                                        const BranchPair<K>& b, bool with_oracle = false) {
    if (h.is_zero()) throw Error("H must be a nonzero polynomial");
    require_node_at_origin(f);
    IntersectionReport<K> report;
    report.containment = divides(f, h);
    if (!h.coeff(0, 0).is_zero()) {
        report.through_node = false;
        report.per_branch = {0, 0};
        report.total = 0;
        report.precision_used = b.precision;
        return report;
    }
    std::size_t bound =
        static_cast<std::size_t>(f.degree()) * static_cast<std::size_t>(h.degree()) + 2;

    auto compute = [&](std::size_t atLeast) {
        BranchPair<K> pair = b;
        if (pair.precision < atLeast) {
            auto redone = factor_node_branches(f, atLeast);
            pair = std::get<BranchPair<K>>(redone); // same field: must succeed
        }
        report.precision_used = pair.precision;
        report.per_branch[0] = branch_multiplicity(h, pair.eta1, atLeast);
        report.per_branch[1] = branch_multiplicity(h, pair.eta2, atLeast);
        return pair;
    };
    auto pair = compute(bound);

    if (report.containment) {
        if (report.per_branch[0] || report.per_branch[1])
            throw std::logic_error("containment with a finite branch order");
        report.branch_vanishes = {true, true};
        report.total = std::nullopt;
        return report;
    }
    if (!report.per_branch[0] || !report.per_branch[1]) {
        pair = compute(2 * bound); // one escalation, then settle it exactly
        for (int j : {0, 1}) {
            if (report.per_branch[static_cast<std::size_t>(j)]) continue;
            bool shared = f.degree_y() >= 1 && h.degree_y() >= 1 && resultant_y(f, h).is_zero();
            if (!shared)
                throw std::logic_error(
                    "branch order exceeds the degree bound with no shared component");
            report.branch_vanishes[static_cast<std::size_t>(j)] = true;
        }
    }
    if (report.per_branch[0] && report.per_branch[1]) {
        report.total = *report.per_branch[0] + *report.per_branch[1];
        if (*report.total < 2) throw std::logic_error("total intersection below 2 at a node");
    } else {
        report.total = std::nullopt;
    }

    auto [hx, hy] = h.partials();
    if (!hx.coeff(0, 0).is_zero() || !hy.coeff(0, 0).is_zero())
        report.contact = classify_smooth_contact(f, h, pair);
    if (with_oracle && !report.containment && !report.branch_vanishes[0] &&
        !report.branch_vanishes[1]) {
        try {
            report.oracle_total = oracle_total_multiplicity(f, h);
        } catch (const PreconditionError&) {
            // a global common component of a reducible F (away from the node)
            // defeats the resultant; the oracle field just stays empty
        }
    }
    return report;
}

} // namespace nodalis
