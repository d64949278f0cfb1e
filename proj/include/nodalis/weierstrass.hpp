#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "nodalis/errors.hpp"
#include "nodalis/node.hpp"
#include "nodalis/poly.hpp"
#include "nodalis/series.hpp"

namespace nodalis {

/// Truncated Weierstrass data of F at the origin:
///   F = U * (Y^d + c_1(X) Y^(d-1) + ... + c_d(X))   modulo X^precision
/// with U(0,0) != 0 and c_i(0) = 0. The unit U is stored as an exact
/// polynomial (its Y-degree is bounded by deg_Y F - d) to be read modulo
/// X^precision.
template <FieldElement K>
struct WeierstrassData {
    std::size_t d;
    std::vector<TruncatedSeries<K>> c; // c[i-1] holds c_i
    BivariatePoly<K> unit;
    std::size_t precision;
};

namespace detail {

/// Inverse of a unit u(Y) modulo Y^d.
template <FieldElement K>
UnivariatePoly<K> inverse_mod_power(const UnivariatePoly<K>& u, std::size_t d) {
    const auto& ctx = u.ctx();
    std::vector<K> r(d, ctx.zero());
    K lead = u.coeff(0).inv();
    r[0] = lead;
    for (std::size_t n = 1; n < d; ++n) {
        K acc = ctx.zero();
        for (std::size_t i = 1; i <= n; ++i) acc = acc + u.coeff(i) * r[n - i];
        r[n] = -acc * lead;
    }
    return UnivariatePoly<K>(ctx, std::move(r));
}

template <FieldElement K>
UnivariatePoly<K> truncate_poly(const UnivariatePoly<K>& p, std::size_t d) {
    std::vector<K> r(d, p.ctx().zero());
    for (std::size_t i = 0; i < d; ++i) r[i] = p.coeff(i);
    return UnivariatePoly<K>(p.ctx(), std::move(r));
}

} // namespace detail

/// The monic factor G = Y^d + c_1 Y^(d-1) + ... + c_d as a bivariate
/// polynomial, truncated at the data's X-precision.
template <FieldElement K>
BivariatePoly<K> weierstrass_polynomial(const WeierstrassData<K>& w,
                                        const typename K::Ctx& ctx) {
    BivariatePoly<K> g = BivariatePoly<K>::monomial(ctx, ctx.one(), 0, static_cast<int>(w.d));
    for (std::size_t i = 1; i <= w.d; ++i)
        for (std::size_t k = 0; k < w.c[i - 1].precision(); ++k)
            g.add_term(static_cast<int>(k), static_cast<int>(w.d - i), w.c[i - 1].coeff(k));
    return g;
}

/// Order-by-order Weierstrass division: writing F = sum_k F_k(Y) X^k and the
/// factors U = sum u_k(Y) X^k, G = Y^d + sum_k g_k(Y) X^k (deg g_k < d, g
/// starting at k = 1), each X-order gives
///   F_k = u_k Y^d + u_0 g_k + (known lower-order products),
/// which splits modulo Y^d into a triangular solve for g_k and then u_k.
/// Requires F(0,Y) != 0; d is the Y-order of F(0,Y). The reconstruction
/// F = U*G mod X^N is checked before returning.
template <FieldElement K>
WeierstrassData<K> weierstrass_prepare(const BivariatePoly<K>& f, std::size_t n) {
    const auto& ctx = f.ctx();
    if (n == 0) throw Error("weierstrass_prepare needs precision at least 1");
    UnivariatePoly<K> f0 = f.coeff_of_x(0);
    if (f0.is_zero())
        throw PreconditionError(
            "F(0,Y) vanishes identically (the Y-axis lies on the curve); apply a linear "
            "change of coordinates first");
    std::size_t d = *f0.ord();
    UnivariatePoly<K> u0 = f0.shift_down(d);
    UnivariatePoly<K> inv0(ctx);
    if (d > 0) inv0 = detail::inverse_mod_power(u0, d);

    std::vector<UnivariatePoly<K>> u(n, UnivariatePoly<K>(ctx));
    std::vector<UnivariatePoly<K>> g(n, UnivariatePoly<K>(ctx));
    u[0] = u0;
    for (std::size_t k = 1; k < n; ++k) {
        UnivariatePoly<K> s = f.coeff_of_x(static_cast<int>(k));
        for (std::size_t j = 1; j < k; ++j) s = s - g[j] * u[k - j];
        if (d > 0) g[k] = detail::truncate_poly(s * inv0, d);
        u[k] = (s - u0 * g[k]).shift_down(d);
    }

    WeierstrassData<K> w{d, {}, BivariatePoly<K>(ctx), n};
    for (std::size_t i = 1; i <= d; ++i) {
        TruncatedSeries<K> ci(ctx, n);
        for (std::size_t k = 1; k < n; ++k) ci.set_coeff(k, g[k].coeff(d - i));
        w.c.push_back(std::move(ci));
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= static_cast<std::size_t>(std::max(u[k].degree(), 0)); ++j)
            w.unit.add_term(static_cast<int>(k), static_cast<int>(j), u[k].coeff(j));

    BivariatePoly<K> recon = (w.unit * weierstrass_polynomial(w, ctx)).truncate_x(static_cast<int>(n));
    if (recon != f.truncate_x(static_cast<int>(n)))
        throw std::logic_error("weierstrass_prepare: reconstruction check failed");
    return w;
}

enum class DiscVerdict {
    square,        // c1^2 - 4 c2 has a series square root
    odd_order,     // order is odd: no square root exists
    nonsquare_unit // even order but the leading coefficient is not a field square
};

template <FieldElement K>
struct DiscriminantAnalysis {
    TruncatedSeries<K> discriminant; // c1^2 - 4 c2
    std::optional<std::size_t> ord_c1, ord_c2;
    DiscVerdict verdict;
    std::optional<TruncatedSeries<K>> root;  // set when verdict == square
    std::optional<K> nonsquare_value;        // set when verdict == nonsquare_unit
};

/// Case analysis of the discriminant of a degree-2 Weierstrass polynomial.
/// A discriminant that vanishes to working precision cannot be classified
/// and raises InsufficientPrecision (escalate and retry).
template <FieldElement K>
DiscriminantAnalysis<K> analyze_discriminant(const WeierstrassData<K>& w) {
    if (w.d != 2) throw Error("discriminant analysis requires a degree-2 Weierstrass polynomial");
    const auto& c1 = w.c[0];
    const auto& c2 = w.c[1];
    const auto& ctx = c1.ctx();
    TruncatedSeries<K> disc = c1 * c1 - c2.scale(ctx.from_int(4));
    if (!disc.ord())
        throw InsufficientPrecision(
            "discriminant vanishes to working precision; increase the precision");
    DiscriminantAnalysis<K> out{disc, c1.ord(), c2.ord(), DiscVerdict::square, std::nullopt,
                                std::nullopt};
    auto rooted = sqrt_series(disc);
    if (auto* z = std::get_if<TruncatedSeries<K>>(&rooted)) {
        out.root = *z;
    } else {
        const auto& ns = std::get<NotSquare<K>>(rooted);
        if (ns.reason == NotSquare<K>::Reason::odd_order) {
            out.verdict = DiscVerdict::odd_order;
        } else {
            out.verdict = DiscVerdict::nonsquare_unit;
            out.nonsquare_value = ns.leading;
        }
    }
    return out;
}

/// The two branch parametrizations eta_1, eta_2 of an ordinary double point:
/// (Y - eta_1)(Y - eta_2) equals the Weierstrass quadratic modulo X^precision
/// and the slopes eta_j'(0) are distinct. Branch 1 carries the canonical
/// square root of the discriminant.
template <FieldElement K>
struct BranchPair {
    TruncatedSeries<K> eta1, eta2;
    std::size_t precision;
    std::pair<K, K> slopes;
};

template <FieldElement K>
void require_node_at_origin(const BivariatePoly<K>& f) {
    auto origin = AffinePoint<K>{f.ctx().zero(), f.ctx().zero()};
    auto report = classify_point(f, origin);
    if (report.classification == PointClass::needs_extension)
        throw PreconditionError("tangent cone splits only over an extension; adjoin sqrt(" +
                                to_string(*report.extension_needed) + ") first");
    if (report.classification != PointClass::ordinary_double_point)
        throw PreconditionError("origin is not an ordinary double point (found: " +
                                to_string(report.classification) + ")");
}

/// Branch parametrizations by completing the square on the Weierstrass
/// quadratic: eta_j = (-c_1 +- Z)/2 with Z the canonical series square root
/// of the discriminant. Preconditions: the origin is an ordinary double
/// point and the Y-axis is not a tangent direction. When the tangent cone
/// splits only over a quadratic extension the needed square class is
/// returned for the caller to adjoin.
template <FieldElement K>
std::variant<BranchPair<K>, NeedsExtension<K>> factor_node_branches(const BivariatePoly<K>& f,
                                                                    std::size_t n) {
    const auto& ctx = f.ctx();
    if (n < 2) throw Error("branch factorization needs precision at least 2");
    {
        auto origin = AffinePoint<K>{ctx.zero(), ctx.zero()};
        auto report = classify_point(f, origin);
        if (report.classification == PointClass::needs_extension)
            return NeedsExtension<K>{*report.extension_needed};
        if (report.classification != PointClass::ordinary_double_point)
            throw PreconditionError("origin is not an ordinary double point (found: " +
                                    to_string(report.classification) + ")");
    }
    if (f.coeff(0, 2).is_zero())
        throw PreconditionError(
            "the Y-axis is a tangent direction at the origin; apply a linear change of "
            "coordinates first");
    auto w = weierstrass_prepare(f, n + 1);
    auto da = analyze_discriminant(w);
    // At an ordinary double point the discriminant has order exactly 2 and a
    // square leading coefficient (it reduces to the tangent cone's
    // discriminant, which splitting already certified).
    if (da.verdict != DiscVerdict::square || *da.discriminant.ord() != 2)
        throw std::logic_error("branch factorization: discriminant not an order-2 square at a "
                               "classified ordinary double point");
    K half = ctx.from_int(2).inv();
    TruncatedSeries<K> z = *da.root;
    TruncatedSeries<K> eta1 = ((-w.c[0]) + z).scale(half).truncate(n);
    TruncatedSeries<K> eta2 = ((-w.c[0]) - z).scale(half).truncate(n);
    K s1 = eta1.coeff(1), s2 = eta2.coeff(1);
    if (s1 == s2) throw std::logic_error("branch factorization produced equal slopes");
    return BranchPair<K>{std::move(eta1), std::move(eta2), n, {s1, s2}};
}

/// The tangent lines of the two branches, in branch order: Y = eta_j'(0) X.
/// This is what ties each parametrization to its geometric branch.
template <FieldElement K>
std::pair<LinearForm<K>, LinearForm<K>> branch_tangents(const BranchPair<K>& b) {
    const auto& ctx = b.eta1.ctx();
    return {LinearForm<K>::with_slope(ctx, b.slopes.first),
            LinearForm<K>::with_slope(ctx, b.slopes.second)};
}

/// Independent branch oracle: one blow-up substitution Y = X*W turns the
/// node into the plane curve P(X, W) = F(X, XW)/X^2 with two simple roots at
/// X = 0; each root lifts coefficient by coefficient. Agrees with
/// factor_node_branches up to the branch labeling.
template <FieldElement K>
std::variant<BranchPair<K>, NeedsExtension<K>> hensel_branch_oracle(const BivariatePoly<K>& f,
                                                                    std::size_t n) {
    const auto& ctx = f.ctx();
    if (n < 2) throw Error("branch lifting needs precision at least 2");
    {
        auto origin = AffinePoint<K>{ctx.zero(), ctx.zero()};
        auto report = classify_point(f, origin);
        if (report.classification == PointClass::needs_extension)
            return NeedsExtension<K>{*report.extension_needed};
        if (report.classification != PointClass::ordinary_double_point)
            throw PreconditionError("origin is not an ordinary double point (found: " +
                                    to_string(report.classification) + ")");
    }
    if (f.coeff(0, 2).is_zero())
        throw PreconditionError(
            "the Y-axis is a tangent direction at the origin; apply a linear change of "
            "coordinates first");
    BivariatePoly<K> p(ctx);
    for (const auto& [e, v] : f.terms()) {
        if (e.first + e.second < 2)
            throw std::logic_error("blow-up of a non-singular term"); // excluded by the checks
        p.add_term(e.first + e.second - 2, e.second, v);
    }
    UnivariatePoly<K> p0 = p.coeff_of_x(0); // alpha W^2 + beta W + gamma
    K alpha = p0.coeff(2), beta = p0.coeff(1), gamma = p0.coeff(0);
    K disc = beta * beta - ctx.from_int(4) * alpha * gamma;
    auto root = sqrt_of(disc);
    if (!root) return NeedsExtension<K>{square_class_rep(disc)};
    K twice = ctx.from_int(2) * alpha;
    K r1 = (-beta + *root) / twice;
    K r2 = (-beta - *root) / twice;
    if (canonical_less(r2, r1)) std::swap(r1, r2);
    auto pw = p.partials().second;
    auto lift = [&](const K& a) {
        K denom = pw.evaluate(ctx.zero(), a); // 2*alpha*a + beta, nonzero for a simple root
        std::vector<K> wc(n - 1, ctx.zero());
        wc[0] = a;
        for (std::size_t m = 1; m + 1 < n; ++m) {
            TruncatedSeries<K> partial(ctx, std::vector<K>(wc.begin(), wc.begin() + static_cast<long>(m + 1)));
            auto val = p.evaluate_series(TruncatedSeries<K>::identity(ctx, m + 1), partial);
            wc[m] = -val.coeff(m) / denom;
        }
        return TruncatedSeries<K>(ctx, std::move(wc)).mul_xk(1);
    };
    TruncatedSeries<K> eta1 = lift(r1);
    TruncatedSeries<K> eta2 = lift(r2);
    return BranchPair<K>{std::move(eta1), std::move(eta2), n, {r1, r2}};
}

} // namespace nodalis
