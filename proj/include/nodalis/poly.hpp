#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nodalis/errors.hpp"
#include "nodalis/field.hpp"
#include "nodalis/series.hpp"
#include "nodalis/univariate.hpp"

namespace nodalis {

template <FieldElement K>
struct AffinePoint {
    K x;
    K y;
};

/// Line a*X + b*Y = 0 through the origin, stored with the first nonzero
/// coefficient normalized to 1 so equality of lines is equality of
/// representations.
template <FieldElement K>
class LinearForm {
  public:
    LinearForm(K a, K b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.is_zero() && b_.is_zero()) throw Error("zero linear form");
        if (!a_.is_zero()) {
            b_ = b_ / a_;
            a_ = a_.ctx().one();
        } else {
            b_ = b_.ctx().one();
        }
    }

    static LinearForm with_slope(const typename K::Ctx& ctx, const K& s) {
        return LinearForm(-s, ctx.one()); // Y = s*X
    }
    static LinearForm vertical(const typename K::Ctx& ctx) {
        return LinearForm(ctx.one(), ctx.zero()); // X = 0
    }

    const K& a() const { return a_; }
    const K& b() const { return b_; }
    bool is_vertical() const { return b_.is_zero(); }

    /// Slope of the parametrization Y = slope*X; only for non-vertical lines.
    K slope() const {
        if (is_vertical()) throw Error("vertical line has no finite slope");
        return -a_ / b_;
    }

    bool operator==(const LinearForm& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const LinearForm& o) const { return !(*this == o); }

    /// Rendered in the Y-leading style "Y - 2*X", or "X" for the vertical.
    std::string to_string() const {
        if (is_vertical()) return "X";
        K s = slope();
        if (s.is_zero()) return "Y";
        std::string cs = nodalis::detail::field_str(-s);
        bool composite = cs.find(' ') != std::string::npos;
        bool neg = !composite && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (composite) cs = "(" + cs + ")";
        std::string term = cs == "1" ? "X" : cs + "*X";
        return "Y " + std::string(neg ? "- " : "+ ") + term;
    }

  private:
    K a_, b_;
};

/// Splitting a binary quadratic needs the square root of an element that is
/// not a square in the current field; carries a square-class representative
/// to adjoin.
template <FieldElement K>
struct NeedsExtension {
    K d;
};

/// Exact bivariate polynomial with sparse exponent-map storage (no zero
/// coefficients are ever stored).
template <FieldElement K>
class BivariatePoly {
  public:
    using ExponentPair = std::pair<int, int>; // (i, j) for X^i Y^j
    using CoeffMap = std::map<ExponentPair, K>;

    explicit BivariatePoly(typename K::Ctx ctx) : ctx_(std::move(ctx)) {}

    static BivariatePoly monomial(const typename K::Ctx& ctx, const K& coeff, int i, int j) {
        BivariatePoly p(ctx);
        p.set_coeff(i, j, coeff);
        return p;
    }
    static BivariatePoly constant(const typename K::Ctx& ctx, const K& coeff) {
        return monomial(ctx, coeff, 0, 0);
    }
    static BivariatePoly variable_x(const typename K::Ctx& ctx) {
        return monomial(ctx, ctx.one(), 1, 0);
    }
    static BivariatePoly variable_y(const typename K::Ctx& ctx) {
        return monomial(ctx, ctx.one(), 0, 1);
    }

    const typename K::Ctx& ctx() const { return ctx_; }
    const CoeffMap& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    K coeff(int i, int j) const {
        auto it = c_.find({i, j});
        return it == c_.end() ? ctx_.zero() : it->second;
    }
    void set_coeff(int i, int j, const K& v) {
        if (v.is_zero())
            c_.erase({i, j});
        else
            c_[{i, j}] = v;
    }
    void add_term(int i, int j, const K& v) { set_coeff(i, j, coeff(i, j) + v); }

    int degree() const {
        int d = -1;
        for (const auto& [e, v] : c_) d = std::max(d, e.first + e.second);
        return d;
    }
    int degree_x() const {
        int d = -1;
        for (const auto& [e, v] : c_) d = std::max(d, e.first);
        return d;
    }
    int degree_y() const {
        int d = -1;
        for (const auto& [e, v] : c_) d = std::max(d, e.second);
        return d;
    }

    BivariatePoly operator+(const BivariatePoly& o) const {
        BivariatePoly r = *this;
        for (const auto& [e, v] : o.c_) r.add_term(e.first, e.second, v);
        return r;
    }
    BivariatePoly operator-(const BivariatePoly& o) const {
        BivariatePoly r = *this;
        for (const auto& [e, v] : o.c_) r.add_term(e.first, e.second, -v);
        return r;
    }
    BivariatePoly operator-() const {
        BivariatePoly r(ctx_);
        for (const auto& [e, v] : c_) r.c_[e] = -v;
        return r;
    }
    BivariatePoly operator*(const BivariatePoly& o) const {
        BivariatePoly r(ctx_);
        for (const auto& [e1, v1] : c_)
            for (const auto& [e2, v2] : o.c_)
                r.add_term(e1.first + e2.first, e1.second + e2.second, v1 * v2);
        return r;
    }
    BivariatePoly scale(const K& s) const {
        BivariatePoly r(ctx_);
        if (s.is_zero()) return r;
        for (const auto& [e, v] : c_) r.c_[e] = v * s;
        return r;
    }
    BivariatePoly pow(unsigned e) const {
        BivariatePoly acc = constant(ctx_, ctx_.one());
        for (unsigned k = 0; k < e; ++k) acc = acc * *this;
        return acc;
    }
    bool operator==(const BivariatePoly& o) const { return c_ == o.c_; }
    bool operator!=(const BivariatePoly& o) const { return !(*this == o); }

    /// Sum of the terms of total degree k.
    BivariatePoly homogeneous_part(int k) const {
        BivariatePoly r(ctx_);
        for (const auto& [e, v] : c_)
            if (e.first + e.second == k) r.c_[e] = v;
        return r;
    }

    /// Discards terms of X-degree >= n (interpretation modulo X^n).
    BivariatePoly truncate_x(int n) const {
        BivariatePoly r(ctx_);
        for (const auto& [e, v] : c_)
            if (e.first < n) r.c_[e] = v;
        return r;
    }

    K evaluate(const K& x, const K& y) const {
        K acc = ctx_.zero();
        for (const auto& [e, v] : c_)
            acc = acc + v * pow_int(x, static_cast<unsigned>(e.first)) *
                            pow_int(y, static_cast<unsigned>(e.second));
        return acc;
    }

    std::pair<BivariatePoly, BivariatePoly> partials() const {
        BivariatePoly fx(ctx_), fy(ctx_);
        for (const auto& [e, v] : c_) {
            if (e.first > 0) fx.add_term(e.first - 1, e.second, v * ctx_.from_int(e.first));
            if (e.second > 0) fy.add_term(e.first, e.second - 1, v * ctx_.from_int(e.second));
        }
        return {fx, fy};
    }

    /// F(X + p.x, Y + p.y): the point p of F corresponds to the origin of the
    /// result.
    BivariatePoly translate_to_origin(const AffinePoint<K>& p) const {
        BivariatePoly sx = variable_x(ctx_) + constant(ctx_, p.x);
        BivariatePoly sy = variable_y(ctx_) + constant(ctx_, p.y);
        return substitute(sx, sy);
    }

    /// F(m11*X + m12*Y, m21*X + m22*Y); the matrix must be invertible.
    BivariatePoly linear_change(const K& m11, const K& m12, const K& m21, const K& m22) const {
        if ((m11 * m22 - m12 * m21).is_zero())
            throw Error("linear change of coordinates must be invertible");
        BivariatePoly sx =
            monomial(ctx_, m11, 1, 0) + monomial(ctx_, m12, 0, 1);
        BivariatePoly sy =
            monomial(ctx_, m21, 1, 0) + monomial(ctx_, m22, 0, 1);
        return substitute(sx, sy);
    }

    BivariatePoly substitute(const BivariatePoly& sx, const BivariatePoly& sy) const {
        int dx = std::max(degree_x(), 0), dy = std::max(degree_y(), 0);
        std::vector<BivariatePoly> px(static_cast<std::size_t>(dx) + 1, constant(ctx_, ctx_.one()));
        std::vector<BivariatePoly> py(static_cast<std::size_t>(dy) + 1, constant(ctx_, ctx_.one()));
        for (std::size_t i = 1; i < px.size(); ++i) px[i] = px[i - 1] * sx;
        for (std::size_t j = 1; j < py.size(); ++j) py[j] = py[j - 1] * sy;
        BivariatePoly r(ctx_);
        for (const auto& [e, v] : c_)
            r = r + (px[static_cast<std::size_t>(e.first)] * py[static_cast<std::size_t>(e.second)])
                        .scale(v);
        return r;
    }

    /// Substitution of series X = sx(T), Y = sy(T); precision follows the
    /// series rules (min of the inputs' precisions for the positive-order
    /// paths used throughout this library).
    TruncatedSeries<K> evaluate_series(const TruncatedSeries<K>& sx,
                                       const TruncatedSeries<K>& sy) const {
        std::size_t n = std::min(sx.precision(), sy.precision());
        TruncatedSeries<K> acc(ctx_, n);
        int dx = std::max(degree_x(), 0), dy = std::max(degree_y(), 0);
        std::vector<TruncatedSeries<K>> px(static_cast<std::size_t>(dx) + 1,
                                           TruncatedSeries<K>::constant(ctx_, ctx_.one(), n));
        std::vector<TruncatedSeries<K>> py(static_cast<std::size_t>(dy) + 1,
                                           TruncatedSeries<K>::constant(ctx_, ctx_.one(), n));
        for (std::size_t i = 1; i < px.size(); ++i) px[i] = px[i - 1] * sx.truncate(n);
        for (std::size_t j = 1; j < py.size(); ++j) py[j] = py[j - 1] * sy.truncate(n);
        for (const auto& [e, v] : c_)
            acc = acc + (px[static_cast<std::size_t>(e.first)] *
                         py[static_cast<std::size_t>(e.second)])
                            .scale(v);
        return acc;
    }

    /// Exact substitution of univariate polynomials X = sx(t), Y = sy(t).
    UnivariatePoly<K> evaluate_univariate(const UnivariatePoly<K>& sx,
                                          const UnivariatePoly<K>& sy) const {
        UnivariatePoly<K> acc(ctx_);
        for (const auto& [e, v] : c_) {
            UnivariatePoly<K> term = UnivariatePoly<K>::constant(ctx_, v);
            for (int i = 0; i < e.first; ++i) term = term * sx;
            for (int j = 0; j < e.second; ++j) term = term * sy;
            acc = acc + term;
        }
        return acc;
    }

    /// Coefficient of X^i, as a polynomial in Y.
    UnivariatePoly<K> coeff_of_x(int i) const {
        std::vector<K> r(static_cast<std::size_t>(std::max(degree_y(), 0)) + 1, ctx_.zero());
        for (const auto& [e, v] : c_)
            if (e.first == i) r[static_cast<std::size_t>(e.second)] = v;
        return UnivariatePoly<K>(ctx_, std::move(r));
    }

    /// Coefficient of Y^j, as a polynomial in X.
    UnivariatePoly<K> coeff_of_y(int j) const {
        std::vector<K> r(static_cast<std::size_t>(std::max(degree_x(), 0)) + 1, ctx_.zero());
        for (const auto& [e, v] : c_)
            if (e.second == j) r[static_cast<std::size_t>(e.first)] = v;
        return UnivariatePoly<K>(ctx_, std::move(r));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        // graded order, highest total degree first; Y-power breaks ties
        std::vector<std::pair<ExponentPair, K>> ts(c_.begin(), c_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& l, const auto& r) {
            int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
            if (dl != dr) return dl > dr;
            return l.first.second > r.first.second;
        });
        std::string out;
        for (const auto& [e, v] : ts) {
            std::string mono;
            if (e.second == 1) mono = "Y";
            if (e.second > 1) mono = "Y^" + std::to_string(e.second);
            if (e.first >= 1) {
                if (!mono.empty()) mono += "*";
                mono += e.first == 1 ? "X" : "X^" + std::to_string(e.first);
            }
            detail::append_term(out, v, mono);
        }
        return out;
    }

  private:
    typename K::Ctx ctx_;
    CoeffMap c_;
};

/// Result of restricting a curve to a line through the origin: the
/// univariate polynomial obtained by substituting the line's parametrization,
/// together with the variable that parametrizes ('X' unless the line is the
/// Y-axis).
template <FieldElement K>
struct LineRestriction {
    UnivariatePoly<K> poly;
    char parameter;
};

template <FieldElement K>
LineRestriction<K> restrict_to_line(const BivariatePoly<K>& f, const LinearForm<K>& l) {
    const auto& ctx = f.ctx();
    if (!l.is_vertical()) {
        K s = l.slope(); // Y = s*X
        UnivariatePoly<K> r(ctx);
        for (const auto& [e, v] : f.terms())
            r = r + UnivariatePoly<K>::monomial(
                        ctx, v * pow_int(s, static_cast<unsigned>(e.second)),
                        static_cast<std::size_t>(e.first + e.second));
        return {r, 'X'};
    }
    return {f.coeff_of_x(0), 'Y'};
}

/// Factorization of a nonzero homogeneous binary quadratic into two linear
/// forms: Q = scale * l1 * l2.
template <FieldElement K>
struct QuadraticSplit {
    LinearForm<K> l1;
    LinearForm<K> l2;
    bool distinct;
    K scale;
};

/// Splits Q = alpha*Y^2 + beta*X*Y + gamma*X^2. When the factorization
/// requires the square root of a non-square discriminant, returns
/// NeedsExtension with a square-class representative so the caller can
/// adjoin it and retry. The quadratic is solved in Y whenever alpha != 0.
template <FieldElement K>
std::variant<QuadraticSplit<K>, NeedsExtension<K>> split_binary_quadratic(
    const BivariatePoly<K>& q) {
    const auto& ctx = q.ctx();
    if (q.is_zero() || q.degree() != 2 || q.homogeneous_part(2) != q)
        throw Error("split_binary_quadratic needs a nonzero homogeneous quadratic");
    K alpha = q.coeff(0, 2), beta = q.coeff(1, 1), gamma = q.coeff(2, 0);
    auto form_poly = [&](const LinearForm<K>& l) {
        return BivariatePoly<K>::monomial(ctx, l.a(), 1, 0) +
               BivariatePoly<K>::monomial(ctx, l.b(), 0, 1);
    };
    // normalization rescales the forms, so the constant is recovered from
    // any coefficient of the product and the result is verified exactly
    auto finish = [&](const LinearForm<K>& l1, const LinearForm<K>& l2, bool distinct) {
        auto prod = form_poly(l1) * form_poly(l2);
        const auto& [e, v] = *prod.terms().begin();
        K scale = q.coeff(e.first, e.second) / v;
        if (prod.scale(scale) != q)
            throw std::logic_error("binary quadratic split failed to reconstruct its input");
        return QuadraticSplit<K>{l1, l2, distinct, scale};
    };
    if (alpha.is_zero()) {
        // Q = X * (beta*Y + gamma*X)
        auto l1 = LinearForm<K>::vertical(ctx);
        if (beta.is_zero()) return finish(l1, l1, false);
        return finish(l1, LinearForm<K>(gamma, beta), true);
    }
    K four = ctx.from_int(4);
    K disc = beta * beta - four * alpha * gamma;
    if (disc.is_zero()) {
        K s = -beta / (ctx.from_int(2) * alpha);
        auto l = LinearForm<K>::with_slope(ctx, s);
        return finish(l, l, false);
    }
    auto root = sqrt_of(disc);
    if (!root) return NeedsExtension<K>{square_class_rep(disc)};
    K twice = ctx.from_int(2) * alpha;
    K s1 = (-beta + *root) / twice;
    K s2 = (-beta - *root) / twice;
    return finish(LinearForm<K>::with_slope(ctx, s1), LinearForm<K>::with_slope(ctx, s2), true);
}

namespace detail {

/// Bareiss fraction-free determinant over the polynomial ring K[X]; every
/// division is exact by construction.
template <FieldElement K>
UnivariatePoly<K> bareiss_determinant(std::vector<std::vector<UnivariatePoly<K>>> m) {
    const std::size_t n = m.size();
    const auto& ctx = m[0][0].ctx();
    if (n == 0) return UnivariatePoly<K>::constant(ctx, ctx.one());
    bool negate = false;
    UnivariatePoly<K> prev = UnivariatePoly<K>::constant(ctx, ctx.one());
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return UnivariatePoly<K>(ctx);
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = UnivariatePoly<K>(ctx);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

} // namespace detail

/// Resultant of F and H with respect to Y, as a polynomial in X: the
/// determinant of the Sylvester matrix whose first deg_Y(H) rows carry F's
/// Y-coefficients. Identically zero exactly when F and H share a factor of
/// positive Y-degree.
template <FieldElement K>
UnivariatePoly<K> resultant_y(const BivariatePoly<K>& f, const BivariatePoly<K>& h) {
    const auto& ctx = f.ctx();
    int m = f.degree_y(), n = h.degree_y();
    if (m < 1 || n < 1) throw Error("resultant_y needs positive Y-degree in both arguments");
    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<UnivariatePoly<K>>> s(size,
                                                  std::vector<UnivariatePoly<K>>(size, UnivariatePoly<K>(ctx)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = f.coeff_of_y(m - k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = h.coeff_of_y(n - k);
    return detail::bareiss_determinant(std::move(s));
}

/// Exact divisibility in K[X,Y], by single-divisor multivariate division in
/// graded-lex order: the remainder vanishes exactly when f divides h.
template <FieldElement K>
bool divides(const BivariatePoly<K>& f, const BivariatePoly<K>& h) {
    if (f.is_zero()) throw Error("divisibility by the zero polynomial");
    auto greater = [](const std::pair<int, int>& a, const std::pair<int, int>& b) {
        int da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da > db;
        return a.second > b.second;
    };
    auto leading = [&](const BivariatePoly<K>& p) {
        auto best = p.terms().begin();
        for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
            if (greater(it->first, best->first)) best = it;
        return *best;
    };
    auto [fe, fc] = leading(f);
    BivariatePoly<K> r = h;
    while (!r.is_zero()) {
        auto [re, rc] = leading(r);
        if (re.first < fe.first || re.second < fe.second) return false;
        auto quotient = BivariatePoly<K>::monomial(f.ctx(), rc / fc, re.first - fe.first,
                                                   re.second - fe.second);
        r = r - quotient * f;
    }
    return true;
}

} // namespace nodalis
