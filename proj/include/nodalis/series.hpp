#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nodalis/errors.hpp"
#include "nodalis/field.hpp"

namespace nodalis {

/// Univariate formal power series known modulo X^N. The precision N is
/// carried on every value and combined conservatively by every operation
/// (products and sums of precisions N, M are delivered at min(N, M)), so a
/// coefficient is never claimed beyond what the inputs support.
template <FieldElement K>
class TruncatedSeries {
  public:
    TruncatedSeries(typename K::Ctx ctx, std::size_t precision)
        : ctx_(std::move(ctx)), c_(precision, ctx_.zero()) {
        if (precision == 0) throw Error("series precision must be at least 1");
    }
    TruncatedSeries(typename K::Ctx ctx, std::vector<K> coeffs)
        : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        if (c_.empty()) throw Error("series precision must be at least 1");
    }

    /// The identity series X, exactly known to the given precision.
    static TruncatedSeries identity(const typename K::Ctx& ctx, std::size_t precision) {
        TruncatedSeries s(ctx, precision);
        if (precision > 1) s.c_[1] = ctx.one();
        return s;
    }
    static TruncatedSeries constant(const typename K::Ctx& ctx, const K& value,
                                    std::size_t precision) {
        TruncatedSeries s(ctx, precision);
        s.c_[0] = value;
        return s;
    }

    const typename K::Ctx& ctx() const { return ctx_; }
    std::size_t precision() const { return c_.size(); }
    K coeff(std::size_t i) const {
        if (i >= c_.size()) throw Error("series coefficient beyond precision");
        return c_[i];
    }
    void set_coeff(std::size_t i, const K& v) {
        if (i >= c_.size()) throw Error("series coefficient beyond precision");
        c_[i] = v;
    }
    const std::vector<K>& coeffs() const { return c_; }

    /// Index of the first nonzero stored coefficient; nullopt means every
    /// known coefficient vanishes (order at least N).
    std::optional<std::size_t> ord() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return i;
        return std::nullopt;
    }

    bool is_unit() const { return !c_[0].is_zero(); }

    TruncatedSeries truncate(std::size_t n) const {
        if (n == 0) throw Error("series precision must be at least 1");
        if (n >= c_.size()) return *this;
        return TruncatedSeries(ctx_, std::vector<K>(c_.begin(), c_.begin() + static_cast<long>(n)));
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        std::size_t n = std::min(precision(), o.precision());
        std::vector<K> r(n, ctx_.zero());
        for (std::size_t i = 0; i < n; ++i) r[i] = c_[i] + o.c_[i];
        return TruncatedSeries(ctx_, std::move(r));
    }
    TruncatedSeries operator-(const TruncatedSeries& o) const {
        std::size_t n = std::min(precision(), o.precision());
        std::vector<K> r(n, ctx_.zero());
        for (std::size_t i = 0; i < n; ++i) r[i] = c_[i] - o.c_[i];
        return TruncatedSeries(ctx_, std::move(r));
    }
    TruncatedSeries operator-() const {
        std::vector<K> r = c_;
        for (auto& x : r) x = -x;
        return TruncatedSeries(ctx_, std::move(r));
    }
    TruncatedSeries operator*(const TruncatedSeries& o) const {
        std::size_t n = std::min(precision(), o.precision());
        std::vector<K> r(n, ctx_.zero());
        for (std::size_t i = 0; i < n && i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < n && j < o.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return TruncatedSeries(ctx_, std::move(r));
    }
    TruncatedSeries scale(const K& s) const {
        std::vector<K> r = c_;
        for (auto& x : r) x = x * s;
        return TruncatedSeries(ctx_, std::move(r));
    }

    /// Equality of all shared coefficients at the minimum of the two
    /// precisions.
    bool agrees_with(const TruncatedSeries& o) const {
        std::size_t n = std::min(precision(), o.precision());
        for (std::size_t i = 0; i < n; ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator==(const TruncatedSeries& o) const {
        return precision() == o.precision() && c_ == o.c_;
    }

    /// Multiplication by the exact monomial X^k raises the precision by k.
    TruncatedSeries mul_xk(std::size_t k) const {
        std::vector<K> r(c_.size() + k, ctx_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return TruncatedSeries(ctx_, std::move(r));
    }

    /// Exact division by X^k (the low k coefficients must vanish); the
    /// precision drops by k.
    TruncatedSeries div_xk(std::size_t k) const {
        if (c_.size() <= k) throw Error("div_xk: precision exhausted");
        for (std::size_t i = 0; i < k; ++i)
            if (!c_[i].is_zero()) throw Error("div_xk: series not divisible by X^k");
        return TruncatedSeries(ctx_, std::vector<K>(c_.begin() + static_cast<long>(k), c_.end()));
    }

    /// Multiplicative inverse of a unit, to the same precision.
    TruncatedSeries inverse() const {
        if (!is_unit()) throw Error("series inverse requires a unit (nonzero constant term)");
        std::vector<K> r(c_.size(), ctx_.zero());
        K u = c_[0].inv();
        r[0] = u;
        for (std::size_t n = 1; n < c_.size(); ++n) {
            K acc = ctx_.zero();
            for (std::size_t i = 1; i <= n; ++i) acc = acc + coeff(i) * r[n - i];
            r[n] = -acc * u;
        }
        return TruncatedSeries(ctx_, std::move(r));
    }

    /// Termwise formal derivative; precision drops to N-1.
    TruncatedSeries derivative() const {
        if (c_.size() < 2) throw Error("derivative needs precision at least 2");
        std::vector<K> r(c_.size() - 1, ctx_.zero());
        for (std::size_t i = 0; i + 1 < c_.size(); ++i)
            r[i] = c_[i + 1] * ctx_.from_int(static_cast<long long>(i + 1));
        return TruncatedSeries(ctx_, std::move(r));
    }

    /// Substitution s(t(X)) for a positive-order inner series t. With
    /// r = ord(t), the result is provable modulo X^min(N_t, r*N_s).
    TruncatedSeries compose(const TruncatedSeries& inner) const {
        auto r = inner.ord();
        if (r && *r == 0) throw Error("composition requires a positive-order inner series");
        std::size_t ir = r ? *r : inner.precision();
        std::size_t out = std::min(inner.precision(), ir * precision());
        TruncatedSeries acc(ctx_, out);
        TruncatedSeries powt = constant(ctx_, ctx_.one(), out);
        TruncatedSeries t = inner.truncate(out);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i].is_zero()) acc = acc + powt.scale(c_[i]);
            if (auto po = powt.ord(); !po && i > 0) break;
            if (i + 1 < c_.size()) powt = powt * t;
        }
        return acc;
    }

    /// "c0 + c1*X + ... + O(X^N)"
    std::string to_string(const std::string& var = "X") const;

  private:
    typename K::Ctx ctx_;
    std::vector<K> c_;
};

/// Why a series failed to be a square.
template <FieldElement K>
struct NotSquare {
    enum class Reason { odd_order, leading_coeff_not_square };
    Reason reason;
    std::optional<K> leading; // set for leading_coeff_not_square
};

/// Square root of a series of even order 2k whose leading coefficient is a
/// field square. The root's leading coefficient is the field's canonical
/// square root; the result is provable modulo X^(N-k). Rejections return a
/// NotSquare value; a series with no visible nonzero coefficient has
/// undetermined order and raises InsufficientPrecision.
template <FieldElement K>
std::variant<TruncatedSeries<K>, NotSquare<K>> sqrt_series(const TruncatedSeries<K>& s) {
    auto o = s.ord();
    if (!o)
        throw InsufficientPrecision(
            "sqrt of a series that vanishes to working precision (order undetermined)");
    if (*o % 2 != 0) return NotSquare<K>{NotSquare<K>::Reason::odd_order, std::nullopt};
    std::size_t k = *o / 2;
    TruncatedSeries<K> w = s.div_xk(2 * k);
    auto r0 = sqrt_of(w.coeff(0));
    if (!r0)
        return NotSquare<K>{NotSquare<K>::Reason::leading_coeff_not_square, w.coeff(0)};
    const auto& ctx = s.ctx();
    TruncatedSeries<K> r(ctx, w.precision());
    r.set_coeff(0, *r0);
    K twice = ctx.from_int(2) * *r0;
    for (std::size_t n = 1; n < w.precision(); ++n) {
        K acc = ctx.zero();
        for (std::size_t i = 1; i < n; ++i) acc = acc + r.coeff(i) * r.coeff(n - i);
        r.set_coeff(n, (w.coeff(n) - acc) / twice);
    }
    return r.mul_xk(k);
}

/// Solves c(t) * U(c(t)) = t for c by undetermined coefficients, one order at
/// a time; U must be a unit known at least modulo X^(N-1). The result has
/// c(0) = 0 and c'(0) = 1/U(0).
template <FieldElement K>
TruncatedSeries<K> revert_unit_times_x(const TruncatedSeries<K>& u, std::size_t n) {
    if (!u.is_unit()) throw Error("reversion requires a unit factor U");
    if (n < 2) throw Error("reversion needs precision at least 2");
    if (u.precision() + 1 < n)
        throw InsufficientPrecision("reversion: U known to too few terms");
    const auto& ctx = u.ctx();
    // g(x) = x*U(x), known modulo x^n.
    std::vector<K> g(n, ctx.zero());
    for (std::size_t i = 1; i < n; ++i) g[i] = u.coeff(i - 1);
    std::vector<K> c(n, ctx.zero());
    c[1] = g[1].inv();
    // Coefficient of t^m in g(c(t)) depends only on c_1..c_m, linearly in
    // c_m with unit coefficient g_1, so each order is solved directly.
    for (std::size_t m = 2; m < n; ++m) {
        // powers of the partial c, truncated at degree m
        std::vector<std::vector<K>> pw(m + 1, std::vector<K>(m + 1, ctx.zero()));
        pw[0][0] = ctx.one();
        for (std::size_t i = 1; i <= m; ++i) {
            for (std::size_t a = 0; a <= m; ++a) {
                if (pw[i - 1][a].is_zero()) continue;
                for (std::size_t b = 1; a + b <= m; ++b)
                    pw[i][a + b] = pw[i][a + b] + pw[i - 1][a] * c[b];
            }
        }
        K deviation = ctx.zero();
        for (std::size_t i = 1; i <= m; ++i) deviation = deviation + g[i] * pw[i][m];
        c[m] = -deviation / g[1];
    }
    return TruncatedSeries<K>(ctx, std::move(c));
}

template <FieldElement K>
std::string TruncatedSeries<K>::to_string(const std::string& var) const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string cs = nodalis::detail::field_str(c_[i]);
        bool composite = cs.find(' ') != std::string::npos;
        bool neg = !composite && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (composite) cs = "(" + cs + ")";
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        if (i == 1) mono = var;
        if (i > 1) mono = var + "^" + std::to_string(i);
        if (mono.empty())
            out += cs;
        else if (cs == "1")
            out += mono;
        else
            out += cs + "*" + mono;
    }
    if (!out.empty()) out += " + ";
    out += "O(" + var + "^" + std::to_string(c_.size()) + ")";
    return out;
}

} // namespace nodalis
