#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nodalis/errors.hpp"
#include "nodalis/field.hpp"

namespace nodalis {

/// Dense univariate polynomial over an exact field. The coefficient vector
/// never has trailing zeros; the zero polynomial has an empty vector and
/// degree -1.
template <FieldElement K>
class UnivariatePoly {
  public:
    explicit UnivariatePoly(typename K::Ctx ctx) : ctx_(std::move(ctx)) {}
    UnivariatePoly(typename K::Ctx ctx, std::vector<K> coeffs)
        : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        trim();
    }

    static UnivariatePoly monomial(const typename K::Ctx& ctx, const K& coeff, std::size_t deg) {
        std::vector<K> c(deg + 1, ctx.zero());
        c[deg] = coeff;
        return UnivariatePoly(ctx, std::move(c));
    }
    static UnivariatePoly constant(const typename K::Ctx& ctx, const K& coeff) {
        return monomial(ctx, coeff, 0);
    }

    const typename K::Ctx& ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }

    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ctx_.zero(); }
    K leading() const {
        if (is_zero()) throw Error("leading coefficient of zero polynomial");
        return c_.back();
    }

    /// Index of the lowest nonzero coefficient; nullopt for the zero polynomial.
    std::optional<std::size_t> ord() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return i;
        return std::nullopt;
    }

    UnivariatePoly operator+(const UnivariatePoly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), ctx_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return UnivariatePoly(ctx_, std::move(r));
    }
    UnivariatePoly operator-(const UnivariatePoly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), ctx_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return UnivariatePoly(ctx_, std::move(r));
    }
    UnivariatePoly operator-() const {
        std::vector<K> r = c_;
        for (auto& x : r) x = -x;
        return UnivariatePoly(ctx_, std::move(r));
    }
    UnivariatePoly operator*(const UnivariatePoly& o) const {
        if (is_zero() || o.is_zero()) return UnivariatePoly(ctx_);
        std::vector<K> r(c_.size() + o.c_.size() - 1, ctx_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return UnivariatePoly(ctx_, std::move(r));
    }
    UnivariatePoly scale(const K& s) const {
        std::vector<K> r = c_;
        for (auto& x : r) x = x * s;
        return UnivariatePoly(ctx_, std::move(r));
    }
    bool operator==(const UnivariatePoly& o) const { return c_ == o.c_; }
    bool operator!=(const UnivariatePoly& o) const { return !(*this == o); }

    UnivariatePoly shift_up(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<K> r(c_.size() + k, ctx_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return UnivariatePoly(ctx_, std::move(r));
    }

    /// Exact division by x^k; the k lowest coefficients must vanish.
    UnivariatePoly shift_down(std::size_t k) const {
        if (is_zero()) return *this;
        for (std::size_t i = 0; i < k && i < c_.size(); ++i)
            if (!c_[i].is_zero()) throw Error("shift_down: not divisible by x^k");
        if (c_.size() <= k) return UnivariatePoly(ctx_);
        return UnivariatePoly(ctx_, std::vector<K>(c_.begin() + static_cast<long>(k), c_.end()));
    }

    std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& g) const {
        if (g.is_zero()) throw Error("polynomial division by zero");
        UnivariatePoly q(ctx_), r = *this;
        K lg = g.leading().inv();
        while (!r.is_zero() && r.degree() >= g.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
            K factor = r.leading() * lg;
            q = q + monomial(ctx_, factor, shift);
            r = r - g.shift_up(shift).scale(factor);
        }
        return {q, r};
    }

    UnivariatePoly exact_div(const UnivariatePoly& g) const {
        auto [q, r] = divmod(g);
        if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
        return q;
    }

    K eval(const K& x) const {
        K acc = ctx_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    std::string to_string(const std::string& var) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    typename K::Ctx ctx_;
    std::vector<K> c_;
};

/// Monic gcd by the Euclidean algorithm.
template <FieldElement K>
UnivariatePoly<K> poly_gcd(UnivariatePoly<K> a, UnivariatePoly<K> b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scale(a.leading().inv());
    return a;
}

namespace detail {

template <FieldElement K>
void append_term(std::string& out, const K& coeff, const std::string& mono) {
    std::string cs = to_string(coeff);
    // Composite strings (extension elements like "1 + sqrt(2)") get wrapped
    // so the rendered expression stays unambiguous.
    bool composite = cs.find(' ') != std::string::npos;
    bool neg = !composite && !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (composite) cs = "(" + cs + ")";
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (mono.empty()) {
        out += cs;
    } else if (cs == "1") {
        out += mono;
    } else {
        out += cs + "*" + mono;
    }
}

} // namespace detail

template <FieldElement K>
std::string UnivariatePoly<K>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string mono;
        if (i == 1) mono = var;
        if (i > 1) mono = var + "^" + std::to_string(i);
        detail::append_term(out, c_[i], mono);
    }
    return out;
}

} // namespace nodalis
