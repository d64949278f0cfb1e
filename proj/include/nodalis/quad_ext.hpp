#pragma once

#include <optional>
#include <string>
#include <type_traits>

#include "nodalis/errors.hpp"
#include "nodalis/field.hpp"

namespace nodalis {

template <class K>
class QuadExt;

template <class K>
struct is_quad_ext : std::false_type {};
template <class K>
struct is_quad_ext<QuadExt<K>> : std::true_type {};
template <class K>
inline constexpr bool is_quad_ext_v = is_quad_ext<K>::value;

/// Element a + b*sqrt(d) of the quadratic extension K(sqrt(d)), d a verified
/// non-square of the base field. One extension step is all the node analysis
/// ever needs (a single tangent-cone square root), so towers are ruled out.
template <class K>
class QuadExt {
    static_assert(!is_quad_ext_v<K>, "extension towers of depth > 1 are not supported");

  public:
    struct Ctx {
        using Element = QuadExt;
        Ctx(const typename K::Ctx& base_ctx, const K& adjoined) : base(base_ctx), d(adjoined) {
            if (is_square(d))
                throw ConfigError("cannot adjoin sqrt of a square (" + to_string(d) + ")");
        }
        QuadExt zero() const { return QuadExt(base.zero(), base.zero(), d); }
        QuadExt one() const { return QuadExt(base.one(), base.zero(), d); }
        QuadExt from_int(long long n) const { return QuadExt(base.from_int(n), base.zero(), d); }
        template <class... Args>
        QuadExt from_ratio(Args&&... args) const {
            return QuadExt(base.from_ratio(std::forward<Args>(args)...), base.zero(), d);
        }
        QuadExt embed(const K& a) const { return QuadExt(a, base.zero(), d); }
        QuadExt root() const { return QuadExt(base.zero(), base.one(), d); }
        std::string name() const { return base.name() + "(sqrt(" + to_string(d) + "))"; }
        bool operator==(const Ctx& o) const { return base == o.base && d == o.d; }

        typename K::Ctx base;
        K d;
    };

    QuadExt() = default;
    QuadExt(K a, K b, K d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    Ctx ctx() const { return Ctx(a_.ctx(), d_); }
    const K& re() const { return a_; }
    const K& im() const { return b_; }
    const K& adjoined() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }

    QuadExt operator+(const QuadExt& o) const { return {a_ + o.a_, b_ + o.b_, d_}; }
    QuadExt operator-(const QuadExt& o) const { return {a_ - o.a_, b_ - o.b_, d_}; }
    QuadExt operator*(const QuadExt& o) const {
        return {a_ * o.a_ + b_ * o.b_ * d_, a_ * o.b_ + b_ * o.a_, d_};
    }
    QuadExt operator/(const QuadExt& o) const { return *this * o.inv(); }
    QuadExt operator-() const { return {-a_, -b_, d_}; }
    bool operator==(const QuadExt& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    /// Field norm a^2 - d*b^2; nonzero for nonzero elements since d is a
    /// non-square.
    K norm() const { return a_ * a_ - d_ * b_ * b_; }

    QuadExt inv() const {
        if (is_zero()) throw Error("inverse of zero in quadratic extension");
        K n = norm().inv();
        return {a_ * n, -b_ * n, d_};
    }

  private:
    K a_, b_, d_;
};

/// Squares in K(sqrt(d)): e = (x + y*sqrt(d))^2 requires x^2 + d y^2 = a and
/// 2xy = b, which solves exactly when a^2 - d b^2 is a base square c^2 and
/// one of (a+c)/2, (a-c)/2 is a base square.
template <class K>
std::optional<QuadExt<K>> sqrt_of(const QuadExt<K>& e) {
    const K& a = e.re();
    const K& b = e.im();
    const K& d = e.adjoined();
    auto base = a.ctx();
    auto canonicalize = [](QuadExt<K> r) { return canonical_sign(r) ? r : -r; };
    if (e.is_zero()) return e;
    if (b.is_zero()) {
        if (auto x = sqrt_of(a)) return canonicalize({*x, base.zero(), d});
        if (auto y = sqrt_of(a / d)) return canonicalize({base.zero(), *y, d});
        return std::nullopt;
    }
    auto c = sqrt_of(e.norm());
    if (!c) return std::nullopt;
    K two = base.from_int(2);
    for (const K& s : {*c, -*c}) {
        K h = (a + s) / two;
        if (h.is_zero()) continue;
        auto x = sqrt_of(h);
        if (!x || x->is_zero()) continue;
        K y = b / (two * *x);
        QuadExt<K> r(*x, y, d);
        if (r * r == e) return canonicalize(r);
    }
    return std::nullopt;
}

template <class K>
bool is_square(const QuadExt<K>& e) {
    return sqrt_of(e).has_value();
}

/// Preferred representative of {e, -e}: the first nonzero coordinate carries
/// the base field's canonical sign.
template <class K>
bool canonical_sign(const QuadExt<K>& e) {
    if (!e.re().is_zero()) return canonical_sign(e.re());
    return canonical_sign(e.im());
}

template <class K>
bool canonical_less(const QuadExt<K>& a, const QuadExt<K>& b) {
    if (a.re() != b.re()) return canonical_less(a.re(), b.re());
    return canonical_less(a.im(), b.im());
}

template <class K>
std::string to_string(const QuadExt<K>& e) {
    std::string root = "sqrt(" + to_string(e.adjoined()) + ")";
    if (e.im().is_zero()) return to_string(e.re());
    std::string bs = to_string(e.im());
    bool neg = !bs.empty() && bs[0] == '-';
    if (neg) bs = bs.substr(1);
    std::string part = bs == "1" ? root : bs + "*" + root;
    if (e.re().is_zero()) return neg ? "-" + part : part;
    return to_string(e.re()) + (neg ? " - " : " + ") + part;
}

/// One completing-the-square step: extend the base field by sqrt(d).
/// Rejects square d; extending an extension is rejected at compile time.
template <class K>
typename QuadExt<K>::Ctx adjoin_sqrt(const typename K::Ctx& base, const K& d) {
    return typename QuadExt<K>::Ctx(base, d);
}

} // namespace nodalis
