#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>

#include "nodalis/errors.hpp"
#include "nodalis/field.hpp"

namespace nodalis {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator (cpp_rational maintains that canonical form).
class Rational {
  public:
    struct Ctx {
        using Element = Rational;
        Rational zero() const { return Rational(); }
        Rational one() const { return Rational(1); }
        Rational from_int(long long n) const { return Rational(n); }
        Rational from_ratio(const BigInt& n, const BigInt& d) const {
            if (d == 0) throw ConfigError("rational with zero denominator");
            return Rational(BigRational(n, d));
        }
        std::string name() const { return "Q"; }
        bool operator==(const Ctx&) const = default;
    };

    Rational() : v_(0) {}
    explicit Rational(long long n) : v_(n) {}
    explicit Rational(BigRational v) : v_(std::move(v)) {}
    Rational(const BigInt& n, const BigInt& d) : v_(BigRational(n, d)) {
        if (d == 0) throw ConfigError("rational with zero denominator");
    }

    Ctx ctx() const { return {}; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error("division by zero in Q");
        return Rational(v_ / o.v_);
    }
    Rational operator-() const { return Rational(-v_); }
    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    Rational inv() const {
        if (is_zero()) throw Error("inverse of zero in Q");
        return Rational(1 / v_);
    }

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_negative() const { return v_ < 0; }
    bool less_than(const Rational& o) const { return v_ < o.v_; }

  private:
    BigRational v_;
};

namespace detail {
/// Exact integer square root test; returns the nonnegative root if n is a
/// perfect square.
inline std::optional<BigInt> perfect_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}
} // namespace detail

inline bool is_square(const Rational& e) {
    if (e.is_negative()) return false;
    return detail::perfect_sqrt(e.num()) && detail::perfect_sqrt(e.den());
}

/// Canonical square root: the nonnegative one.
inline std::optional<Rational> sqrt_of(const Rational& e) {
    if (e.is_negative()) return std::nullopt;
    auto n = detail::perfect_sqrt(e.num());
    auto d = detail::perfect_sqrt(e.den());
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

/// True when e is the preferred representative of {e, -e}.
inline bool canonical_sign(const Rational& e) { return !e.is_negative(); }

inline bool canonical_less(const Rational& a, const Rational& b) { return a.less_than(b); }

inline std::string to_string(const Rational& e) {
    std::string s = e.num().str();
    if (e.den() != 1) s += "/" + e.den().str();
    return s;
}

/// A representative of e modulo nonzero squares: square factors found by
/// trial division (and a perfect-square cofactor, if any) are stripped, so
/// e.g. -4 maps to -1 and 8/9 maps to 2. Square factors of very large
/// primes can survive; the result is always in the same square class.
template <>
inline Rational square_class_rep<Rational>(const Rational& e) {
    if (e.is_zero()) return e;
    BigInt k = e.num() * e.den();
    BigInt sign = k < 0 ? -1 : 1;
    k = boost::multiprecision::abs(k);
    BigInt rep = 1;
    for (BigInt p = 2; p * p <= k && p < 100000; p += (p == 2 ? 1 : 2)) {
        if (k % p != 0) continue;
        unsigned mult = 0;
        while (k % p == 0) {
            k /= p;
            ++mult;
        }
        if (mult % 2) rep *= p;
    }
    if (!detail::perfect_sqrt(k)) rep *= k;
    return Rational(sign * rep, 1);
}

} // namespace nodalis
