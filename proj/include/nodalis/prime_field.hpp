#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "nodalis/errors.hpp"
#include "nodalis/field.hpp"
#include "nodalis/rational.hpp"

namespace nodalis {

/// Element of the prime field F_p, stored as the canonical residue in [0, p).
/// The characteristic must be odd: completing the square divides by 2
/// throughout the library, so p = 2 is rejected at construction.
class Fp {
  public:
    struct Ctx {
        using Element = Fp;
        explicit Ctx(std::int64_t prime) : p(prime) {
            if (p == 2) throw ConfigError("characteristic 2 is not supported");
            if (p < 2 || p > (std::int64_t(1) << 31))
                throw ConfigError("prime out of supported range");
            if (!boost::multiprecision::miller_rabin_test(BigInt(p), 32))
                throw ConfigError("modulus " + std::to_string(p) + " is not prime");
        }
        Fp zero() const { return Fp(0, p); }
        Fp one() const { return Fp(1, p); }
        Fp from_int(long long n) const {
            std::int64_t r = static_cast<std::int64_t>(n % p);
            if (r < 0) r += p;
            return Fp(r, p);
        }
        Fp from_ratio(const BigInt& n, const BigInt& d) const {
            BigInt pd = BigInt(p);
            std::int64_t dn = static_cast<std::int64_t>(((d % pd) + pd) % pd);
            if (dn == 0)
                throw ConfigError("denominator divisible by " + std::to_string(p));
            std::int64_t nn = static_cast<std::int64_t>(((n % pd) + pd) % pd);
            return Fp(nn, p) * Fp(dn, p).inv();
        }
        std::string name() const { return "F_" + std::to_string(p); }
        bool operator==(const Ctx&) const = default;

        std::int64_t p;
    };

    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t v, std::int64_t p) : v_(v), p_(p) {}

    Ctx ctx() const { return Ctx(p_); }
    std::int64_t residue() const { return v_; }
    std::int64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator+(const Fp& o) const {
        check(o);
        std::int64_t r = v_ + o.v_;
        if (r >= p_) r -= p_;
        return Fp(r, p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        std::int64_t r = v_ - o.v_;
        if (r < 0) r += p_;
        return Fp(r, p_);
    }
    Fp operator*(const Fp& o) const {
        check(o);
        // residues stay below 2^31, so the product fits in 64 bits
        return Fp(v_ * o.v_ % p_, p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp inv() const {
        if (v_ == 0) throw Error("inverse of zero in F_" + std::to_string(p_));
        return pow_int(*this, static_cast<unsigned long long>(p_ - 2));
    }

  private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::logic_error("mixed prime-field moduli");
    }
    std::int64_t v_;
    std::int64_t p_;
};

/// Euler criterion; zero counts as a square.
inline bool is_square(const Fp& e) {
    if (e.is_zero()) return true;
    return pow_int(e, static_cast<unsigned long long>((e.modulus() - 1) / 2)).is_one();
}

/// Tonelli-Shanks, returning the canonical (smaller) residue of the two roots.
inline std::optional<Fp> sqrt_of(const Fp& e) {
    const std::int64_t p = e.modulus();
    if (e.is_zero()) return e;
    if (!is_square(e)) return std::nullopt;
    Fp r(0, p);
    if (p % 4 == 3) {
        r = pow_int(e, static_cast<unsigned long long>((p + 1) / 4));
    } else {
        std::int64_t q = p - 1;
        unsigned s = 0;
        while (q % 2 == 0) {
            q /= 2;
            ++s;
        }
        Fp z(2, p);
        while (is_square(z)) z = z + Fp(1, p);
        Fp m_pow = pow_int(z, static_cast<unsigned long long>(q));
        Fp t = pow_int(e, static_cast<unsigned long long>(q));
        r = pow_int(e, static_cast<unsigned long long>((q + 1) / 2));
        unsigned m = s;
        while (!t.is_one()) {
            Fp t2 = t;
            unsigned i = 0;
            while (!t2.is_one()) {
                t2 = t2 * t2;
                ++i;
            }
            Fp b = m_pow;
            for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
            m_pow = b * b;
            t = t * m_pow;
            r = r * b;
            m = i;
        }
    }
    if (2 * r.residue() > p) r = -r;
    return r;
}

inline bool canonical_sign(const Fp& e) { return 2 * e.residue() <= e.modulus(); }

inline bool canonical_less(const Fp& a, const Fp& b) { return a.residue() < b.residue(); }

inline std::string to_string(const Fp& e) { return std::to_string(e.residue()); }

} // namespace nodalis
