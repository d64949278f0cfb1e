#pragma once

#include <concepts>
#include <optional>
#include <string>

namespace nodalis {

/// Requirements on an exact coefficient field element type.
///
/// Elements are immutable values. Each element knows the parameters of the
/// field it lives in (the prime p, the adjoined non-square d) and exposes
/// them through a nested `Ctx` type, so that containers holding no elements
/// can still construct constants. Every field here also provides, as free
/// functions found by ADL:
///
///   bool           is_square(const F&);
///   std::optional<F> sqrt_of(const F&);   // canonical representative
///   bool           canonical_sign(const F&); // prefers e over -e
///   bool           canonical_less(const F&, const F&); // total order
///   std::string    to_string(const F&);
template <class F>
concept FieldElement = requires(const F& a, const F& b, const typename F::Ctx& ctx, long long n) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a* b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.inv() } -> std::convertible_to<F>;
    { a.ctx() } -> std::convertible_to<typename F::Ctx>;
    { ctx.zero() } -> std::convertible_to<F>;
    { ctx.one() } -> std::convertible_to<F>;
    { ctx.from_int(n) } -> std::convertible_to<F>;
    { ctx.name() } -> std::convertible_to<std::string>;
};

template <FieldElement F>
F pow_int(const F& base, unsigned long long e) {
    F acc = base.ctx().one();
    F b = base;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

/// Identity by default; the rationals override this to strip square factors
/// so that extension descriptors come out in a normal form (-4 -> -1).
template <FieldElement F>
F square_class_rep(const F& e) {
    return e;
}

namespace detail {
/// ADL trampoline usable inside member functions that are themselves named
/// to_string.
template <class F>
std::string field_str(const F& v) {
    return to_string(v);
}
} // namespace detail

} // namespace nodalis
