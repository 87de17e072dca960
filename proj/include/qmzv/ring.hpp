#pragma once

#include <concepts>
#include <string>

#include "qmzv/rat.hpp"

namespace qmzv {

namespace detail {
// Unqualified call so that overloads declared after this point are found by ADL.
template <class T>
bool ring_is_zero(const T& x) {
    return is_zero(x);
}
}  // namespace detail

// Exact commutative coefficient ring. Every ring in this library embeds the
// rationals, so R(0), R(1) and R(Rat) are always available. exact_div(a, b)
// returns a/b when b divides a and throws otherwise.
template <class R>
concept Ring = std::regular<R> && std::constructible_from<R, int> &&
               std::constructible_from<R, const Rat&> && requires(const R& a, const R& b) {
                   { a + b } -> std::convertible_to<R>;
                   { a - b } -> std::convertible_to<R>;
                   { a * b } -> std::convertible_to<R>;
                   { -a } -> std::convertible_to<R>;
                   { is_zero(a) } -> std::convertible_to<bool>;
                   { exact_div(a, b) } -> std::convertible_to<R>;
                   { to_string(a) } -> std::convertible_to<std::string>;
               };

template <Ring R>
R ring_pow(R base, unsigned long exponent) {
    R out(1);
    while (exponent > 0) {
        if (exponent & 1UL) out = out * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return out;
}

template <Ring R>
R scale(const R& a, const Rat& c) {
    return a * R(c);
}

inline Rat sign_pow(long exponent) { return (exponent % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace qmzv
