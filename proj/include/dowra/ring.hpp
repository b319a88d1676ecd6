#pragma once

#include <concepts>
#include <string>

#include "mpoly.hpp"
#include "rational.hpp"

namespace dowra {

/// Contract every coefficient ring satisfies: a commutative Q-algebra with
/// exact equality, unit tests, and exact division by nonzero integers.
/// Realized by `rational` (numeric runs) and `mpoly` (fully symbolic runs).
template <typename R>
concept coeff_ring = requires(const R& a, const R& b, long n) {
    { R() } -> std::same_as<R>;
    { R::from_int(n) } -> std::same_as<R>;
    { R::from_mpz(mpz_class()) } -> std::same_as<R>;
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.is_unit() } -> std::convertible_to<bool>;
    { a.unit_inv() } -> std::same_as<R>;
    { a.div_int(n) } -> std::same_as<R>;
    { exact_div(a, b) } -> std::same_as<R>;
    { a.to_string() } -> std::same_as<std::string>;
};

static_assert(coeff_ring<rational>);
static_assert(coeff_ring<mpoly>);

template <coeff_ring R>
R ring_pow(const R& base, unsigned e) {
    R r = R::from_int(1);
    for (unsigned i = 0; i < e; ++i) {
        r = r * base;
    }
    return r;
}

} // namespace dowra
