#pragma once

#include <cstdint>
#include <string>

#include "schubert/error.hpp"

namespace schubert {

// All coefficients are 64-bit with overflow detection; any overflow throws
// instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in addition: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in subtraction: " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in multiplication: " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

// acc += a * b
inline void checked_fma(Int& acc, Int a, Int b)
{
    acc = checked_add(acc, checked_mul(a, b));
}

inline Int sign_of_parity(long long n)
{
    return (n % 2 == 0) ? 1 : -1;
}

} // namespace schubert
