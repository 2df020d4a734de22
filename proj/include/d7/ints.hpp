#pragma once

#include <gmpxx.h>

#include <limits>
#include <stdexcept>

namespace d7 {

// Floored quotient (rounds toward -inf), valid for negative a.
inline long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline long ceil_div(long a, long b) { return floor_div(a + b - 1, b); }

// 2-adic valuation; v2(0) is reported as "infinite".
inline long v2(const mpz_class& z) {
    if (z == 0) return std::numeric_limits<long>::max();
    return static_cast<long>(mpz_scan1(z.get_mpz_t(), 0));
}

inline mpz_class pow2(unsigned long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

// z / 2^k, throwing unless the division is exact.
inline mpz_class shift_down_exact(const mpz_class& z, long k) {
    if (k < 0) throw std::invalid_argument("shift_down_exact: negative shift");
    if (z == 0) return 0;
    if (v2(z) < k) throw std::domain_error("shift_down_exact: not divisible by 2^k");
    mpz_class r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

}  // namespace d7
