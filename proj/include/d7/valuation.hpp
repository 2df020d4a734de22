#pragma once

#include <array>
#include <vector>

#include "d7/report.hpp"
#include "d7/xpoly.hpp"

namespace d7 {

// Lower bound for the 2-adic valuation of the x^r coefficient of U(x^n):
//   n = 1: floor((8r-5)/4) + 3
//   n = 2: floor((8r-5)/4) + 1
//   n >= 3: floor((4r-n-1)/2)
// n = 0 uses the n >= 3 branch formula; the recurrence for n = 4
// consumes pi(0, .) and this extension is the one that keeps the j = 0
// chain identities exact.
long pi_bound(long n, long r);

// theta(n) = floor((8n-5)/4); the valuation profile of the space V.
long theta(long n);

// Valuation profile of the modular-equation coefficients:
// phi(0, k) = 0, 2, 7, 8 for k = 1..4; phi(j, k) = floor((4k+2j+1)/2)
// for 1 <= j <= 3.  Domain is j in 0..3, k in 1..4.
long phi(long j, long k);

// First r allowed in the support of U(x^n).
inline long support_floor(long n) { return (n + 1 + 3) / 4; }  // ceil((n+1)/4)

/// a(j,k) with a_j = sum_k a(j,k) 2^phi(j,k) x^k; the divisions must be
/// exact or the table construction throws.
struct AJKTable {
    std::array<std::array<mpz_class, 4>, 4> a;  // [j][k-1]
    const mpz_class& at(long j, long k) const { return a[static_cast<size_t>(j)][static_cast<size_t>(k - 1)]; }
};

AJKTable derive_ajk(const std::array<XPoly, 4>& aj);

/// U(x^n) as polynomials in x, built from the four base cases by
///   U(x^n) = -sum_j a_j * U(x^(n+j-4)),
/// with every coefficient certified divisible by 2^pi(n,r) as it is
/// added (a fractional h(n,r) aborts: it would contradict the valuation
/// lemma, and silently continuing would poison everything downstream).
class UXTable {
public:
    UXTable(std::array<XPoly, 4> base, std::array<XPoly, 4> aj);

    void extend(int n_max);
    int n_max() const { return static_cast<int>(u_.size()) - 1; }
    const XPoly& u(int n) const;

    // h(n,r) = coeff of x^r in U(x^n) divided by 2^pi(n,r), exactly.
    mpz_class h(int n, long r) const;

    // Linear extension of U to polynomials with zero constant term.
    XPoly apply(const XPoly& p) const;

private:
    void certify(int n) const;

    std::array<XPoly, 4> aj_;
    std::vector<XPoly> u_;
};

// Exhaustive sweep of pi(n+j-4, r-k) + phi(j,k) >= pi(n,r) over
// 4 <= n <= n_max, support_floor(n) <= r <= r_max, j in 0..3, k in 1..4
// (restricted to r-k inside the valid support range), plus the four
// j = 0 chain identities and the j >= 1 chain as floor identities.
Report verify_lemma31_inequalities(long n_max, long r_max);

// pi(n,r) + theta(n) >= theta(r) + 3 for 1 <= n <= n_max and
// support_floor(n) <= r <= r_max, with the n = 1, 2 cases checked as
// exact equalities and the n >= 3 chain checked stepwise.
Report verify_theorem41_inequalities(long n_max, long r_max);

// Membership in 2^extra_pow2 * V: every x^n coefficient must have
// v2 >= theta(n) + extra_pow2.  The polynomial must have a zero
// constant term.
Report check_v_membership(const XPoly& p, long extra_pow2);

}  // namespace d7
