#include "d7/valuation.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "d7/ints.hpp"

namespace d7 {

long pi_bound(long n, long r) {
    if (n < 0 || r < 1) throw std::invalid_argument("pi_bound: need n >= 0, r >= 1");
    if (n == 1) return floor_div(8 * r - 5, 4) + 3;
    if (n == 2) return floor_div(8 * r - 5, 4) + 1;
    return floor_div(4 * r - n - 1, 2);  // n >= 3, and the n = 0 extension
}

long theta(long n) {
    if (n < 1) throw std::invalid_argument("theta: need n >= 1");
    return floor_div(8 * n - 5, 4);
}

long phi(long j, long k) {
    if (j < 0 || j > 3 || k < 1 || k > 4) throw std::invalid_argument("phi: domain is j in 0..3, k in 1..4");
    if (j == 0) {
        static constexpr long table[4] = {0, 2, 7, 8};
        return table[k - 1];
    }
    return floor_div(4 * k + 2 * j + 1, 2);
}

AJKTable derive_ajk(const std::array<XPoly, 4>& aj) {
    AJKTable t;
    for (long j = 0; j <= 3; ++j) {
        if (aj[static_cast<size_t>(j)].min_support() < 1 || aj[static_cast<size_t>(j)].degree() > 4)
            throw std::domain_error("modular-equation polynomial a_" + std::to_string(j) +
                                    " must have support in x^1..x^4");
        for (long k = 1; k <= 4; ++k)
            t.a[static_cast<size_t>(j)][static_cast<size_t>(k - 1)] =
                shift_down_exact(aj[static_cast<size_t>(j)].coeff(k), phi(j, k));
    }
    return t;
}

UXTable::UXTable(std::array<XPoly, 4> base, std::array<XPoly, 4> aj) : aj_(std::move(aj)) {
    u_.assign(base.begin(), base.end());
    derive_ajk(aj_);  // validates shape and divisibility of the a_j
    for (int n = 0; n <= 3; ++n) certify(n);
}

void UXTable::certify(int n) const {
    const XPoly& p = u_[static_cast<size_t>(n)];
    for (const auto& [r, c] : p.map()) {
        if (r < support_floor(n))
            throw std::logic_error("U(x^" + std::to_string(n) + ") has support at x^" +
                                   std::to_string(r) + ", below ceil((n+1)/4)");
        if (v2(c) < pi_bound(n, r))
            throw std::logic_error("fractional h(" + std::to_string(n) + "," + std::to_string(r) +
                                   "): v2 = " + std::to_string(v2(c)) +
                                   " < pi = " + std::to_string(pi_bound(n, r)));
    }
}

void UXTable::extend(int n_max) {
    for (int n = static_cast<int>(u_.size()); n <= n_max; ++n) {
        XPoly acc;
        for (int j = 0; j <= 3; ++j)
            acc = add(acc, mul(aj_[static_cast<size_t>(j)], u_[static_cast<size_t>(n + j - 4)]));
        u_.push_back(neg(acc));
        certify(n);
    }
}

const XPoly& UXTable::u(int n) const {
    if (n < 0 || n > n_max())
        throw std::out_of_range("UXTable covers 0..=" + std::to_string(n_max()));
    return u_[static_cast<size_t>(n)];
}

mpz_class UXTable::h(int n, long r) const { return shift_down_exact(u(n).coeff(r), pi_bound(n, r)); }

XPoly UXTable::apply(const XPoly& p) const {
    if (p.coeff(0) != 0)
        throw std::domain_error("U extension needs a zero constant term");
    if (p.degree() > n_max())
        throw std::out_of_range("UXTable too small: degree " + std::to_string(p.degree()) +
                                " > n_max " + std::to_string(n_max()));
    XPoly acc;
    for (const auto& [n, c] : p.map()) acc = add(acc, scalar_mul(c, u(static_cast<int>(n))));
    return acc;
}

namespace {

std::string tuple_str(long n, long r, long j, long k) {
    std::ostringstream os;
    os << "(n,r,j,k)=(" << n << ',' << r << ',' << j << ',' << k << ')';
    return os.str();
}

}  // namespace

Report verify_lemma31_inequalities(long n_max, long r_max) {
    const std::string params =
        "n_max=" + std::to_string(n_max) + ",r_max=" + std::to_string(r_max);
    if (n_max < 4) return Report::fail("lemma31_sweep", params, "n_max must be >= 4");
    for (long n = 4; n <= n_max; ++n) {
        for (long r = support_floor(n); r <= r_max; ++r) {
            for (long j = 0; j <= 3; ++j) {
                for (long k = 1; k <= 4; ++k) {
                    const long m = n + j - 4;
                    const long rk = r - k;
                    if (rk < 1 || rk < support_floor(m)) continue;
                    if (pi_bound(m, rk) + phi(j, k) < pi_bound(n, r))
                        return Report::fail(
                            "lemma31_sweep", params,
                            tuple_str(n, r, j, k) + ": pi(" + std::to_string(m) + "," +
                                std::to_string(rk) + ")+phi = " +
                                std::to_string(pi_bound(m, rk) + phi(j, k)) + " < pi(n,r) = " +
                                std::to_string(pi_bound(n, r)));
                }
            }
        }
    }
    // The j = 0 chains, as identities on the generic-branch floor
    // formulas (exact equality in the displayed forms), and the j >= 1
    // chain's two inequality steps.
    auto generic_pi = [](long n, long r) { return floor_div(4 * r - n - 1, 2); };
    for (long n = 4; n <= n_max; ++n) {
        for (long r = 1; r <= r_max; ++r) {
            const long target = generic_pi(n, r);
            if (generic_pi(n - 4, r - 1) + phi(0, 1) != target)
                return Report::fail("lemma31_sweep", params,
                                    "k=1 chain identity fails at " + tuple_str(n, r, 0, 1));
            if (generic_pi(n - 4, r - 2) + phi(0, 2) != target)
                return Report::fail("lemma31_sweep", params,
                                    "k=2 chain identity fails at " + tuple_str(n, r, 0, 2));
            if (generic_pi(n - 4, r - 3) + phi(0, 3) != floor_div(4 * r - n + 5, 2) ||
                floor_div(4 * r - n + 5, 2) < target)
                return Report::fail("lemma31_sweep", params,
                                    "k=3 chain fails at " + tuple_str(n, r, 0, 3));
            if (generic_pi(n - 4, r - 4) + phi(0, 4) != floor_div(4 * r - n + 3, 2) ||
                floor_div(4 * r - n + 3, 2) < target)
                return Report::fail("lemma31_sweep", params,
                                    "k=4 chain fails at " + tuple_str(n, r, 0, 4));
            for (long j = 1; j <= 3; ++j)
                for (long k = 1; k <= 4; ++k) {
                    const long lhs = generic_pi(n + j - 4, r - k) + phi(j, k);
                    if (lhs < floor_div(4 * r - n + j + 3, 2) ||
                        floor_div(4 * r - n + j + 3, 2) < target)
                        return Report::fail("lemma31_sweep", params,
                                            "j>=1 chain fails at " + tuple_str(n, r, j, k));
                }
        }
    }
    return Report::ok("lemma31_sweep", params);
}

Report verify_theorem41_inequalities(long n_max, long r_max) {
    const std::string params =
        "n_max=" + std::to_string(n_max) + ",r_max=" + std::to_string(r_max);
    if (n_max < 3) return Report::fail("theorem41_sweep", params, "n_max must be >= 3");
    for (long n = 1; n <= n_max; ++n) {
        for (long r = support_floor(n); r <= r_max; ++r) {
            const long lhs = pi_bound(n, r) + theta(n);
            const long rhs = theta(r) + 3;
            if (lhs < rhs)
                return Report::fail("theorem41_sweep", params,
                                    "pi(" + std::to_string(n) + "," + std::to_string(r) +
                                        ")+theta(n) = " + std::to_string(lhs) + " < theta(r)+3 = " +
                                        std::to_string(rhs));
            if ((n == 1 || n == 2) && lhs != rhs)
                return Report::fail("theorem41_sweep", params,
                                    "n=" + std::to_string(n) + " case must be exact at r=" +
                                        std::to_string(r));
            if (n >= 3) {
                // Stepwise chain: the floor rewrites and both lower bounds.
                const long a = floor_div(8 * r - 2 * n - 2, 4);
                if (pi_bound(n, r) != a)
                    return Report::fail("theorem41_sweep", params,
                                        "quarter-denominator rewrite fails at n=" +
                                            std::to_string(n) + ",r=" + std::to_string(r));
                const long mid = floor_div(8 * r + 6 * n - 10, 4);
                if (a + theta(n) < mid || mid < theta(r) + floor_div(6 * n - 5, 4) ||
                    floor_div(6 * n - 5, 4) < 3)
                    return Report::fail("theorem41_sweep", params,
                                        "n>=3 chain fails at n=" + std::to_string(n) + ",r=" +
                                            std::to_string(r));
            }
        }
    }
    return Report::ok("theorem41_sweep", params);
}

Report check_v_membership(const XPoly& p, long extra_pow2) {
    const std::string params = "extra_pow2=" + std::to_string(extra_pow2);
    if (p.coeff(0) != 0)
        throw std::domain_error("check_v_membership: polynomial has a nonzero constant term");
    for (const auto& [n, c] : p.map()) {
        const long need = theta(n) + extra_pow2;
        if (v2(c) < need)
            return Report::fail("v_membership", params,
                                "x^" + std::to_string(n) + ": v2(" + c.get_str() + ") = " +
                                    std::to_string(v2(c)) + " < theta+extra = " +
                                    std::to_string(need));
    }
    return Report::ok("v_membership", params);
}

}  // namespace d7
