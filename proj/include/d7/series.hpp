#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <vector>

#include "d7/ring.hpp"

namespace d7 {

/// Truncated formal power (Laurent) series in q with big-integer
/// coefficients.
///
/// A nonzero series stores the dense coefficient window
/// [valuation, trunc); coefficients at exponents >= trunc are unknown,
/// coefficients below the valuation are exactly zero.  The zero series
/// is "zero up to trunc": it stores no window and its valuation reads
/// as trunc.
///
/// Every operation propagates trunc conservatively: a result never
/// claims a coefficient that depends on an unknown input coefficient.
/// In exact mode the leading stored coefficient of a nonzero series is
/// nonzero; in mod-2^k mode leading zeros are kept as-is (a residue of
/// zero is a legitimate value there).
///
/// Values are immutable after construction; operations are pure.
class Series {
public:
    // coeffs must cover exactly [valuation, trunc).
    Series(Ring ring, long valuation, std::vector<mpz_class> coeffs, long trunc);

    static Series zero(Ring ring, long trunc);
    static Series one(Ring ring, long trunc);
    static Series monomial(Ring ring, mpz_class coeff, long exponent, long trunc);

    const Ring& ring() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }
    long valuation() const { return is_zero() ? trunc_ : val_; }
    long trunc() const { return trunc_; }
    long known_through() const { return trunc_ - 1; }

    // Coefficient at exponent e; throws std::out_of_range for e >= trunc.
    const mpz_class& coeff(long e) const;

    const std::vector<mpz_class>& window() const { return coeffs_; }

    void write(std::ostream& os) const;
    static Series read(std::istream& is);

private:
    Ring ring_;
    long val_ = 0;
    long trunc_ = 0;
    std::vector<mpz_class> coeffs_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series mul(const Series& a, const Series& b);
Series scalar_mul(const mpz_class& c, const Series& a);

// Multiplicative inverse.  Exact mode requires leading coefficient +-1
// (all series here are eta-type units); mod-2^k mode requires an odd
// leading coefficient.  Result trunc is a.trunc - 2*a.valuation.
Series invert(const Series& a);

// Integer power by repeated squaring; negative e goes through invert.
Series pow(const Series& a, long e);

// Substitution q -> q^m: coefficient of q^(mn) is a's coefficient of q^n.
Series dilate(const Series& a, long m);

// U_ell: sum c(n) q^n  |->  sum c(ell*n) q^n.  Result trunc is
// ceil(a.trunc / ell).
Series u_ell(const Series& a, long ell);

// Multiply by q^k (k may be negative).
Series shift(const Series& a, long k);

// Forget coefficients at exponents >= t (t <= a.trunc).
Series truncate_to(const Series& a, long t);

// Equal coefficients at all exponents below t (both must know them).
bool agree_through(const Series& a, const Series& b, long t);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

}  // namespace d7
