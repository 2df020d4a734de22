#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>

namespace d7 {

/// Integer polynomial in the Hauptmodul x, stored as a finitely
/// supported exponent -> coefficient map with no explicit zeros.
class XPoly {
public:
    XPoly() = default;

    bool empty() const { return c_.empty(); }
    long degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    long min_support() const { return c_.empty() ? 0 : c_.begin()->first; }
    size_t terms() const { return c_.size(); }

    const mpz_class& coeff(long r) const;
    void set(long r, mpz_class v);
    void add_term(long r, const mpz_class& v);

    const std::map<long, mpz_class>& map() const { return c_; }

    friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    // Text format: one `r coefficient` pair per line, ascending r.
    void write(std::ostream& os) const;
    static XPoly read(std::istream& is);

private:
    std::map<long, mpz_class> c_;
};

XPoly add(const XPoly& a, const XPoly& b);
XPoly neg(const XPoly& a);
XPoly mul(const XPoly& a, const XPoly& b);
XPoly scalar_mul(const mpz_class& s, const XPoly& a);

// p / 2^k with an exactness check on every coefficient.
XPoly shift_down_exact(const XPoly& a, long k);

// First exponent where the two polynomials differ, or -1 if equal.
long first_difference(const XPoly& a, const XPoly& b);

}  // namespace d7
