#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "d7/report.hpp"
#include "d7/series.hpp"

namespace d7 {

/// Symbolic eta quotient on Gamma_0(level):
///   q^q_prefactor * prod_delta (q^delta; q^delta)_inf ^ r_delta
/// with every delta dividing the level.  The exponent list keeps its
/// insertion order so spec literals round-trip bit-exactly.
struct EtaSpec {
    long level = 1;
    std::vector<std::pair<long, long>> exponents;  // (delta, r_delta)
    long q_prefactor = 0;

    void validate() const;

    // Literal syntax: "N; d^r * d^r * ...; qpow"
    // e.g. "8; 2^2 * 8^4 * 1^-4 * 4^-2; 1"
    std::string print() const;
    static EtaSpec parse(const std::string& literal);

    long sum_r() const;          // total Pochhammer exponent
    long sum_delta_r() const;    // sum delta * r_delta
    long sum_codelta_r() const;  // sum (level/delta) * r_delta

    friend bool operator==(const EtaSpec& a, const EtaSpec& b) {
        return a.level == b.level && a.exponents == b.exponents &&
               a.q_prefactor == b.q_prefactor;
    }
};

// (q^a; q^b)_inf = prod_{m>=0} (1 - q^(a+bm)) through the given trunc.
Series pochhammer(long a, long b, long trunc, Ring ring = Ring::exact());

// Euler function (q^delta; q^delta)_inf via the pentagonal-number
// expansion, so its window is sparse.
Series euler_series(long delta, long trunc, Ring ring = Ring::exact());

Series expand_eta_quotient(const EtaSpec& spec, long trunc, Ring ring = Ring::exact());

// Newman's criteria for the quotient to be a weight-zero modular
// function on Gamma_0(level): sum r = 0, sum delta*r = 0 (mod 24),
// sum (level/delta)*r = 0 (mod 24), prod delta^r a rational square.
Report newman_modularity_check(const EtaSpec& spec);

struct CuspOrder {
    long a = 0;  // cusp representative a/c; c == level encodes infinity
    long c = 1;
    mpq_class order;

    std::string label(long level) const;
};

struct CuspOrderVector {
    long level = 1;
    std::vector<CuspOrder> orders;  // infinity first, then by value, 0 last

    mpq_class sum() const;
    // Classwise lookup: cusps a/c and a'/c are identified when
    // a = a' (mod gcd(c, level/c)).
    const CuspOrder& at(long a, long c) const;
};

// Orders of a Newman-passing quotient at every cusp class of
// Gamma_0(level), in the local variable at each cusp (width absorbed).
// The q_prefactor contributes (q_prefactor - sum_delta_r/24) at infinity
// on top of the eta-quotient order; for a genuine eta quotient that
// correction is zero.
CuspOrderVector cusp_orders(const EtaSpec& spec);

}  // namespace d7
