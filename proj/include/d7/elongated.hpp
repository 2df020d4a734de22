#pragma once

#include <array>
#include <optional>

#include "d7/eta.hpp"
#include "d7/report.hpp"
#include "d7/series.hpp"
#include "d7/xpoly.hpp"

namespace d7 {

// Generating function of k-elongated plane partition diamonds:
//   D_k(q) = prod (1-q^(2m))^k / (1-q^m)^(3k+1).
EtaSpec d_spec(long k);

// Hauptmodul of X_0(8) with a pole only at the cusp 0:
//   x = q (q^2;q^2)^2 (q^8;q^8)^4 / ((q;q)^4 (q^4;q^4)^2).
EtaSpec hauptmodul_spec();

// x(4 tau) viewed on Gamma_0(32) (divisors and prefactor dilated by 4).
EtaSpec hauptmodul_dilated_spec();

// Prefactor A of the operator U(f) = U_4(A f):
//   A = q (q^2)^13 (q^4)^24 (q^16)^2 / ((q)^26 (q^8)^13.
EtaSpec u_prefactor_spec();

// Prefactor of the L series: (q;q)^26 (q^4;q^4)^2 / (q^2;q^2)^13.
EtaSpec l_prefactor_spec();

Series d_series(long k, long trunc, Ring ring = Ring::exact());

// Minimum positive solution of 3y = 1 (mod 4^alpha); equals (2*4^alpha+1)/3.
long lambda_alpha(int alpha);

// L_alpha = Phi(q) * sum_{n>=0} d_k(4^alpha n + lambda_alpha) q^(n+1),
// a series with valuation 1.  Needs d_k through 4^alpha*(trunc-1)+lambda.
Series l_alpha_series(int alpha, long trunc, Ring ring = Ring::exact(), long k = 7);

Series hauptmodul_series(long trunc, Ring ring = Ring::exact());

// Inputs must be known through 4*out_trunc + 8 to produce out_trunc
// coefficients of U(f).
constexpr long u_input_trunc(long out_trunc) { return 4 * out_trunc + 8; }

// U(f) = U_4(A * f).  The prefactor is expanded internally to match f;
// pass a precomputed expansion when calling in a loop.
Series u_operator(const Series& f);
Series u_operator(const Series& f, const Series& prefactor);

struct ReduceResult {
    XPoly poly;
    bool complete = false;        // residual vanished through the known window
    long first_residual_exp = -1; // first surviving exponent when incomplete
    long checked_through = 0;     // residual verified zero below this exponent
};

// Triangular elimination against x = q + O(q^2): strips coefficients
// c_r x^r for r = valuation..max_deg and requires the residual to vanish
// through the truncation window.  Input must be exact with valuation >= 1.
ReduceResult reduce_to_x_poly(const Series& f, long max_deg);

// sum_r p(r) * base^r in the base series' ring.
Series eval_poly_at(const XPoly& p, const Series& base);

// sum_r p(r) * x(q)^r through the given trunc.
Series eval_x_poly(const XPoly& p, long trunc);

// Coefficient polynomials a_j, j = 0..3, of the degree-4 modular
// equation x^4 + sum_j a_j(4 tau) x^j = 0, solved from scratch as the
// unique exact rational solution of the truncated linear system in the
// 16 monomials x(4 tau)^k x^j.  Throws if the system is inconsistent or
// the solution is not integral.
std::array<XPoly, 4> derive_modular_equation(long trunc = 100);

// Checks that x^4 + sum_j a_j(4 tau) x^j vanishes coefficientwise
// through q^trunc.
Report verify_modular_equation(const std::array<XPoly, 4>& aj, long trunc = 200);

}  // namespace d7
