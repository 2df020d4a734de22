#include "d7/elongated.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "d7/ints.hpp"

namespace d7 {

EtaSpec d_spec(long k) {
    if (k < 0) throw std::invalid_argument("d_spec: k must be >= 0");
    return EtaSpec{2, {{1, -(3 * k + 1)}, {2, k}}, 0};
}

EtaSpec hauptmodul_spec() { return EtaSpec{8, {{2, 2}, {8, 4}, {1, -4}, {4, -2}}, 1}; }

EtaSpec hauptmodul_dilated_spec() {
    return EtaSpec{32, {{8, 2}, {32, 4}, {4, -4}, {16, -2}}, 4};
}

EtaSpec u_prefactor_spec() {
    return EtaSpec{16, {{2, 13}, {4, 24}, {16, 2}, {1, -26}, {8, -13}}, 1};
}

EtaSpec l_prefactor_spec() { return EtaSpec{8, {{1, 26}, {4, 2}, {2, -13}}, 0}; }

Series d_series(long k, long trunc, Ring ring) {
    return expand_eta_quotient(d_spec(k), trunc, ring);
}

long lambda_alpha(int alpha) {
    if (alpha < 1 || alpha > 30) throw std::invalid_argument("lambda_alpha: need 1 <= alpha <= 30");
    const long m = 1L << (2 * alpha);  // 4^alpha
    const long lam = (2 * m + 1) / 3;
    // The defining congruence and minimality.
    if ((2 * m + 1) % 3 != 0 || (3 * lam) % m != 1 || lam < 1 || lam > m)
        throw std::logic_error("lambda_alpha postcondition failed");
    return lam;
}

Series l_alpha_series(int alpha, long trunc, Ring ring, long k) {
    if (trunc < 2) throw std::invalid_argument("l_alpha_series: trunc must be >= 2");
    const long lam = lambda_alpha(alpha);
    const long step = 1L << (2 * alpha);
    const long need = step * (trunc - 2) + lam + 1;
    Series d = d_series(k, need, ring);
    std::vector<mpz_class> c(static_cast<size_t>(trunc - 1));
    for (long n = 0; n + 1 < trunc; ++n) c[static_cast<size_t>(n)] = d.coeff(step * n + lam);
    Series tail(ring, 1, std::move(c), trunc);
    return mul(expand_eta_quotient(l_prefactor_spec(), trunc, ring), tail);
}

Series hauptmodul_series(long trunc, Ring ring) {
    return expand_eta_quotient(hauptmodul_spec(), trunc, ring);
}

Series u_operator(const Series& f) {
    const long a_trunc = std::max<long>(f.trunc() - f.valuation() + 1, 8);
    return u_operator(f, expand_eta_quotient(u_prefactor_spec(), a_trunc, f.ring()));
}

Series u_operator(const Series& f, const Series& prefactor) {
    return u_ell(mul(prefactor, f), 4);
}

ReduceResult reduce_to_x_poly(const Series& f, long max_deg) {
    if (!f.ring().is_exact())
        throw std::domain_error("reduce_to_x_poly requires exact coefficients");
    if (!f.is_zero() && f.valuation() < 1)
        throw std::domain_error("reduce_to_x_poly requires valuation >= 1");
    if (f.trunc() <= max_deg)
        throw std::invalid_argument("reduce_to_x_poly: trunc must exceed max_deg");

    const Series x = hauptmodul_series(f.trunc());
    Series residual = f;
    Series xpow = x;
    ReduceResult out;
    for (long r = 1; r <= max_deg; ++r) {
        if (r >= residual.trunc()) break;
        const mpz_class& c = residual.coeff(r);
        if (c != 0) {
            out.poly.set(r, c);
            residual = sub(residual, scalar_mul(c, xpow));
        }
        if (r < max_deg) xpow = mul(xpow, x);
    }
    out.checked_through = residual.known_through();
    if (residual.is_zero()) {
        out.complete = true;
    } else {
        out.complete = false;
        out.first_residual_exp = residual.valuation();
        for (long e = residual.valuation(); e < residual.trunc(); ++e)
            if (residual.coeff(e) != 0) {
                out.first_residual_exp = e;
                break;
            }
    }
    return out;
}

Series eval_poly_at(const XPoly& p, const Series& base) {
    Series acc = Series::zero(base.ring(), base.trunc());
    if (p.empty()) return acc;
    Series xpow = Series::one(base.ring(), base.trunc() - base.valuation());
    long cur = 0;
    for (const auto& [r, c] : p.map()) {
        if (base.valuation() * r >= base.trunc()) break;  // term below truncation window
        while (cur < r) xpow = mul(xpow, base), ++cur;
        acc = add(acc, scalar_mul(c, xpow));
    }
    return acc;
}

Series eval_x_poly(const XPoly& p, long trunc) {
    return eval_poly_at(p, hauptmodul_series(trunc));
}

namespace {

// Exact Gaussian elimination for the 16-unknown modular-equation system.
struct RationalSolver {
    std::vector<std::vector<mpq_class>> rows;  // each row: 16 coefficients | rhs

    // Returns false if the row is dependent, true if it increased rank.
    bool eliminate_into(std::vector<mpq_class> row) {
        for (auto& pivot_row : rows) {
            size_t p = 0;
            while (p < 16 && pivot_row[p] == 0) ++p;
            if (p == 16 || row[p] == 0) continue;
            mpq_class factor = row[p] / pivot_row[p];
            for (size_t i = p; i <= 16; ++i) row[i] -= factor * pivot_row[i];
        }
        size_t lead = 0;
        while (lead < 16 && row[lead] == 0) ++lead;
        if (lead == 16) {
            if (row[16] != 0) throw std::runtime_error("modular-equation system is inconsistent");
            return false;
        }
        rows.push_back(std::move(row));
        return true;
    }

    std::array<mpq_class, 16> solve() {
        if (rows.size() != 16) throw std::runtime_error("modular-equation system is degenerate");
        std::array<mpq_class, 16> sol;
        // Order rows by leading column, then back-substitute.
        std::vector<std::vector<mpq_class>*> by_lead(16, nullptr);
        for (auto& r : rows) {
            size_t p = 0;
            while (r[p] == 0) ++p;
            by_lead[p] = &r;
        }
        for (long p = 15; p >= 0; --p) {
            auto& r = *by_lead[static_cast<size_t>(p)];
            mpq_class v = r[16];
            for (size_t i = static_cast<size_t>(p) + 1; i < 16; ++i) v -= r[i] * sol[i];
            sol[static_cast<size_t>(p)] = v / r[static_cast<size_t>(p)];
        }
        return sol;
    }
};

}  // namespace

std::array<XPoly, 4> derive_modular_equation(long trunc) {
    if (trunc < 40) throw std::invalid_argument("derive_modular_equation: trunc too small");
    const Series x = hauptmodul_series(trunc);
    const Series x4 = truncate_to(dilate(hauptmodul_series(ceil_div(trunc, 4) + 2), 4), trunc);

    // Column (j,k) is the series x(4 tau)^k * x^j, j = 0..3, k = 1..4.
    std::vector<Series> cols;
    std::vector<Series> x4pow{Series::one(x4.ring(), trunc)};
    for (int k = 1; k <= 4; ++k) x4pow.push_back(mul(x4pow.back(), x4));
    std::vector<Series> xpow{Series::one(x.ring(), trunc)};
    for (int j = 1; j <= 3; ++j) xpow.push_back(mul(xpow.back(), x));
    long known = trunc;
    for (int j = 0; j <= 3; ++j)
        for (int k = 1; k <= 4; ++k) {
            cols.push_back(mul(x4pow[static_cast<size_t>(k)], xpow[static_cast<size_t>(j)]));
            known = std::min(known, cols.back().trunc());
        }
    const Series rhs = neg(mul(xpow[3], x));  // -x^4
    known = std::min(known, rhs.trunc());

    RationalSolver solver;
    long rank = 0, row_exp = 4;
    for (; row_exp < known && rank < 16; ++row_exp) {
        std::vector<mpq_class> row(17);
        for (size_t i = 0; i < 16; ++i) row[i] = cols[i].coeff(row_exp);
        row[16] = rhs.coeff(row_exp);
        if (solver.eliminate_into(std::move(row))) ++rank;
    }
    std::array<mpq_class, 16> sol = solver.solve();

    // Every remaining known coefficient must be consistent with the solution.
    for (long e = row_exp; e < known; ++e) {
        mpq_class acc = 0;
        for (size_t i = 0; i < 16; ++i) acc += sol[i] * mpq_class(cols[i].coeff(e));
        if (acc != mpq_class(rhs.coeff(e)))
            throw std::runtime_error("modular-equation solution fails at exponent " +
                                     std::to_string(e));
    }

    std::array<XPoly, 4> aj;
    for (int j = 0; j <= 3; ++j)
        for (int k = 1; k <= 4; ++k) {
            const mpq_class& v = sol[static_cast<size_t>(4 * j + (k - 1))];
            if (v.get_den() != 1)
                throw std::runtime_error("modular-equation coefficient is not an integer");
            aj[static_cast<size_t>(j)].set(k, v.get_num());
        }
    return aj;
}

Report verify_modular_equation(const std::array<XPoly, 4>& aj, long trunc) {
    const std::string params = "trunc=" + std::to_string(trunc);
    const long work = trunc + 8;
    const Series x = hauptmodul_series(work);
    const Series x4 = truncate_to(dilate(hauptmodul_series(ceil_div(work, 4) + 2), 4), work);

    Series residual = pow(x, 4);
    Series xpow = Series::one(x.ring(), work);
    for (int j = 0; j <= 3; ++j) {
        residual = add(residual, mul(eval_poly_at(aj[static_cast<size_t>(j)], x4), xpow));
        if (j < 3) xpow = mul(xpow, x);
    }
    if (residual.known_through() < trunc)
        return Report::fail("modeq", params,
                            "internal truncation fell short: residual known through " +
                                std::to_string(residual.known_through()),
                            trunc);
    for (long e = residual.valuation(); e <= trunc; ++e)
        if (e < residual.trunc() && residual.coeff(e) != 0)
            return Report::fail("modeq", params,
                                "residual coefficient at q^" + std::to_string(e) + " is " +
                                    residual.coeff(e).get_str(),
                                trunc);
    return Report::ok("modeq", params, trunc);
}

}  // namespace d7
