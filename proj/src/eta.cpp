#include "d7/eta.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "d7/ints.hpp"

namespace d7 {

void EtaSpec::validate() const {
    if (level < 1) throw std::invalid_argument("eta spec: level must be positive");
    if (exponents.empty()) throw std::invalid_argument("eta spec: exponent map is empty");
    std::vector<long> seen;
    for (auto [delta, r] : exponents) {
        (void)r;
        if (delta < 1 || level % delta != 0)
            throw std::invalid_argument("eta spec: divisor " + std::to_string(delta) +
                                        " does not divide level " + std::to_string(level));
        if (std::find(seen.begin(), seen.end(), delta) != seen.end())
            throw std::invalid_argument("eta spec: duplicate divisor " + std::to_string(delta));
        seen.push_back(delta);
    }
}

std::string EtaSpec::print() const {
    std::ostringstream os;
    os << level << "; ";
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (i) os << " * ";
        os << exponents[i].first << '^' << exponents[i].second;
    }
    os << "; " << q_prefactor;
    return os.str();
}

EtaSpec EtaSpec::parse(const std::string& literal) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad eta spec literal \"" + literal + "\": " + why);
    };
    const auto semi1 = literal.find(';');
    const auto semi2 = literal.find(';', semi1 == std::string::npos ? semi1 : semi1 + 1);
    if (semi1 == std::string::npos || semi2 == std::string::npos)
        fail("expected `N; d^r * ...; qpow`");

    auto parse_long = [&](const std::string& tok) {
        size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            fail("not an integer: \"" + tok + "\"");
        }
        if (used != tok.size()) fail("trailing junk in \"" + tok + "\"");
        return v;
    };
    auto strip = [](std::string s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };

    EtaSpec spec;
    spec.level = parse_long(strip(literal.substr(0, semi1)));
    spec.q_prefactor = parse_long(strip(literal.substr(semi2 + 1)));

    std::string body = literal.substr(semi1 + 1, semi2 - semi1 - 1);
    size_t pos = 0;
    while (pos <= body.size()) {
        auto star = body.find('*', pos);
        std::string factor = strip(body.substr(pos, star == std::string::npos ? star : star - pos));
        if (factor.empty()) fail("empty factor");
        auto caret = factor.find('^');
        if (caret == std::string::npos) fail("factor without exponent: \"" + factor + "\"");
        spec.exponents.emplace_back(parse_long(strip(factor.substr(0, caret))),
                                    parse_long(strip(factor.substr(caret + 1))));
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    spec.validate();
    return spec;
}

long EtaSpec::sum_r() const {
    long s = 0;
    for (auto [d, r] : exponents) (void)d, s += r;
    return s;
}

long EtaSpec::sum_delta_r() const {
    long s = 0;
    for (auto [d, r] : exponents) s += d * r;
    return s;
}

long EtaSpec::sum_codelta_r() const {
    long s = 0;
    for (auto [d, r] : exponents) s += (level / d) * r;
    return s;
}

Series pochhammer(long a, long b, long trunc, Ring ring) {
    if (trunc < 1) throw std::invalid_argument("pochhammer: trunc must be >= 1");
    if (a < 1 || b < 1) throw std::invalid_argument("pochhammer: need a, b >= 1");
    Series acc = Series::one(ring, trunc);
    for (long e = a; e < trunc; e += b) {
        Series factor = add(Series::one(ring, trunc), Series::monomial(ring, -1, e, trunc));
        acc = mul(acc, factor);
    }
    return acc;
}

Series euler_series(long delta, long trunc, Ring ring) {
    if (trunc < 1) throw std::invalid_argument("euler_series: trunc must be >= 1");
    std::vector<mpz_class> c(static_cast<size_t>(trunc));
    c[0] = 1;
    // (q;q)_inf = sum_j (-1)^j q^(j(3j-1)/2) over all j != 0, plus 1.
    for (long j = 1;; ++j) {
        const long g1 = j * (3 * j - 1) / 2;
        const long g2 = j * (3 * j + 1) / 2;
        if (delta * g1 >= trunc) break;
        const long sign = (j % 2 == 0) ? 1 : -1;
        c[static_cast<size_t>(delta * g1)] = sign;
        if (delta * g2 < trunc) c[static_cast<size_t>(delta * g2)] = sign;
    }
    return Series(ring, 0, std::move(c), trunc);
}

Series expand_eta_quotient(const EtaSpec& spec, long trunc, Ring ring) {
    spec.validate();
    if (trunc < 1) throw std::invalid_argument("expand_eta_quotient: trunc must be >= 1");
    Series acc = Series::one(ring, trunc);
    for (auto [delta, r] : spec.exponents) {
        if (r == 0) continue;
        acc = mul(acc, pow(euler_series(delta, trunc, ring), r));
    }
    acc = shift(acc, spec.q_prefactor);
    if (acc.valuation() >= trunc && !acc.is_zero())
        throw std::invalid_argument("trunc too small to represent any term of the quotient");
    if (acc.trunc() > trunc) acc = truncate_to(acc, trunc);
    return acc;
}

Report newman_modularity_check(const EtaSpec& spec) {
    spec.validate();
    const std::string params = "spec=" + spec.print();
    if (spec.sum_r() != 0)
        return Report::fail("newman", params,
                            "weight condition: sum r_delta = " + std::to_string(spec.sum_r()) +
                                " != 0");
    if (spec.sum_delta_r() % 24 != 0)
        return Report::fail("newman", params,
                            "sum delta*r = " + std::to_string(spec.sum_delta_r()) +
                                " is not 0 mod 24");
    if (spec.sum_codelta_r() % 24 != 0)
        return Report::fail("newman", params,
                            "sum (N/delta)*r = " + std::to_string(spec.sum_codelta_r()) +
                                " is not 0 mod 24");
    // prod delta^r square <=> every prime exponent even.
    std::map<long, long> prime_exp;
    for (auto [delta, r] : spec.exponents) {
        long d = delta;
        for (long p = 2; p * p <= d; ++p)
            while (d % p == 0) prime_exp[p] += r, d /= p;
        if (d > 1) prime_exp[d] += r;
    }
    for (auto [p, e] : prime_exp)
        if (e % 2 != 0)
            return Report::fail("newman", params,
                                "prod delta^r is not a square: prime " + std::to_string(p) +
                                    " has odd exponent " + std::to_string(e));
    return Report::ok("newman", params);
}

std::string CuspOrder::label(long level) const {
    if (c == level) return "inf";
    if (a == 0) return "0";
    return std::to_string(a) + "/" + std::to_string(c);
}

mpq_class CuspOrderVector::sum() const {
    mpq_class s = 0;
    for (const auto& o : orders) s += o.order;
    return s;
}

const CuspOrder& CuspOrderVector::at(long a, long c) const {
    for (const auto& o : orders) {
        if (o.c != c) continue;
        const long g = std::gcd(c, level / c);
        if (g <= 1 || ((a - o.a) % g + g) % g == 0) return o;
    }
    throw std::out_of_range("no cusp class " + std::to_string(a) + "/" + std::to_string(c));
}

CuspOrderVector cusp_orders(const EtaSpec& spec) {
    Report newman = newman_modularity_check(spec);
    if (!newman.pass)
        throw std::domain_error("cusp_orders needs a weight-zero modular eta quotient: " +
                                newman.counterexample);
    const long n = spec.level;
    CuspOrderVector out;
    out.level = n;
    for (long c = 1; c <= n; ++c) {
        if (n % c != 0) continue;
        const long width_gcd = std::gcd(c, n / c);
        for (long u = (c == 1 ? 0 : 1); u <= (c == 1 ? 0 : width_gcd); ++u) {
            if (c != 1 && std::gcd(u, width_gcd) != 1) continue;
            long a = u;  // smallest representative of the class coprime to c
            while (c != 1 && std::gcd(a, c) != 1) a += width_gcd;
            mpq_class order = 0;
            for (auto [delta, r] : spec.exponents) {
                const long g = std::gcd(c, delta);
                order += mpq_class(g * g * r, delta);
            }
            order *= mpq_class(n, 24 * std::gcd(c * c, n));
            if (c == n)  // the cusp at infinity carries the prefactor correction
                order += mpq_class(24 * spec.q_prefactor - spec.sum_delta_r(), 24);
            order.canonicalize();
            out.orders.push_back({a, c, order});
        }
    }
    std::sort(out.orders.begin(), out.orders.end(), [n](const CuspOrder& l, const CuspOrder& r) {
        auto rank = [n](const CuspOrder& o) {
            if (o.c == n) return 0;             // infinity first
            if (o.c == 1) return 2;             // zero last
            return 1;
        };
        if (rank(l) != rank(r)) return rank(l) < rank(r);
        return l.a * r.c < r.a * l.c;  // by cusp value a/c
    });
    return out;
}

}  // namespace d7
