#include "d7/series.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "d7/ints.hpp"

namespace d7 {

namespace {

void require_same_ring(const Series& a, const Series& b) {
    if (a.ring() != b.ring())
        throw std::domain_error("series operands live in different coefficient rings");
}

long effective_val(const Series& s) { return s.is_zero() ? s.trunc() : s.valuation(); }

size_t count_nonzero(const std::vector<mpz_class>& v) {
    size_t n = 0;
    for (const auto& c : v)
        if (c != 0) ++n;
    return n;
}

}  // namespace

Series::Series(Ring ring, long valuation, std::vector<mpz_class> coeffs, long trunc)
    : ring_(ring), val_(valuation), trunc_(trunc), coeffs_(std::move(coeffs)) {
    if (static_cast<long>(coeffs_.size()) != trunc_ - val_)
        throw std::invalid_argument("series window does not match [valuation, trunc)");
    for (auto& c : coeffs_) ring_.reduce(c);
    if (ring_.is_exact()) {
        // Normalize the valuation: strip leading zeros.
        size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            val_ = trunc_;
        } else if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
            val_ += static_cast<long>(lead);
        }
    } else if (!coeffs_.empty() && count_nonzero(coeffs_) == 0) {
        coeffs_.clear();
        val_ = trunc_;
    }
    if (coeffs_.empty()) val_ = trunc_;
}

Series Series::zero(Ring ring, long trunc) { return Series(ring, trunc, {}, trunc); }

Series Series::one(Ring ring, long trunc) { return monomial(ring, 1, 0, trunc); }

Series Series::monomial(Ring ring, mpz_class coeff, long exponent, long trunc) {
    if (exponent >= trunc) return zero(ring, trunc);
    std::vector<mpz_class> c(static_cast<size_t>(trunc - exponent));
    c[0] = std::move(coeff);
    return Series(ring, exponent, std::move(c), trunc);
}

const mpz_class& Series::coeff(long e) const {
    static const mpz_class kZero = 0;
    if (e >= trunc_)
        throw std::out_of_range("coefficient at exponent " + std::to_string(e) +
                                " is beyond truncation " + std::to_string(trunc_));
    if (is_zero() || e < val_) return kZero;
    return coeffs_[static_cast<size_t>(e - val_)];
}

Series add(const Series& a, const Series& b) {
    require_same_ring(a, b);
    const long trunc = std::min(a.trunc(), b.trunc());
    const long val = std::min(effective_val(a), effective_val(b));
    if (val >= trunc) return Series::zero(a.ring(), trunc);
    std::vector<mpz_class> c(static_cast<size_t>(trunc - val));
    for (long e = val; e < trunc; ++e) c[static_cast<size_t>(e - val)] = a.coeff(e) + b.coeff(e);
    return Series(a.ring(), val, std::move(c), trunc);
}

Series neg(const Series& a) {
    if (a.is_zero()) return a;
    std::vector<mpz_class> c(a.window());
    for (auto& v : c) v = -v;
    return Series(a.ring(), a.valuation(), std::move(c), a.trunc());
}

Series sub(const Series& a, const Series& b) { return add(a, neg(b)); }

Series scalar_mul(const mpz_class& s, const Series& a) {
    if (a.is_zero()) return a;
    std::vector<mpz_class> c(a.window());
    for (auto& v : c) v *= s;
    return Series(a.ring(), a.valuation(), std::move(c), a.trunc());
}

Series mul(const Series& a, const Series& b) {
    require_same_ring(a, b);
    const long trunc = std::min(a.trunc() + effective_val(b), b.trunc() + effective_val(a));
    if (a.is_zero() || b.is_zero()) return Series::zero(a.ring(), trunc);
    const long val = a.valuation() + b.valuation();
    const long w = trunc - val;  // == min of the two relative windows
    if (w <= 0) return Series::zero(a.ring(), trunc);

    // Run the sparser operand on the outside so eta-type factors
    // (pentagonal-number supports) cost O(W * nnz).
    const bool a_outer = count_nonzero(a.window()) <= count_nonzero(b.window());
    const std::vector<mpz_class>& x = a_outer ? a.window() : b.window();
    const std::vector<mpz_class>& y = a_outer ? b.window() : a.window();

    std::vector<mpz_class> r(static_cast<size_t>(w));
    const long wx = std::min<long>(static_cast<long>(x.size()), w);
    for (long i = 0; i < wx; ++i) {
        if (x[static_cast<size_t>(i)] == 0) continue;
        const long lim = std::min<long>(static_cast<long>(y.size()), w - i);
        const mpz_class& xi = x[static_cast<size_t>(i)];
        for (long j = 0; j < lim; ++j)
            mpz_addmul(r[static_cast<size_t>(i + j)].get_mpz_t(), xi.get_mpz_t(),
                       y[static_cast<size_t>(j)].get_mpz_t());
    }
    return Series(a.ring(), val, std::move(r), trunc);
}

Series invert(const Series& a) {
    if (a.is_zero()) throw std::domain_error("cannot invert the zero series");
    const Ring& ring = a.ring();
    const std::vector<mpz_class>& u = a.window();
    const long w = static_cast<long>(u.size());

    mpz_class lead0;
    if (ring.is_exact()) {
        if (u[0] != 1 && u[0] != -1)
            throw std::domain_error("exact-mode inversion requires leading coefficient +-1");
        lead0 = u[0];
    } else {
        if (mpz_even_p(u[0].get_mpz_t()))
            throw std::domain_error("mod-2^k inversion requires an odd leading coefficient");
        mpz_class mod = pow2(static_cast<unsigned long>(ring.bits));
        if (mpz_invert(lead0.get_mpz_t(), u[0].get_mpz_t(), mod.get_mpz_t()) == 0)
            throw std::domain_error("leading coefficient not invertible mod 2^k");
    }

    std::vector<long> support;
    for (long k = 1; k < w; ++k)
        if (u[static_cast<size_t>(k)] != 0) support.push_back(k);

    std::vector<mpz_class> b(static_cast<size_t>(w));
    b[0] = lead0;  // +-1 is self-inverse in exact mode
    mpz_class acc;
    for (long n = 1; n < w; ++n) {
        acc = 0;
        for (long k : support) {
            if (k > n) break;
            mpz_addmul(acc.get_mpz_t(), u[static_cast<size_t>(k)].get_mpz_t(),
                       b[static_cast<size_t>(n - k)].get_mpz_t());
        }
        b[static_cast<size_t>(n)] = -lead0 * acc;
        ring.reduce(b[static_cast<size_t>(n)]);
    }
    return Series(ring, -a.valuation(), std::move(b), a.trunc() - 2 * a.valuation());
}

Series pow(const Series& a, long e) {
    if (e == 0) {
        const long t = a.is_zero() ? a.trunc() : a.trunc() - a.valuation();
        return Series::one(a.ring(), t);
    }
    if (e < 0) return pow(invert(a), -e);
    Series r = a;
    long msb = 63;
    while (((e >> msb) & 1) == 0) --msb;
    for (long i = msb - 1; i >= 0; --i) {
        r = mul(r, r);
        if ((e >> i) & 1) r = mul(r, a);
    }
    return r;
}

Series dilate(const Series& a, long m) {
    if (m < 1) throw std::invalid_argument("dilate: m must be >= 1");
    if (m == 1) return a;
    if (a.is_zero()) return Series::zero(a.ring(), m * a.trunc());
    const long val = m * a.valuation();
    const long trunc = m * a.trunc();
    std::vector<mpz_class> c(static_cast<size_t>(trunc - val));
    const std::vector<mpz_class>& w = a.window();
    for (size_t i = 0; i < w.size(); ++i) c[i * static_cast<size_t>(m)] = w[i];
    return Series(a.ring(), val, std::move(c), trunc);
}

Series u_ell(const Series& a, long ell) {
    if (ell < 1) throw std::invalid_argument("u_ell: ell must be >= 1");
    if (ell == 1) return a;
    const long trunc = ceil_div(a.trunc(), ell);
    if (a.is_zero()) return Series::zero(a.ring(), trunc);
    const long val = ceil_div(a.valuation(), ell);
    if (val >= trunc) return Series::zero(a.ring(), trunc);
    std::vector<mpz_class> c(static_cast<size_t>(trunc - val));
    for (long n = val; n < trunc; ++n) c[static_cast<size_t>(n - val)] = a.coeff(ell * n);
    return Series(a.ring(), val, std::move(c), trunc);
}

Series shift(const Series& a, long k) {
    if (a.is_zero()) return Series::zero(a.ring(), a.trunc() + k);
    return Series(a.ring(), a.valuation() + k, a.window(), a.trunc() + k);
}

Series truncate_to(const Series& a, long t) {
    if (t > a.trunc()) throw std::invalid_argument("truncate_to cannot extend knowledge");
    if (t == a.trunc()) return a;
    if (a.is_zero() || t <= a.valuation()) return Series::zero(a.ring(), t);
    std::vector<mpz_class> c(a.window().begin(),
                             a.window().begin() + static_cast<long>(t - a.valuation()));
    return Series(a.ring(), a.valuation(), std::move(c), t);
}

bool agree_through(const Series& a, const Series& b, long t) {
    if (a.trunc() < t || b.trunc() < t) return false;
    const long lo = std::min(effective_val(a), effective_val(b));
    for (long e = lo; e < t; ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

void Series::write(std::ostream& os) const {
    os << valuation() << ' ' << trunc_ << ' ' << ring_.tag() << '\n';
    for (const auto& c : coeffs_) os << c << '\n';
}

Series Series::read(std::istream& is) {
    long val = 0, trunc = 0;
    std::string tag;
    if (!(is >> val >> trunc >> tag)) throw std::invalid_argument("malformed series header");
    Ring ring = Ring::from_tag(tag);
    if (val > trunc) throw std::invalid_argument("series header has valuation > trunc");
    std::vector<mpz_class> c(static_cast<size_t>(trunc - val));
    for (auto& v : c) {
        std::string tok;
        if (!(is >> tok)) throw std::invalid_argument("series file ends before window is complete");
        v = mpz_class(tok);
    }
    return Series(ring, val, std::move(c), trunc);
}

}  // namespace d7
