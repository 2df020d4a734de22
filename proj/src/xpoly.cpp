#include "d7/xpoly.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "d7/ints.hpp"

namespace d7 {

const mpz_class& XPoly::coeff(long r) const {
    static const mpz_class kZero = 0;
    auto it = c_.find(r);
    return it == c_.end() ? kZero : it->second;
}

void XPoly::set(long r, mpz_class v) {
    if (r < 0) throw std::invalid_argument("XPoly: negative exponent");
    if (v == 0)
        c_.erase(r);
    else
        c_[r] = std::move(v);
}

void XPoly::add_term(long r, const mpz_class& v) {
    if (v == 0) return;
    auto [it, inserted] = c_.try_emplace(r, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

XPoly add(const XPoly& a, const XPoly& b) {
    XPoly r = a;
    for (const auto& [e, v] : b.map()) r.add_term(e, v);
    return r;
}

XPoly neg(const XPoly& a) {
    XPoly r;
    for (const auto& [e, v] : a.map()) r.set(e, -v);
    return r;
}

XPoly mul(const XPoly& a, const XPoly& b) {
    XPoly r;
    for (const auto& [ea, va] : a.map())
        for (const auto& [eb, vb] : b.map()) r.add_term(ea + eb, va * vb);
    return r;
}

XPoly scalar_mul(const mpz_class& s, const XPoly& a) {
    XPoly r;
    if (s == 0) return r;
    for (const auto& [e, v] : a.map()) r.set(e, s * v);
    return r;
}

XPoly shift_down_exact(const XPoly& a, long k) {
    XPoly r;
    for (const auto& [e, v] : a.map()) r.set(e, d7::shift_down_exact(v, k));
    return r;
}

long first_difference(const XPoly& a, const XPoly& b) {
    const long deg = std::max(a.degree(), b.degree());
    for (long e = std::min(a.min_support(), b.min_support()); e <= deg; ++e)
        if (a.coeff(e) != b.coeff(e)) return e;
    return -1;
}

void XPoly::write(std::ostream& os) const {
    for (const auto& [e, v] : c_) os << e << ' ' << v << '\n';
}

XPoly XPoly::read(std::istream& is) {
    XPoly p;
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        long e = 0;
        std::string coeff;
        if (!(ls >> e >> coeff)) throw std::invalid_argument("malformed polynomial line: " + line);
        p.set(e, mpz_class(coeff));
    }
    return p;
}

}  // namespace d7
