#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace d7 {

/// Coefficient ring for series arithmetic: exact integers, or integers
/// modulo 2^bits (used for fast congruence scans where exact coefficients
/// would be astronomically large).
struct Ring {
    enum class Mode { exact, mod_pow2 };

    Mode mode = Mode::exact;
    int bits = 0;

    static Ring exact() { return {}; }
    static Ring mod2(int bits) {
        if (bits < 1) throw std::invalid_argument("Ring::mod2: bits must be >= 1");
        return {Mode::mod_pow2, bits};
    }

    bool is_exact() const { return mode == Mode::exact; }

    // Canonical representative in [0, 2^bits).
    void reduce(mpz_class& v) const {
        if (mode == Mode::mod_pow2)
            mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(bits));
    }

    std::string tag() const {
        return is_exact() ? "exact" : "mod2^" + std::to_string(bits);
    }

    static Ring from_tag(const std::string& s) {
        if (s == "exact") return exact();
        if (s.rfind("mod2^", 0) == 0) return mod2(std::stoi(s.substr(5)));
        throw std::invalid_argument("unknown ring tag: " + s);
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.mode == b.mode && (a.is_exact() || a.bits == b.bits);
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }
};

}  // namespace d7
