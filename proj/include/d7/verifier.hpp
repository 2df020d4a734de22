#pragma once

#include <gmpxx.h>

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "d7/elongated.hpp"
#include "d7/golden.hpp"
#include "d7/report.hpp"
#include "d7/valuation.hpp"

namespace d7 {

/// Outcome of a direct congruence scan: the arithmetic progression
/// 4^alpha n + lambda_alpha (exactly the n with 3n = 1 mod 4^alpha),
/// each residue taken mod 2^(3 alpha + margin_bits) and tested for
/// divisibility by 8^alpha.
struct CongruenceWitness {
    int alpha = 1;
    long lambda = 3;
    mpz_class modulus;  // 8^alpha
    std::vector<std::pair<long, mpz_class>> checked;
    bool all_pass = false;
    long first_failure_n = -1;
    bool progression_ok = false;  // membership scan of the whole window
};

CongruenceWitness verify_congruence_direct(int alpha, long count, int margin_bits = 8);

// Recomputation routes (never read golden data).
XPoly recompute_l1(long trunc = 40, long max_deg = 25);
XPoly recompute_ux_direct(int n, long out_trunc);
std::array<XPoly, 4> recompute_ux_base(long out_trunc = 150);

Report check_l1(const GoldenData& g, long trunc = 40);
Report check_appendix(const GoldenData& g, long out_trunc = 150);
Report check_modeq_residual(const GoldenData& g, long trunc = 200);
Report check_golden_regen(const GoldenData& g, long l1_trunc = 40, long ux_trunc = 150,
                          long modeq_trunc = 100);
Report check_lemma31_table(const GoldenData& g, int n_max = 200, long twopath_trunc = 60);
Report check_vspace_stability(const GoldenData& g, int deg_max = 40, int trials = 24,
                              unsigned long seed = 0x9e3779b9u);
Report check_family(int alpha, long count, int margin_bits = 8);
Report check_main_iteration(const GoldenData& g, int alpha_max = 3, long series_coeffs = 25);
Report check_modularity();
Report check_negative_controls(const GoldenData& g);

struct SuiteConfig {
    long trunc = 200;  // modular-equation residual depth
    int n_max = 200;   // UX table depth
    int r_max = 250;   // inequality sweeps
    int alpha_max = 3;
    int margin_bits = 8;
    int threads = 1;
    long l1_trunc = 40;
    long ux_trunc = 150;
    long modeq_derive_trunc = 100;
    long twopath_trunc = 60;
    std::vector<long> family_counts = {500, 200, 100};
    std::filesystem::path golden_dir;  // empty: default_golden_dir()
};

// Runs every suite check and returns the reports in canonical (name)
// order.  Checks are pure and may run on a small thread pool; the
// result is identical for any thread count.
std::vector<Report> run_suite(const SuiteConfig& cfg);

inline bool all_pass(const std::vector<Report>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace d7
