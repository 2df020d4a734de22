#pragma once

#include <array>
#include <filesystem>

#include "d7/xpoly.hpp"

namespace d7 {

/// Shipped reference data: the degree-18 polynomial representation of
/// L_1, the four polynomials U(x^0)..U(x^3), and the modular-equation
/// coefficients a_0..a_3.  All of it is recomputed from scratch by the
/// verifier; the files are the comparison targets, never the source of
/// a computation.
struct GoldenData {
    XPoly l1;
    std::array<XPoly, 4> ux;
    std::array<XPoly, 4> modeq;
};

// D7_GOLDEN_DIR environment variable, else the compiled-in default.
std::filesystem::path default_golden_dir();

GoldenData load_golden(const std::filesystem::path& dir);
GoldenData load_golden();  // from default_golden_dir()

void save_golden(const GoldenData& g, const std::filesystem::path& dir);

XPoly load_xpoly(const std::filesystem::path& file);
void save_xpoly(const XPoly& p, const std::filesystem::path& file);

}  // namespace d7
