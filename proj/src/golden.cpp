#include "d7/golden.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#ifndef D7_DEFAULT_GOLDEN_DIR
#define D7_DEFAULT_GOLDEN_DIR "golden"
#endif

namespace d7 {

std::filesystem::path default_golden_dir() {
    if (const char* env = std::getenv("D7_GOLDEN_DIR"); env && *env) return env;
    return D7_DEFAULT_GOLDEN_DIR;
}

XPoly load_xpoly(const std::filesystem::path& file) {
    std::ifstream is(file);
    if (!is) throw std::runtime_error("cannot open " + file.string());
    return XPoly::read(is);
}

void save_xpoly(const XPoly& p, const std::filesystem::path& file) {
    std::ofstream os(file);
    if (!os) throw std::runtime_error("cannot write " + file.string());
    p.write(os);
}

GoldenData load_golden(const std::filesystem::path& dir) {
    GoldenData g;
    g.l1 = load_xpoly(dir / "l1.txt");
    for (int n = 0; n < 4; ++n)
        g.ux[static_cast<size_t>(n)] = load_xpoly(dir / ("ux" + std::to_string(n) + ".txt"));
    for (int j = 0; j < 4; ++j)
        g.modeq[static_cast<size_t>(j)] = load_xpoly(dir / ("modeq_a" + std::to_string(j) + ".txt"));
    return g;
}

GoldenData load_golden() { return load_golden(default_golden_dir()); }

void save_golden(const GoldenData& g, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    save_xpoly(g.l1, dir / "l1.txt");
    for (int n = 0; n < 4; ++n)
        save_xpoly(g.ux[static_cast<size_t>(n)], dir / ("ux" + std::to_string(n) + ".txt"));
    for (int j = 0; j < 4; ++j)
        save_xpoly(g.modeq[static_cast<size_t>(j)], dir / ("modeq_a" + std::to_string(j) + ".txt"));
}

}  // namespace d7
