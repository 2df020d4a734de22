// Exercises the installed binary end to end: exit-code contract, spec
// literals, report output, golden-directory override, determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "d7/golden.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kBin = D7_CLI_PATH;
const std::string kGolden = D7_GOLDEN_SRC;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const fs::path out_file = fs::temp_directory_path() / "d7_cli_out.txt";
    const std::string cmd = env + " " + kBin + " " + args + " > " + out_file.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream is(out_file);
    std::stringstream buf;
    buf << is.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, buf.str()};
}

std::string strip_millis(const std::string& report) {
    std::string out;
    std::istringstream is(report);
    std::string line;
    while (std::getline(is, line)) out += line.substr(0, line.rfind(" millis=")) + '\n';
    return out;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("verify no_such_scenario").exit_code == 2);
    CHECK(run("expand \"garbage literal\" --trunc 5").exit_code == 2);
    CHECK(run("reduce --input /nonexistent.series").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("expand prints the series text format, starting at q for the Hauptmodul") {
    const RunResult r = run("expand \"8; 2^2 * 8^4 * 1^-4 * 4^-2; 1\" --trunc 5");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    long val = 0, trunc = 0;
    std::string tag, c1;
    is >> val >> trunc >> tag >> c1;
    CHECK(val == 1);
    CHECK(trunc == 5);
    CHECK(tag == "exact");
    CHECK(c1 == "1");
}

TEST_CASE("expand then reduce recovers a monomial polynomial in x") {
    const fs::path series = fs::temp_directory_path() / "d7_cli_x.series";
    CHECK(run("expand \"8; 2^2 * 8^4 * 1^-4 * 4^-2; 1\" --trunc 16 --output " + series.string())
              .exit_code == 0);
    const RunResult r = run("reduce --input " + series.string() + " --maxdeg 8");
    CHECK(r.exit_code == 0);
    CHECK(strip_millis(r.out).find("1 1") == 0);  // x reduces to 1 * x^1
    fs::remove(series);
}

TEST_CASE("reducing a series that is not a polynomial in x exits 1 with a location") {
    const fs::path series = fs::temp_directory_path() / "d7_cli_a.series";
    CHECK(run("expand \"16; 2^13 * 4^24 * 16^2 * 1^-26 * 8^-13; 1\" --trunc 16 --output " +
              series.string())
              .exit_code == 0);
    const RunResult r = run("reduce --input " + series.string() + " --maxdeg 8");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("q^9") != std::string::npos);
    fs::remove(series);
}

TEST_CASE("expand supports mod-2^k coefficients") {
    const RunResult r = run("expand \"2; 1^-22 * 2^7; 0\" --trunc 6 --mod-bits 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("mod2^8") != std::string::npos);
}

TEST_CASE("verify l1 passes against the shipped golden data") {
    const RunResult r = run("verify l1 --trunc 30", "D7_GOLDEN_DIR=" + kGolden);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("check=l1") != std::string::npos);
    CHECK(r.out.find("status=PASS") != std::string::npos);
}

TEST_CASE("verify family honors alpha and count") {
    const RunResult r = run("verify family --alpha 1 --count 60");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("family_a1") != std::string::npos);
}

TEST_CASE("a corrupted golden directory turns verification into exit code 1") {
    const fs::path dir = fs::temp_directory_path() / "d7_cli_corrupt";
    fs::create_directories(dir);
    for (const auto& entry : fs::directory_iterator(kGolden))
        fs::copy_file(entry.path(), dir / entry.path().filename(),
                      fs::copy_options::overwrite_existing);
    d7::XPoly l1 = d7::load_xpoly(dir / "l1.txt");
    l1.set(2, l1.coeff(2) + 4);
    d7::save_xpoly(l1, dir / "l1.txt");

    const RunResult r = run("verify l1 --trunc 25", "D7_GOLDEN_DIR=" + dir.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("status=FAIL") != std::string::npos);
    CHECK(r.out.find("x^2") != std::string::npos);

    // the flag override takes precedence over the environment
    const RunResult ok = run("verify l1 --trunc 25 --golden-dir " + kGolden,
                             "D7_GOLDEN_DIR=" + dir.string());
    CHECK(ok.exit_code == 0);
    fs::remove_all(dir);
}

TEST_CASE("verify all emits one canonical record per check, independent of threads") {
    const std::string args =
        "verify all --trunc 60 --n-max 30 --r-max 40 --alpha-max 2 --output ";
    const fs::path f1 = fs::temp_directory_path() / "d7_cli_rep1.txt";
    const fs::path f4 = fs::temp_directory_path() / "d7_cli_rep4.txt";
    const RunResult r1 = run(args + f1.string() + " --threads 1", "D7_GOLDEN_DIR=" + kGolden);
    const RunResult r4 = run(args + f4.string() + " --threads 4", "D7_GOLDEN_DIR=" + kGolden);
    CHECK(r1.exit_code == 0);
    CHECK(r4.exit_code == 0);
    std::ifstream i1(f1), i4(f4);
    std::stringstream b1, b4;
    b1 << i1.rdbuf();
    b4 << i4.rdbuf();
    CHECK(strip_millis(b1.str()) == strip_millis(b4.str()));
    CHECK(strip_millis(b1.str()).find("check=family_a1") != std::string::npos);
    fs::remove(f1);
    fs::remove(f4);
}
