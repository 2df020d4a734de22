#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "d7/verifier.hpp"

using namespace d7;

namespace {

const GoldenData& golden() {
    static GoldenData g = load_golden();
    return g;
}

std::string strip_millis(const std::vector<Report>& reports) {
    std::string out;
    for (const auto& r : reports) {
        std::string line = r.render();
        out += line.substr(0, line.rfind(" millis=")) + '\n';
    }
    return out;
}

SuiteConfig light_config() {
    SuiteConfig cfg;
    cfg.trunc = 60;
    cfg.n_max = 30;
    cfg.r_max = 40;
    cfg.alpha_max = 2;
    cfg.l1_trunc = 25;
    cfg.ux_trunc = 40;
    cfg.modeq_derive_trunc = 60;
    cfg.family_counts = {60, 25};
    return cfg;
}

}  // namespace

TEST_CASE("golden data loads from the default directory") {
    const GoldenData& g = golden();
    CHECK(g.l1.degree() == 18);
    CHECK(g.l1.terms() == 18);
    for (int n = 0; n < 4; ++n) CHECK(g.ux[static_cast<size_t>(n)].degree() == 4 * n + 20);
    for (int j = 0; j < 4; ++j) CHECK(g.modeq[static_cast<size_t>(j)].degree() == 4);
    CHECK_THROWS_AS(load_golden("/nonexistent/golden/dir"), std::runtime_error);
}

TEST_CASE("the L1 and appendix checks pass against the shipped data") {
    CHECK(check_l1(golden(), 30).pass);
    CHECK(check_appendix(golden(), 40).pass);
}

TEST_CASE("a failing report always carries a located counterexample") {
    GoldenData corrupt = golden();
    corrupt.l1.set(5, corrupt.l1.coeff(5) + 8);
    const Report r = check_l1(corrupt, 25);
    CHECK_FALSE(r.pass);
    CHECK(r.counterexample.find("x^5") != std::string::npos);

    GoldenData corrupt2 = golden();
    corrupt2.ux[2].set(7, corrupt2.ux[2].coeff(7) - 1);
    const Report r2 = check_appendix(corrupt2, 40);
    CHECK_FALSE(r2.pass);
    CHECK(r2.counterexample.find("U(x^2)") != std::string::npos);
    CHECK(r2.counterexample.find("x^7") != std::string::npos);
}

TEST_CASE("congruence witnesses describe the right progression") {
    const CongruenceWitness w = verify_congruence_direct(1, 40);
    CHECK(w.lambda == 3);
    CHECK(w.modulus == 8);
    CHECK(w.all_pass);
    CHECK(w.progression_ok);
    REQUIRE(w.checked.size() == 40);
    for (const auto& [n, residue] : w.checked) {
        CHECK((3 * n) % 4 == 1);  // n = 1 and friends are excluded
        CHECK(residue % 8 == 0);
    }
    CHECK(w.checked[0].first == 3);
    CHECK(w.checked[1].first == 7);

    CHECK_THROWS_AS(verify_congruence_direct(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_congruence_direct(1, 10, 2), std::invalid_argument);

    const CongruenceWitness w2 = verify_congruence_direct(2, 12);
    CHECK(w2.lambda == 11);
    CHECK(w2.modulus == 64);
    CHECK(w2.all_pass);
}

TEST_CASE("negative controls catch perturbations in every golden file") {
    const Report r = check_negative_controls(golden());
    CHECK(r.pass);
}

TEST_CASE("a corrupted golden directory fails the regeneration check by name") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "d7_corrupt_golden";
    fs::create_directories(dir);
    for (const auto& entry : fs::directory_iterator(default_golden_dir()))
        fs::copy_file(entry.path(), dir / entry.path().filename(),
                      fs::copy_options::overwrite_existing);
    {
        XPoly l1 = load_xpoly(dir / "l1.txt");
        l1.set(3, l1.coeff(3) + 1);
        save_xpoly(l1, dir / "l1.txt");
    }
    const GoldenData corrupt = load_golden(dir);
    const Report r = check_golden_regen(corrupt, 25, 40, 60);
    CHECK_FALSE(r.pass);
    CHECK(r.counterexample.find("l1.txt") != std::string::npos);
    CHECK(r.counterexample.find("x^3") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("the suite runs green on a light configuration in canonical order") {
    const std::vector<Report> reports = run_suite(light_config());
    CHECK(all_pass(reports));
    for (size_t i = 1; i < reports.size(); ++i) CHECK(reports[i - 1].name < reports[i].name);
    bool seen_family = false, seen_regen = false, seen_modeq = false;
    for (const auto& r : reports) {
        seen_family |= r.name == "family_a1";
        seen_regen |= r.name == "golden_regen";
        seen_modeq |= r.name == "modeq_residual";
    }
    CHECK(seen_family);
    CHECK(seen_regen);
    CHECK(seen_modeq);
}

TEST_CASE("thread count does not change the report") {
    SuiteConfig one = light_config();
    SuiteConfig many = light_config();
    many.threads = 4;
    CHECK(strip_millis(run_suite(one)) == strip_millis(run_suite(many)));
}

TEST_CASE("report rendering is stable and machine-parsable") {
    const Report ok = Report::ok("sample", "k=1");
    CHECK(ok.render().find("check=sample params=k=1 status=PASS") == 0);
    const Report bad = Report::fail("sample", "", "x^3 differs");
    CHECK_FALSE(bad.pass);
    CHECK(bad.render().find("status=FAIL counterexample=\"x^3 differs\"") != std::string::npos);
    const Report anon = Report::fail("sample", "", "");
    CHECK_FALSE(anon.counterexample.empty());
}
