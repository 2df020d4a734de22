// Command-line front end: eta-quotient expansion, reduction to the
// Hauptmodul, and the verification scenarios for the d7 congruence
// family mod powers of 8.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or
// input error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "d7/eta.hpp"
#include "d7/verifier.hpp"

namespace {

struct Options {
    std::string spec_literal;
    std::string input;
    std::string output;
    std::string scenario;
    long trunc = 0;  // 0: per-scenario default
    long max_deg = 25;
    int mod_bits = 0;  // 0 = exact
    int n_max = 200;
    int r_max = 250;
    int alpha = 1;
    long count = 500;
    int alpha_max = 3;
    int margin_bits = 8;
    int threads = 1;
    std::string golden_dir;
};

std::ostream& open_output(const Options& opt, std::ofstream& file) {
    if (opt.output.empty()) return std::cout;
    file.open(opt.output);
    if (!file) throw std::runtime_error("cannot open output file " + opt.output);
    return file;
}

int emit_reports(const std::vector<d7::Report>& reports, const Options& opt) {
    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    for (const auto& r : reports) os << r.render() << '\n';
    return d7::all_pass(reports) ? 0 : 1;
}

int cmd_expand(const Options& opt) {
    const d7::EtaSpec spec = d7::EtaSpec::parse(opt.spec_literal);
    const d7::Ring ring = opt.mod_bits > 0 ? d7::Ring::mod2(opt.mod_bits) : d7::Ring::exact();
    const long trunc = opt.trunc > 0 ? opt.trunc : 20;
    const d7::Series s = d7::expand_eta_quotient(spec, trunc, ring);
    std::ofstream file;
    s.write(open_output(opt, file));
    return 0;
}

int cmd_reduce(const Options& opt) {
    std::ifstream is(opt.input);
    if (!is) throw std::runtime_error("cannot open input file " + opt.input);
    const d7::Series s = d7::Series::read(is);
    const d7::ReduceResult red = d7::reduce_to_x_poly(s, opt.max_deg);
    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    red.poly.write(os);
    if (!red.complete) {
        std::cerr << "reduction incomplete: residual survives at q^" << red.first_residual_exp
                  << '\n';
        return 1;
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    d7::SuiteConfig cfg;
    if (opt.trunc > 0) cfg.trunc = opt.trunc;
    cfg.n_max = opt.n_max;
    cfg.r_max = opt.r_max;
    cfg.alpha_max = opt.alpha_max;
    cfg.margin_bits = opt.margin_bits;
    cfg.threads = opt.threads;
    if (!opt.golden_dir.empty()) cfg.golden_dir = opt.golden_dir;

    const auto golden = [&] {
        return cfg.golden_dir.empty() ? d7::load_golden() : d7::load_golden(cfg.golden_dir);
    };

    std::vector<d7::Report> reports;
    if (opt.scenario == "all") {
        reports = d7::run_suite(cfg);
    } else if (opt.scenario == "l1") {
        reports.push_back(d7::timed([&] { return d7::check_l1(golden(), opt.trunc > 0 ? opt.trunc : 40); }));
    } else if (opt.scenario == "appendix") {
        reports.push_back(
            d7::timed([&] { return d7::check_appendix(golden(), opt.trunc > 0 ? opt.trunc : 150); }));
    } else if (opt.scenario == "modeq") {
        reports.push_back(d7::timed([&] { return d7::check_modeq_residual(golden(), cfg.trunc); }));
    } else if (opt.scenario == "lemma31") {
        reports.push_back(d7::timed([&] { return d7::verify_lemma31_inequalities(cfg.n_max, cfg.r_max); }));
        reports.push_back(d7::timed([&] { return d7::check_lemma31_table(golden(), cfg.n_max); }));
    } else if (opt.scenario == "theorem41") {
        reports.push_back(d7::timed([&] { return d7::verify_theorem41_inequalities(cfg.n_max, cfg.r_max); }));
    } else if (opt.scenario == "vspace") {
        reports.push_back(d7::timed([&] { return d7::check_vspace_stability(golden()); }));
    } else if (opt.scenario == "family") {
        reports.push_back(
            d7::timed([&] { return d7::check_family(opt.alpha, opt.count, opt.margin_bits); }));
    } else if (opt.scenario == "main") {
        reports.push_back(d7::timed([&] { return d7::check_main_iteration(golden(), opt.alpha_max); }));
    } else if (opt.scenario == "golden") {
        reports.push_back(d7::timed([&] { return d7::check_golden_regen(golden()); }));
    } else if (opt.scenario == "modularity") {
        reports.push_back(d7::timed([] { return d7::check_modularity(); }));
    } else {
        throw CLI::ValidationError("verify", "unknown scenario: " + opt.scenario);
    }
    return emit_reports(reports, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-series engine and verifier for the d7 congruence family mod powers of 8"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* expand = app.add_subcommand("expand", "expand an eta-quotient literal");
    expand->add_option("spec", opt.spec_literal, "literal `N; d^r * d^r * ...; qpow`")->required();
    expand->add_option("--trunc", opt.trunc, "truncation exponent (default 20)");
    expand->add_option("--mod-bits", opt.mod_bits, "work mod 2^bits instead of exact");
    expand->add_option("--output", opt.output, "write the series here instead of stdout");

    CLI::App* reduce = app.add_subcommand("reduce", "reduce a series file to a polynomial in x");
    reduce->add_option("--input", opt.input, "series file (exact ring)")->required();
    reduce->add_option("--maxdeg", opt.max_deg, "highest power of x to eliminate");
    reduce->add_option("--output", opt.output, "write the polynomial here instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run verification scenarios");
    verify->add_option("scenario", opt.scenario,
                       "l1|appendix|modeq|lemma31|theorem41|vspace|family|main|golden|modularity|all")
        ->required();
    verify->add_option("--trunc", opt.trunc, "series truncation override");
    verify->add_option("--n-max", opt.n_max, "table and sweep depth");
    verify->add_option("--r-max", opt.r_max, "sweep width");
    verify->add_option("--alpha", opt.alpha, "family scan alpha");
    verify->add_option("--count", opt.count, "family scan length");
    verify->add_option("--alpha-max", opt.alpha_max, "main-iteration depth");
    verify->add_option("--margin-bits", opt.margin_bits, "extra bits for mod-2^k scans");
    verify->add_option("--threads", opt.threads, "parallelism for `verify all`");
    verify->add_option("--output", opt.output, "write the report here instead of stdout");
    verify->add_option("--golden-dir", opt.golden_dir,
                       "reference data directory (also via D7_GOLDEN_DIR)");

    try {
        app.parse(argc, argv);
        if (expand->parsed()) return cmd_expand(opt);
        if (reduce->parsed()) return cmd_reduce(opt);
        return cmd_verify(opt);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
