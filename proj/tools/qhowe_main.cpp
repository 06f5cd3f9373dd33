// CLI driver: runs one verification suite (or all of them) and emits the
// JSON report to stdout, optionally mirroring it to --report <path>.
// Exit codes: 0 all cases pass, 1 at least one failure, 2 usage error.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qhowe/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact verification suites for the q-Howe modules, their braid-group "
                 "actions, and the lattice model"};
    app.fallthrough();
    app.set_config("--config", "", "defaults file with `key = value` lines (same keys as the "
                                   "long flags); explicit flags win");
    app.require_subcommand(0, 1);

    qhowe::HarnessConfig cfg;
    std::string report_path;

    app.add_option("--n", cfg.n, "number of weight entries (columns)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--m", cfg.m, "number of rows of the counting matrices")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--N-max", cfg.N_max, "largest total weight swept")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--box-radius", cfg.box_radius,
                   "half-width of the monomial exponent box for the affine suite")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--mu-max", cfg.mu_max, "largest composition total for the lattice suite")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "PRNG seed for the sampled cases")
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "suite-level parallelism for `all`")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--flavor", cfg.flavor, "which module flavor to exercise")
        ->check(CLI::IsMember({"sym", "skew", "both"}))
        ->capture_default_str();
    app.add_option("--report", report_path, "also write the JSON report to this path");
    app.add_flag("--corrupt-coproduct", cfg.corrupt_coproduct,
                 "fault injection: flip a coproduct sign so the relation and dumbbell "
                 "suites must fail (proves the checks can fail)");

    std::string suite = "all";
    for (const std::string& name : qhowe::suite_names())
        app.add_subcommand(name, "run the " + name + " suite");
    app.add_subcommand("all", "run every suite in a fixed order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    for (const CLI::App* sub : app.get_subcommands()) suite = sub->get_name();

    qhowe::Report rep;
    try {
        rep = qhowe::run_suite(suite, cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::string out = qhowe::report_json(rep).dump(2);
    out += "\n";
    std::cout << out;
    if (!report_path.empty()) {
        std::ofstream f(report_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write report to " << report_path << "\n";
            return 2;
        }
        f << out;
    }
    return rep.all_pass() ? 0 : 1;
}
