// Command-line front end: every subcommand prints one JSON document on stdout.
#include "qwmix/errors.hpp"
#include "qwmix/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_numeric = 3;

} // namespace

int main(int argc, char** argv)
{
    using namespace qwmix;
    namespace rp = qwmix::report;

    CLI::App app{"qwmix: uniform mixing of continuous-time quantum walks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(rp::tool_version));

    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable listing instead of JSON");

    std::string spec;
    rp::AnalyzeOptions aopts;
    auto* analyze = app.add_subcommand("analyze", "spectrum, obstructions and a mixing scan for one graph");
    analyze->add_option("graph", spec, "graph spec, e.g. cycle:4, hamming:3,2, file:path")->required();
    analyze->add_option("--grid", aopts.grid, "time grid start:stop:step")->capture_default_str();
    analyze->add_option("--tol", aopts.scan.tol, "flatness tolerance for a witness")->capture_default_str();
    analyze->add_option("--grid-floor", aopts.scan.grid_floor, "grid minimum above which mixing is ruled out")
        ->capture_default_str();
    analyze->add_option("--max-den", aopts.scan.max_den, "largest denominator b in candidate times a*pi/b")
        ->capture_default_str();

    std::string time_expr;
    double check_tol = 1e-9;
    auto* mix = app.add_subcommand("mix-check", "flatness of U(t) at one time");
    mix->add_option("graph", spec, "graph spec")->required();
    mix->add_option("time", time_expr, "time, e.g. 2*pi/9 or 0.5")->required();
    mix->add_option("--tol", check_tol, "flatness tolerance")->capture_default_str();

    int n = 0, k = 0, lambda = 0, mu = 0;
    auto* srg = app.add_subcommand("srg-classify", "mixing verdict for strongly regular parameters");
    srg->add_option("n", n)->required();
    srg->add_option("k", k)->required();
    srg->add_option("lambda", lambda)->required();
    srg->add_option("mu", mu)->required();

    auto* rule = app.add_subcommand("rule-out", "list every obstruction to uniform mixing");
    rule->add_option("graph", spec, "graph spec")->required();

    int p = 0;
    long long alpha_max = 1000;
    bool json_flag = false;
    auto* eps = app.add_subcommand("eps-search", "epsilon-uniform mixing search on the prime cycle C_p");
    eps->add_option("p", p, "odd prime >= 5")->required();
    eps->add_option("--alpha-max", alpha_max, "largest alpha tried, t = 2*pi*alpha/p")->capture_default_str();
    eps->add_flag("--json", json_flag, "JSON output (the default; kept for scripts)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        rp::apply_size_cap_from_env();
        rp::Json out;
        if (*analyze) out = rp::cmd_analyze(spec, aopts);
        else if (*mix) out = rp::cmd_mix_check(spec, time_expr, check_tol);
        else if (*srg) out = rp::cmd_srg_classify(n, k, lambda, mu);
        else if (*rule) out = rp::cmd_rule_out(spec);
        else if (*eps) out = rp::cmd_eps_search(p, alpha_max);
        std::cout << (pretty ? rp::pretty(out) : rp::dump(out));
        return exit_ok;
    } catch (const NumericFailure& e) {
        std::cerr << "qwmix: numeric failure: " << e.what() << "\n";
        return exit_numeric;
    } catch (const Error& e) {
        std::cerr << "qwmix: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "qwmix: " << e.what() << "\n";
        return exit_usage;
    }
}
