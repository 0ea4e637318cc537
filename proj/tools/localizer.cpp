// Command-line front end: scenario simulation, localization, parameter
// sweeps, and the built-in acceptance selftest.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rls/log.hpp"
#include "rls/scenario.hpp"
#include "rls/selftest.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string builtin = "3d";
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string format = "csv";
    std::optional<double> tolerance;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--config", opt.config_path,
                    "scenario config file (JSON)");
    cmd->add_option("--builtin", opt.builtin,
                    "built-in scenario when no --config is given")
        ->check(CLI::IsMember({"2d", "3d", "4d"}));
    cmd->add_option("--seed", opt.seed, "override the scenario seed");
    cmd->add_option("--out", opt.out, "output file (default: stdout)");
    cmd->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--tolerance", opt.tolerance,
                    "override the consistency tolerance");
}

rls::ScenarioConfig make_config(const CommonOptions& opt) {
    rls::ScenarioConfig config;
    if (!opt.config_path.empty()) {
        config = rls::load_config(opt.config_path);
    } else if (opt.builtin == "2d") {
        config = rls::parse_config(rls::builtin_config_2d());
    } else if (opt.builtin == "4d") {
        config = rls::parse_config(rls::builtin_config_4d());
    } else {
        config = rls::parse_config(rls::builtin_config_3d());
    }
    if (opt.seed) config.seed = *opt.seed;
    if (opt.tolerance) {
        if (!(*opt.tolerance > 0.0))
            throw rls::ConfigError("--tolerance: must be positive");
        config.tolerance = *opt.tolerance;
    }
    return config;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw rls::ConfigError("--out: cannot write '" + out + "'");
    f << text;
}

int run_report(const CommonOptions& opt, bool localize) {
    rls::ScenarioConfig config = make_config(opt);
    rls::LocalizationReport report = rls::run_scenario(config, localize);
    emit(opt.format == "json" ? rls::report_json(report)
                              : rls::report_csv(report),
         opt.out);
    return report.all_ok() ? 0 : 2;
}

int run_sweep(const CommonOptions& opt, const std::string& param,
              const std::vector<double>& values) {
    std::string text = "param,value,events,failures,max_oracle_delta,"
                       "max_constraint\n";
    char buf[160];
    for (double v : values) {
        rls::ScenarioConfig config = make_config(opt);
        if (param == "seed") config.seed = (std::uint64_t)v;
        else if (param == "radius") config.events.radius = v;
        else if (param == "time_radius") config.events.time_radius = v;
        else if (param == "tolerance") config.tolerance = v;
        else
            throw rls::ConfigError("--param: unknown sweep parameter '" +
                                   param + "'");
        rls::LocalizationReport report = rls::run_scenario(config, true);
        int failures = 0;
        double worst_delta = 0.0, worst_constraint = 0.0;
        for (const rls::ReportRow& row : report.rows) {
            if (!row.error.empty()) ++failures;
            worst_delta = std::max(worst_delta, row.oracle_delta);
            worst_constraint = std::max(worst_constraint, row.max_constraint);
        }
        std::snprintf(buf, sizeof(buf), "%s,%.17g,%zu,%d,%.17g,%.17g\n",
                      param.c_str(), v, report.rows.size(), failures,
                      worst_delta, worst_constraint);
        text += buf;
    }
    emit(text, opt.out);
    return 0;
}

int run_selftest(const std::string& self_path) {
    std::vector<rls::selftest::CriterionResult> results =
        rls::selftest::run_all(self_path);
    bool all = true;
    for (const auto& r : results) {
        std::printf("criterion %2d [%s]: %s -- %s\n", r.index,
                    r.name.c_str(), r.pass ? "PASS" : "FAIL",
                    r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("selftest: %zu criteria, %s\n", results.size(),
                all ? "all passed" : "FAILURES PRESENT");
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"relativistic localization simulator"};
    app.require_subcommand(1);

    CommonOptions sim_opt, loc_opt, sweep_opt;
    std::string sweep_param = "seed";
    std::vector<double> sweep_values;

    CLI::App* simulate = app.add_subcommand(
        "simulate", "forward simulation only (emission coordinates and "
                    "round-trip checks)");
    add_common(simulate, sim_opt);

    CLI::App* localize = app.add_subcommand(
        "localize", "full localization protocol with oracle deltas");
    add_common(localize, loc_opt);

    CLI::App* sweep =
        app.add_subcommand("sweep", "rerun a scenario over a parameter grid");
    add_common(sweep, sweep_opt);
    sweep->add_option("--param", sweep_param,
                      "parameter to sweep (seed, radius, time_radius, "
                      "tolerance)");
    sweep->add_option("--values", sweep_values, "grid values")
        ->required()
        ->delimiter(',');

    CLI::App* selftest =
        app.add_subcommand("selftest", "run the acceptance criteria");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return run_report(sim_opt, false);
        if (localize->parsed()) return run_report(loc_opt, true);
        if (sweep->parsed())
            return run_sweep(sweep_opt, sweep_param, sweep_values);
        if (selftest->parsed()) return run_selftest(argv[0]);
    } catch (const rls::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const rls::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
