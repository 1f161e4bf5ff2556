#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "cellgeom/acceptance.hpp"
#include "cellgeom/experiments.hpp"
#include "cellgeom/parallel.hpp"

namespace ex = cellgeom::experiments;
namespace fs = std::filesystem;

namespace {

struct RunArgs {
    std::string preset = "custom";
    std::string config;
    std::string out = ".";
    unsigned threads = 0;
    std::map<std::string, std::string> settings;
};

int do_run(const RunArgs& args) {
    ex::ExperimentSpec spec = ex::preset(args.preset);
    if (!args.config.empty()) {
        for (const auto& [key, value] : ex::read_config(args.config)) ex::apply_setting(spec, key, value);
    }
    for (const auto& [key, value] : args.settings) ex::apply_setting(spec, key, value);
    if (args.threads) cellgeom::set_worker_override(args.threads);

    std::cerr << "running " << spec.preset << ": " << spec.N_grid.size() << " N values, "
              << spec.beta_list.size() << " beta values, " << spec.base.trials << " trials, "
              << cellgeom::worker_count() << " workers\n";
    const auto rows = ex::run_experiment(spec);

    fs::create_directories(args.out);
    const std::string csv_name = spec.preset + ".csv";
    ex::emit_csv(rows, fs::path(args.out) / csv_name);
    std::cout << (fs::path(args.out) / csv_name).string() << '\n';
    if (spec.plot) {
        const auto script = fs::path(args.out) / (spec.preset + ".gp");
        std::ofstream(script) << ex::plot_script(rows, spec, csv_name);
        std::cout << script.string() << '\n';
    }

    int failed = 0;
    for (const auto& r : rows) {
        if (!r.failed) continue;
        ++failed;
        std::cerr << "failed: " << ex::to_string(r.engine) << ' ' << r.scheme << " N=" << r.N
                  << " beta=" << r.beta << ": " << r.error << '\n';
    }
    for (const auto& a : ex::agreement_report(rows)) {
        std::fprintf(stderr, "agreement %-26s beta=%-5g max|ps_analytic - ps_sim| = %.4f over %zu N\n",
                     a.scheme.c_str(), a.beta, a.max_abs_ps_diff, a.points);
    }
    return failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rateless and fixed-rate coding in Poisson cellular networks"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Run an analytic/simulated sweep and write CSV");
    std::string names;
    for (const auto& n : ex::preset_names()) names += (names.empty() ? "" : ", ") + n;
    run->add_option("--preset", run_args.preset, "Figure preset: " + names);
    run->add_option("--config", run_args.config, "key = value configuration file")->check(CLI::ExistingFile);
    run->add_option("--out", run_args.out, "Output directory");
    run->add_option("--threads", run_args.threads, "Exact worker count (default: CELLGEOM_THREADS cap)");
    for (const auto& key : ex::setting_keys()) {
        std::string flags = "--" + key;
        std::string dashed = key;
        std::replace(dashed.begin(), dashed.end(), '_', '-');
        if (dashed != key) flags += ",--" + dashed;
        run->add_option_function<std::string>(
            flags, [&run_args, key](const std::string& v) { run_args.settings[key] = v; },
            "Override setting '" + key + "'");
    }

    cellgeom::acceptance::Options verify_opts;
    std::vector<int> only;
    auto* verify = app.add_subcommand("verify", "Run the acceptance suite; nonzero exit on failure");
    verify->add_option("--only", only, "Criterion ids to run")->delimiter(',')->check(CLI::Range(1, 11));
    verify->add_option("--seed", verify_opts.seed, "Monte Carlo seed");
    verify->add_option("--trials", verify_opts.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);

    app.add_subcommand("presets", "List figure presets and setting keys");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return do_run(run_args);
        if (*verify) {
            verify_opts.only = {only.begin(), only.end()};
            const auto results = cellgeom::acceptance::run(verify_opts);
            return cellgeom::acceptance::report(results, std::cout) == 0 ? 0 : 1;
        }
        for (const auto& n : ex::preset_names()) std::cout << n << '\n';
        std::cout << "\nsettings:";
        for (const auto& k : ex::setting_keys()) std::cout << ' ' << k;
        std::cout << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
