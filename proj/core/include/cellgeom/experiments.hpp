#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cellgeom/simulator.hpp"

namespace cellgeom::experiments {

enum class Engine { analytic, simulation };

std::string_view to_string(Engine engine);

/// One sweep: rateless and/or fixed-rate schemes over N_grid x beta_list.
struct ExperimentSpec {
    std::string preset = "custom";
    std::vector<int> N_grid{75, 100, 150, 200, 250, 300};
    std::vector<double> beta_list{0.0};
    /// side, lambda, K, alpha, trials, seed, lambda_s; policy.kind and tau
    /// select the fixed-rate scheme. N and beta are swept.
    sim::SimConfig base{};
    std::vector<Engine> engines{Engine::analytic, Engine::simulation};
    /// Rateless constant-interference and time-varying rows.
    bool rateless = true;
    /// Fixed-rate rows for base.policy.kind over beta_list.
    bool fixed_rate = true;
    /// Rateless sync vs Poisson-rain rows instead of the CI/TVI pair.
    bool async_compare = false;
    /// Also write a gnuplot script next to the CSV.
    bool plot = true;
    /// Column the plot script draws ("ps" or "rate").
    std::string plot_metric = "rate";

    void validate() const;
    bool has(Engine e) const;
};

struct ResultRow {
    Engine engine = Engine::analytic;
    std::string scheme;
    int N = 0;
    double beta = 0.0;
    double tau = 0.0;
    double ps = 0.0;
    double rate = 0.0;
    std::optional<double> ci;
    bool failed = false;
    std::string error;
};

std::vector<std::string> preset_names();

/// Named figure preset; throws std::invalid_argument for unknown names.
ExperimentSpec preset(std::string_view name);

/// Applies one `key = value` setting (config file or CLI flag).
void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value);

/// Line-oriented `key = value` file with optional `[section]` headers and
/// `#`/`;` comments. Sections only group keys; names are global.
std::vector<std::pair<std::string, std::string>> parse_config(std::string_view text);
std::vector<std::pair<std::string, std::string>> read_config(const std::filesystem::path& path);

/// Every recognised setting key.
const std::vector<std::string>& setting_keys();

/// Runs every (engine, scheme, N, beta) cell. A failing cell yields a row
/// marked failed; the sweep continues. Deterministic for a fixed seed.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec);

/// CSV text: header `engine,scheme,N,beta,tau,ps,rate,ci`, rows sorted by
/// (scheme, beta, N, engine), numbers with 6 significant digits.
std::string to_csv(std::vector<ResultRow> rows);
void emit_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path);

/// Parses text produced by to_csv.
std::vector<ResultRow> parse_csv(std::string_view text);

/// gnuplot commands plotting `metric` against N from `csv_name`.
std::string plot_script(const std::vector<ResultRow>& rows, const ExperimentSpec& spec,
                        const std::string& csv_name);

struct Agreement {
    std::string scheme;
    double beta = 0.0;
    double max_abs_ps_diff = 0.0;
    std::size_t points = 0;
};

/// max |ps_analytic - ps_simulation| per (scheme, beta) present in both engines.
std::vector<Agreement> agreement_report(const std::vector<ResultRow>& rows);

}  // namespace cellgeom::experiments
