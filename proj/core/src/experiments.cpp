#include "cellgeom/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "cellgeom/analytic_fixedrate.hpp"
#include "cellgeom/analytic_rateless.hpp"
#include "cellgeom/parallel.hpp"

namespace cellgeom::experiments {

namespace {

using fixedrate::PowerPolicy;

constexpr std::string_view kRatelessCi = "rateless-ci";
constexpr std::string_view kRatelessTvi = "rateless-tvi";
constexpr std::string_view kRatelessAsync = "rateless-async";

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::string normalise_key(std::string_view key) {
    std::string out = trim(key);
    while (!out.empty() && out.front() == '-') out.erase(out.begin());
    std::replace(out.begin(), out.end(), '-', '_');
    return out;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view want) {
    std::ostringstream msg;
    msg << "setting '" << key << "': cannot parse '" << value << "' as " << want;
    throw std::invalid_argument(msg.str());
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    const std::string s = trim(text);
    T value{};
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
        bad_value(key, text, std::is_integral_v<T> ? "an integer" : "a number");
    }
    return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
    std::string s = trim(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
    if (s == "0" || s == "false" || s == "no" || s == "off") return false;
    bad_value(key, text, "a boolean");
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    std::string item;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!item.empty()) out.push_back(item);
            item.clear();
        } else {
            item.push_back(c);
        }
    }
    if (!item.empty()) out.push_back(item);
    return out;
}

PowerPolicy::Kind parse_policy(std::string_view key, std::string_view text) {
    const std::string s = trim(text);
    for (auto kind : {PowerPolicy::Kind::constant, PowerPolicy::Kind::pathloss_fpc,
                      PowerPolicy::Kind::pathloss_threshold, PowerPolicy::Kind::fading_threshold,
                      PowerPolicy::Kind::fading_tci}) {
        if (s == fixedrate::to_string(kind)) return kind;
    }
    if (s == "pathloss-tci") return PowerPolicy::Kind::pathloss_fpc;
    bad_value(key, text, "a power policy");
}

std::string fixed_scheme(const PowerPolicy& policy) {
    return "fixed-" + std::string(fixedrate::to_string(policy.kind));
}

PowerPolicy policy_with_beta(const PowerPolicy& base, double beta) {
    PowerPolicy out = base;
    out.beta = beta;
    if (out.kind != PowerPolicy::Kind::pathloss_fpc) out.tau = 0.0;
    out.validate();
    return out;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

ResultRow make_row(Engine engine, std::string scheme, int N, double beta, double tau) {
    ResultRow row;
    row.engine = engine;
    row.scheme = std::move(scheme);
    row.N = N;
    row.beta = beta;
    row.tau = tau;
    return row;
}

void mark_failed(ResultRow& row, const std::exception& e) {
    row.failed = true;
    row.error = e.what();
    row.ps = std::numeric_limits<double>::quiet_NaN();
    row.rate = std::numeric_limits<double>::quiet_NaN();
    if (row.engine == Engine::simulation) row.ci = std::numeric_limits<double>::quiet_NaN();
}

template <typename Fn>
ResultRow guarded(ResultRow row, Fn&& compute) {
    try {
        const MetricsResult m = compute();
        row.ps = m.ps;
        row.rate = m.rate;
        row.ci = m.ci_halfwidth;
    } catch (const std::exception& e) {
        mark_failed(row, e);
    }
    return row;
}

sim::SimConfig config_for(const ExperimentSpec& spec, int N) {
    sim::SimConfig c = spec.base;
    c.N = N;
    return c;
}

void analytic_rows(const ExperimentSpec& spec, std::vector<ResultRow>& rows) {
    const auto& base = spec.base;
    struct Cell {
        ResultRow row;
        std::function<MetricsResult()> compute;
    };
    std::vector<Cell> cells;
    for (int N : spec.N_grid) {
        const auto p = AnalyticalParams::make(base.lambda, base.alpha, base.K, N);
        if (spec.rateless && !spec.async_compare) {
            cells.push_back({make_row(Engine::analytic, std::string(kRatelessCi), N, 0.0, 0.0), [p] {
                                 const double ps = rateless::ps_rateless_ci(p);
                                 return rateless::rate_from_ccdf(
                                     [&](double t) { return rateless::ccdf_const_interference(t, p); },
                                     p, ps);
                             }});
        }
        if (spec.rateless || spec.async_compare) {
            cells.push_back({make_row(Engine::analytic, std::string(kRatelessTvi), N, 0.0, 0.0),
                             [p] { return rateless::ps_rate_thinning_sync(p); }});
        }
        if (spec.async_compare) {
            cells.push_back({make_row(Engine::analytic, std::string(kRatelessAsync), N, 0.0, 0.0), [p] {
                                 const auto model = rateless::ThinningModel::standard(
                                     p, rateless::ThinningMode::asynchronous);
                                 return rateless::ps_rate_thinning_async(model, p);
                             }});
        }
        if (spec.fixed_rate) {
            for (double beta : spec.beta_list) {
                const auto policy = policy_with_beta(base.policy, beta);
                cells.push_back({make_row(Engine::analytic, fixed_scheme(policy), N, beta, policy.tau),
                                 [p, policy] {
                                     const double ps = fixedrate::ps_fixed_rate(
                                         fixedrate::SirThreshold::from(p), policy, p);
                                     return fixedrate::fixed_rate_metrics(ps, p);
                                 }});
            }
        }
    }
    std::vector<ResultRow> out(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) { out[i] = guarded(cells[i].row, cells[i].compute); });
    rows.insert(rows.end(), out.begin(), out.end());
}

// Aggregates per-trial outcomes at each N of the grid.
void rateless_sim_rows(const ExperimentSpec& spec, std::string_view scheme,
                       const std::vector<sim::TrialOutcome>& full, std::vector<ResultRow>& rows) {
    for (int N : spec.N_grid) {
        rows.push_back(guarded(make_row(Engine::simulation, std::string(scheme), N, 0.0, 0.0), [&] {
            std::vector<sim::TrialOutcome> cut;
            cut.reserve(full.size());
            for (const auto& o : full) cut.push_back(sim::truncate(o, N));
            return sim::aggregate(cut, config_for(spec, N).analytical()).second;
        }));
    }
}

void failed_rows(const ExperimentSpec& spec, const std::string& scheme, double beta, double tau,
                 const std::exception& e, std::vector<ResultRow>& rows) {
    for (int N : spec.N_grid) {
        ResultRow row = make_row(Engine::simulation, scheme, N, beta, tau);
        mark_failed(row, e);
        rows.push_back(std::move(row));
    }
}

void simulation_rows(const ExperimentSpec& spec, std::vector<ResultRow>& rows) {
    const int n_max = *std::max_element(spec.N_grid.begin(), spec.N_grid.end());
    const sim::SimConfig top = config_for(spec, n_max);
    const auto trials = static_cast<std::size_t>(top.trials);

    const bool want_ci = spec.rateless && !spec.async_compare;
    const bool want_tvi = spec.rateless || spec.async_compare;
    const bool need_network = want_ci || want_tvi || spec.fixed_rate;

    std::vector<sim::NetworkRealization> nets(trials);
    std::vector<sim::TrialOutcome> ci(trials);
    std::vector<sim::TrialOutcome> tvi(trials);
    std::vector<std::string> errors(trials);
    if (need_network) {
        parallel_for(trials, [&](std::size_t i) {
            try {
                nets[i] = sim::sample_network(top, static_cast<std::uint32_t>(i));
                if (want_ci) ci[i] = sim::simulate_rateless_ci(nets[i], top);
                if (want_tvi) tvi[i] = sim::simulate_rateless_tvi(nets[i], top);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        });
    }
    const auto first_error = std::find_if(errors.begin(), errors.end(),
                                          [](const std::string& s) { return !s.empty(); });
    const bool sync_failed = first_error != errors.end();
    const std::runtime_error sync_error(sync_failed ? *first_error : std::string());

    if (want_ci) {
        if (sync_failed) failed_rows(spec, std::string(kRatelessCi), 0.0, 0.0, sync_error, rows);
        else rateless_sim_rows(spec, kRatelessCi, ci, rows);
    }
    if (want_tvi) {
        if (sync_failed) failed_rows(spec, std::string(kRatelessTvi), 0.0, 0.0, sync_error, rows);
        else rateless_sim_rows(spec, kRatelessTvi, tvi, rows);
    }

    if (spec.async_compare) {
        for (int N : spec.N_grid) {
            rows.push_back(guarded(make_row(Engine::simulation, std::string(kRatelessAsync), N, 0.0, 0.0), [&] {
                sim::SimConfig c = config_for(spec, N);
                c.mode = sim::Mode::async_rain;
                return sim::aggregate(sim::run_trials(c), c.analytical()).second;
            }));
        }
    }

    if (spec.fixed_rate) {
        for (double beta : spec.beta_list) {
            const auto policy = policy_with_beta(spec.base.policy, beta);
            const std::string scheme = fixed_scheme(policy);
            if (sync_failed) {
                failed_rows(spec, scheme, beta, policy.tau, sync_error, rows);
                continue;
            }
            sim::SimConfig c = top;
            c.policy = policy;
            std::vector<sim::FixedRateLinks> links(trials);
            try {
                parallel_for(trials, [&](std::size_t i) { links[i] = sim::simulate_fixedrate_links(nets[i], c); });
            } catch (const std::exception& e) {
                failed_rows(spec, scheme, beta, policy.tau, e, rows);
                continue;
            }
            for (int N : spec.N_grid) {
                rows.push_back(guarded(make_row(Engine::simulation, scheme, N, beta, policy.tau), [&] {
                    const auto p = config_for(spec, N).analytical();
                    std::vector<sim::TrialOutcome> outcomes;
                    outcomes.reserve(trials);
                    for (const auto& l : links) outcomes.push_back(l.outcome(p.theta(), N));
                    return sim::aggregate(outcomes, p).second;
                }));
            }
        }
    }
}

std::tuple<std::string, double, int, int> sort_key(const ResultRow& r) {
    return {r.scheme, r.beta, r.N, static_cast<int>(r.engine)};
}

}  // namespace

std::string_view to_string(Engine engine) {
    return engine == Engine::analytic ? "analytic" : "simulation";
}

void ExperimentSpec::validate() const {
    if (N_grid.empty()) throw std::invalid_argument("ExperimentSpec: N_grid is empty");
    for (std::size_t i = 0; i < N_grid.size(); ++i) {
        if (N_grid[i] < 1) throw std::invalid_argument("ExperimentSpec: N values must be >= 1");
        if (i > 0 && N_grid[i] <= N_grid[i - 1]) {
            throw std::invalid_argument("ExperimentSpec: N_grid must be strictly ascending");
        }
    }
    if (beta_list.empty()) throw std::invalid_argument("ExperimentSpec: beta_list is empty");
    for (double b : beta_list) {
        if (!(b >= 0.0) || !std::isfinite(b)) throw std::invalid_argument("ExperimentSpec: beta must be >= 0");
    }
    if (engines.empty()) throw std::invalid_argument("ExperimentSpec: no engine selected");
    if (plot_metric != "ps" && plot_metric != "rate") {
        throw std::invalid_argument("ExperimentSpec: plot_metric must be ps or rate");
    }
    base.validate();
    if (base.lambda * base.side * base.side < 10.0) {
        std::fprintf(stderr, "warning: expected BS count lambda*side^2 is below 10\n");
    }
}

bool ExperimentSpec::has(Engine e) const {
    return std::find(engines.begin(), engines.end(), e) != engines.end();
}

std::vector<std::string> preset_names() {
    return {"ps-vs-N-pl-threshold",       "rate-vs-N-pl-threshold", "ps-vs-N-pl-tci",
            "rate-vs-N-pl-tci",           "rate-vs-N-pl-fpc",       "rate-vs-N-fading-threshold",
            "rate-vs-N-fading-tci",       "async-vs-sync",          "custom"};
}

ExperimentSpec preset(std::string_view name) {
    ExperimentSpec spec;
    spec.preset = std::string(name);
    spec.base.trials = 3;
    spec.base.seed = 1;
    const std::vector<double> pathloss_betas{0.0, 1.55, 2.5, 3.5};
    const std::vector<double> fading_betas{0.0, 0.1, 0.2, 0.3};

    if (name == "ps-vs-N-pl-threshold" || name == "rate-vs-N-pl-threshold") {
        spec.base.alpha = 3.0;
        spec.base.policy = PowerPolicy::pathloss_threshold(0.0);
        spec.beta_list = pathloss_betas;
    } else if (name == "ps-vs-N-pl-tci" || name == "rate-vs-N-pl-tci") {
        spec.base.alpha = 4.0;
        spec.base.policy = PowerPolicy::pathloss_fpc(1.0, 0.0);
        spec.beta_list = pathloss_betas;
    } else if (name == "rate-vs-N-pl-fpc") {
        spec.base.alpha = 3.0;
        spec.base.policy = PowerPolicy::pathloss_fpc(0.5, 0.0);
        spec.beta_list = pathloss_betas;
    } else if (name == "rate-vs-N-fading-threshold") {
        spec.base.alpha = 3.0;
        spec.base.policy = PowerPolicy::fading_threshold(0.0);
        spec.beta_list = fading_betas;
    } else if (name == "rate-vs-N-fading-tci") {
        spec.base.alpha = 4.0;
        spec.base.policy = PowerPolicy::fading_tci(0.0);
        spec.beta_list = fading_betas;
    } else if (name == "async-vs-sync") {
        spec.base.alpha = 4.0;
        spec.rateless = false;
        spec.fixed_rate = false;
        spec.async_compare = true;
    } else if (name == "custom") {
        spec.base.policy = PowerPolicy::constant();
    } else {
        std::ostringstream msg;
        msg << "unknown preset '" << name << "'; known presets:";
        for (const auto& n : preset_names()) msg << ' ' << n;
        throw std::invalid_argument(msg.str());
    }
    spec.plot_metric = name.starts_with("ps-") ? "ps" : "rate";
    return spec;
}

const std::vector<std::string>& setting_keys() {
    static const std::vector<std::string> keys{
        "seed",     "trials",  "side",      "lambda",     "K",          "alpha",
        "tau",      "policy",  "N_grid",    "beta_list",  "engines",    "rateless",
        "fixed_rate", "async_compare", "lambda_s", "plot", "plot_metric"};
    return keys;
}

void apply_setting(ExperimentSpec& spec, std::string_view raw_key, std::string_view value) {
    const std::string key = normalise_key(raw_key);
    auto& b = spec.base;
    if (key == "seed") b.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "trials") b.trials = parse_number<int>(key, value);
    else if (key == "side") b.side = parse_number<double>(key, value);
    else if (key == "lambda") b.lambda = parse_number<double>(key, value);
    else if (key == "K") b.K = parse_number<double>(key, value);
    else if (key == "alpha") b.alpha = parse_number<double>(key, value);
    else if (key == "lambda_s") b.lambda_s = parse_number<double>(key, value);
    else if (key == "tau") b.policy.tau = parse_number<double>(key, value);
    else if (key == "policy") {
        b.policy.kind = parse_policy(key, value);
        if (b.policy.kind != PowerPolicy::Kind::pathloss_fpc) b.policy.tau = 0.0;
        else if (b.policy.tau == 0.0) b.policy.tau = 1.0;
    } else if (key == "N_grid") {
        spec.N_grid.clear();
        for (const auto& item : split_list(value)) spec.N_grid.push_back(parse_number<int>(key, item));
    } else if (key == "beta_list") {
        spec.beta_list.clear();
        for (const auto& item : split_list(value)) spec.beta_list.push_back(parse_number<double>(key, item));
    } else if (key == "engines") {
        spec.engines.clear();
        for (const auto& item : split_list(value)) {
            if (item == "analytic") spec.engines.push_back(Engine::analytic);
            else if (item == "simulation") spec.engines.push_back(Engine::simulation);
            else bad_value(key, item, "analytic or simulation");
        }
    } else if (key == "rateless") spec.rateless = parse_bool(key, value);
    else if (key == "fixed_rate") spec.fixed_rate = parse_bool(key, value);
    else if (key == "async_compare") spec.async_compare = parse_bool(key, value);
    else if (key == "plot") spec.plot = parse_bool(key, value);
    else if (key == "plot_metric") spec.plot_metric = trim(value);
    else {
        std::ostringstream msg;
        msg << "unknown setting '" << raw_key << "'";
        throw std::invalid_argument(msg.str());
    }
}

std::vector<std::pair<std::string, std::string>> parse_config(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        const std::string s = trim(line);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') {
                throw std::invalid_argument("config line " + std::to_string(number) + ": unterminated section");
            }
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(number) + ": expected key = value");
        }
        std::string key = normalise_key(s.substr(0, eq));
        if (key.empty()) throw std::invalid_argument("config line " + std::to_string(number) + ": empty key");
        out.emplace_back(std::move(key), trim(s.substr(eq + 1)));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> read_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    std::vector<ResultRow> rows;
    if (spec.has(Engine::analytic)) analytic_rows(spec, rows);
    if (spec.has(Engine::simulation)) simulation_rows(spec, rows);
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ResultRow& a, const ResultRow& b) { return sort_key(a) < sort_key(b); });
    return rows;
}

std::string to_csv(std::vector<ResultRow> rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ResultRow& a, const ResultRow& b) { return sort_key(a) < sort_key(b); });
    std::ostringstream out;
    out << "engine,scheme,N,beta,tau,ps,rate,ci\n";
    for (const auto& r : rows) {
        out << to_string(r.engine) << ',' << r.scheme << ',' << r.N << ',' << format_number(r.beta) << ','
            << format_number(r.tau) << ',' << format_number(r.ps) << ',' << format_number(r.rate) << ',';
        if (r.ci) out << format_number(*r.ci);
        out << '\n';
    }
    return out.str();
}

void emit_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << to_csv(rows);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<ResultRow> parse_csv(std::string_view text) {
    std::vector<ResultRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "engine,scheme,N,beta,tau,ps,rate,ci") {
        throw std::invalid_argument("parse_csv: missing header");
    }
    auto number = [](const std::string& s) {
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        return std::stod(s);
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) f.push_back(field);
        if (line.back() == ',') f.emplace_back();
        if (f.size() != 8) throw std::invalid_argument("parse_csv: expected 8 fields in '" + line + "'");
        ResultRow r;
        if (f[0] == "analytic") r.engine = Engine::analytic;
        else if (f[0] == "simulation") r.engine = Engine::simulation;
        else throw std::invalid_argument("parse_csv: unknown engine '" + f[0] + "'");
        r.scheme = f[1];
        r.N = std::stoi(f[2]);
        r.beta = number(f[3]);
        r.tau = number(f[4]);
        r.ps = number(f[5]);
        r.rate = number(f[6]);
        if (!f[7].empty()) r.ci = number(f[7]);
        r.failed = std::isnan(r.ps);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string plot_script(const std::vector<ResultRow>& rows, const ExperimentSpec& spec,
                        const std::string& csv_name) {
    const bool ps = spec.plot_metric == "ps";
    std::map<std::tuple<std::string, double, int>, std::vector<std::pair<int, double>>> series;
    for (const auto& r : rows) {
        if (r.failed) continue;
        series[{r.scheme, r.beta, static_cast<int>(r.engine)}].emplace_back(r.N, ps ? r.ps : r.rate);
    }

    std::ostringstream out;
    out << "# " << spec.preset << ": " << (ps ? "success probability" : "rate") << " against N, from "
        << csv_name << "\n"
        << "set terminal pngcairo size 960,640\n"
        << "set output '" << spec.preset << ".png'\n"
        << "set xlabel 'N (channel uses)'\n"
        << "set ylabel '" << (ps ? "p_s(N)" : "R_N (bits/channel use)") << "'\n"
        << "set key outside right\n"
        << "set grid\n";
    std::size_t id = 0;
    for (auto& [key, points] : series) {
        std::sort(points.begin(), points.end());
        out << "$s" << id++ << " << EOD\n";
        for (const auto& [N, v] : points) out << N << ' ' << format_number(v) << '\n';
        out << "EOD\n";
    }
    if (series.empty()) return out.str();
    out << "plot \\\n";
    id = 0;
    for (const auto& [key, points] : series) {
        const auto& [scheme, beta, engine] = key;
        const auto e = static_cast<Engine>(engine);
        out << "  $s" << id << " using 1:2 with " << (e == Engine::analytic ? "lines" : "points") << " title '"
            << scheme;
        if (scheme.starts_with("fixed")) out << " beta=" << format_number(beta);
        out << " (" << to_string(e) << ")'" << (++id < series.size() ? ", \\\n" : "\n");
    }
    return out.str();
}

std::vector<Agreement> agreement_report(const std::vector<ResultRow>& rows) {
    std::map<std::tuple<std::string, double, int>, const ResultRow*> analytic;
    for (const auto& r : rows) {
        if (r.engine == Engine::analytic && !r.failed) analytic[{r.scheme, r.beta, r.N}] = &r;
    }
    std::map<std::pair<std::string, double>, Agreement> report;
    for (const auto& r : rows) {
        if (r.engine != Engine::simulation || r.failed) continue;
        const auto it = analytic.find({r.scheme, r.beta, r.N});
        if (it == analytic.end()) continue;
        auto& a = report[{r.scheme, r.beta}];
        a.scheme = r.scheme;
        a.beta = r.beta;
        a.max_abs_ps_diff = std::max(a.max_abs_ps_diff, std::abs(it->second->ps - r.ps));
        ++a.points;
    }
    std::vector<Agreement> out;
    for (auto& [key, a] : report) out.push_back(a);
    return out;
}

}  // namespace cellgeom::experiments
