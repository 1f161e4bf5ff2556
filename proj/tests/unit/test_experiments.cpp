#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cellgeom/analytic_rateless.hpp"
#include "cellgeom/experiments.hpp"
#include "cellgeom/parallel.hpp"
#include "cellgeom/rng.hpp"
#include "cellgeom/specialfun.hpp"

using namespace cellgeom;
using namespace cellgeom::experiments;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "cellgeom_test_experiments";
    fs::create_directories(dir);
    return dir / name;
}

ExperimentSpec small_sim_spec() {
    auto spec = preset("rate-vs-N-pl-threshold");
    spec.base.side = 12.0;
    spec.base.trials = 3;
    spec.N_grid = {50, 100};
    spec.beta_list = {0.0, 2.5};
    return spec;
}

}  // namespace

TEST(Presets, AllNamedPresetsValidate) {
    for (const auto& name : preset_names()) {
        const auto spec = preset(name);
        EXPECT_EQ(spec.preset, name);
        EXPECT_NO_THROW(spec.validate()) << name;
    }
    EXPECT_EQ(preset("rate-vs-N-fading-tci").beta_list, (std::vector<double>{0.0, 0.1, 0.2, 0.3}));
    EXPECT_EQ(preset("ps-vs-N-pl-threshold").beta_list, (std::vector<double>{0.0, 1.55, 2.5, 3.5}));
    EXPECT_EQ(preset("ps-vs-N-pl-tci").base.alpha, 4.0);
    EXPECT_THROW(preset("nope"), std::invalid_argument);
}

TEST(Spec, Invariants) {
    auto spec = preset("custom");
    spec.N_grid = {100, 75};
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    spec.N_grid = {};
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    spec = preset("custom");
    spec.beta_list = {};
    EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(Settings, ApplyAndReject) {
    auto spec = preset("custom");
    apply_setting(spec, "N_grid", "10, 20 ,30");
    apply_setting(spec, "--beta-list", "0,1.5");
    apply_setting(spec, "engines", "analytic");
    apply_setting(spec, "seed", "18446744073709551615");
    apply_setting(spec, "policy", "pathloss-fpc");
    apply_setting(spec, "tau", "0.5");
    apply_setting(spec, "fixed_rate", "no");
    EXPECT_EQ(spec.N_grid, (std::vector<int>{10, 20, 30}));
    EXPECT_EQ(spec.beta_list, (std::vector<double>{0.0, 1.5}));
    EXPECT_EQ(spec.engines, (std::vector<Engine>{Engine::analytic}));
    EXPECT_EQ(spec.base.seed, 18446744073709551615ull);
    EXPECT_EQ(spec.base.policy.kind, fixedrate::PowerPolicy::Kind::pathloss_fpc);
    EXPECT_EQ(spec.base.policy.tau, 0.5);
    EXPECT_FALSE(spec.fixed_rate);
    EXPECT_THROW(apply_setting(spec, "trials", "3x"), std::invalid_argument);
    EXPECT_THROW(apply_setting(spec, "bogus", "1"), std::invalid_argument);
    EXPECT_THROW(apply_setting(spec, "engines", "quantum"), std::invalid_argument);
    for (const auto& key : setting_keys()) EXPECT_FALSE(key.empty());
}

TEST(Config, SectionsAndComments) {
    const auto kv = parse_config("# sweep\n[grid]\nN_grid = 75, 100 ; inline\n\n[sim]\ntrials=2\nseed = 9\n");
    ASSERT_EQ(kv.size(), 3u);
    EXPECT_EQ(kv[0], (std::pair<std::string, std::string>{"N_grid", "75, 100"}));
    EXPECT_EQ(kv[2].second, "9");
    EXPECT_THROW(parse_config("[open\n"), std::invalid_argument);
    EXPECT_THROW(parse_config("novalue\n"), std::invalid_argument);
    EXPECT_THROW(read_config("/nonexistent/cellgeom.ini"), std::runtime_error);
}

TEST(Csv, EmptyIsHeaderOnly) {
    const auto path = scratch("empty.csv");
    emit_csv({}, path);
    EXPECT_EQ(slurp(path), "engine,scheme,N,beta,tau,ps,rate,ci\n");
}

TEST(Csv, SingleRowRoundTrips) {
    ResultRow r;
    r.engine = Engine::simulation;
    r.scheme = "fixed-fading-tci";
    r.N = 150;
    r.beta = 0.1;
    r.tau = 0.0;
    r.ps = 0.123456789;
    r.rate = 0.0617283945;
    r.ci = 0.00912345;
    const auto path = scratch("one.csv");
    emit_csv({r}, path);
    const std::string text = slurp(path);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
    EXPECT_NE(text.find("simulation,fixed-fading-tci,150,0.1,0,0.123457,0.0617284,0.00912345"), std::string::npos);
    const auto back = parse_csv(text);
    ASSERT_EQ(back.size(), 1u);
    EXPECT_EQ(back[0].scheme, r.scheme);
    EXPECT_EQ(back[0].N, 150);
    EXPECT_NEAR(back[0].ps, r.ps, 1e-6);
    ASSERT_TRUE(back[0].ci.has_value());
    EXPECT_EQ(to_csv(back), text);
}

TEST(Csv, ThousandRowsSorted) {
    rng::Stream s(3, {0, 0, 0});
    const char* schemes[] = {"rateless-ci", "rateless-tvi", "fixed-pathloss-threshold"};
    std::vector<ResultRow> rows(1000);
    for (auto& r : rows) {
        r.engine = s() % 2 ? Engine::analytic : Engine::simulation;
        r.scheme = schemes[s() % 3];
        r.N = static_cast<int>(1 + s() % 300);
        r.beta = static_cast<double>(s() % 4) * 0.5;
        r.ps = s.uniform();
        r.rate = s.uniform();
    }
    const auto path = scratch("many.csv");
    emit_csv(rows, path);
    const auto back = parse_csv(slurp(path));
    ASSERT_EQ(back.size(), 1000u);
    EXPECT_TRUE(std::is_sorted(back.begin(), back.end(), [](const ResultRow& a, const ResultRow& b) {
        return std::tie(a.scheme, a.beta, a.N) < std::tie(b.scheme, b.beta, b.N);
    }));
}

TEST(Csv, UnwritablePathNamesPath) {
    try {
        emit_csv({}, "/nonexistent-dir/out.csv");
        FAIL() << "expected an I/O error";
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/out.csv"), std::string::npos);
    }
}

TEST(Run, ThresholdAtZeroBetaIsCoverage) {
    auto spec = preset("ps-vs-N-pl-threshold");
    spec.engines = {Engine::analytic};
    spec.beta_list = {0.0};
    const auto rows = run_experiment(spec);
    std::size_t fixed = 0;
    for (const auto& r : rows) {
        ASSERT_FALSE(r.failed) << r.error;
        EXPECT_GE(r.ps, 0.0);
        EXPECT_LE(r.ps, 1.0);
        EXPECT_GE(r.rate, 0.0);
        if (r.scheme != "fixed-pathloss-threshold") continue;
        ++fixed;
        const auto p = AnalyticalParams::make(1.0, 3.0, 75.0, r.N);
        EXPECT_NEAR(r.ps, 1.0 / specialfun::hyp2f1_coverage(p.theta(), p.delta()), 1e-12);
        EXPECT_FALSE(r.ci.has_value());
    }
    EXPECT_EQ(fixed, spec.N_grid.size());
}

TEST(Run, OneRowPerCellWithConfidence) {
    const auto spec = small_sim_spec();
    const auto rows = run_experiment(spec);
    // analytic and simulation x (ci, tvi, two betas) x two N
    EXPECT_EQ(rows.size(), 2u * 4u * 2u);
    for (const auto& r : rows) {
        EXPECT_FALSE(r.failed) << r.error;
        if (r.engine == Engine::simulation) {
            ASSERT_TRUE(r.ci.has_value());
            EXPECT_GT(*r.ci, 0.0);
        }
    }
    const auto report = agreement_report(rows);
    EXPECT_EQ(report.size(), 4u);
    for (const auto& a : report) EXPECT_EQ(a.points, 2u);
}

TEST(Run, DeterministicAcrossWorkerCounts) {
    const auto spec = small_sim_spec();
    set_worker_override(1);
    const auto a = to_csv(run_experiment(spec));
    set_worker_override(3);
    const auto b = to_csv(run_experiment(spec));
    set_worker_override(0);
    EXPECT_EQ(a, b);
    auto other = spec;
    other.base.seed = 2;
    EXPECT_NE(a, to_csv(run_experiment(other)));
}

TEST(Run, AsyncComparisonRows) {
    auto spec = preset("async-vs-sync");
    spec.base.side = 10.0;
    spec.base.trials = 1;
    spec.N_grid = {60};
    const auto rows = run_experiment(spec);
    std::set<std::string> schemes;
    for (const auto& r : rows) {
        EXPECT_FALSE(r.failed) << r.error;
        schemes.insert(r.scheme);
    }
    EXPECT_EQ(schemes, (std::set<std::string>{"rateless-async", "rateless-tvi"}));
}

TEST(Run, FailingCellIsMarkedAndSweepContinues) {
    auto spec = preset("rate-vs-N-pl-fpc");
    spec.engines = {Engine::analytic};
    spec.N_grid = {100};
    spec.beta_list = {1.55};
    apply_setting(spec, "tau", "0");
    const auto rows = run_experiment(spec);
    ASSERT_EQ(rows.size(), 3u);
    for (const auto& r : rows) {
        if (r.scheme == "fixed-pathloss-fpc") {
            EXPECT_TRUE(r.failed);
            EXPECT_TRUE(std::isnan(r.ps));
            EXPECT_FALSE(r.error.empty());
        } else {
            EXPECT_FALSE(r.failed) << r.scheme;
        }
    }
    EXPECT_NE(to_csv(rows).find(",nan,nan,"), std::string::npos);
}

TEST(Plot, ScriptReferencesCsvAndSeries) {
    auto spec = preset("ps-vs-N-pl-threshold");
    spec.engines = {Engine::analytic};
    spec.beta_list = {0.0, 2.5};
    const auto rows = run_experiment(spec);
    const auto script = plot_script(rows, spec, "ps.csv");
    EXPECT_NE(script.find("ps.csv"), std::string::npos);
    EXPECT_NE(script.find("$s0 << EOD\n75 "), std::string::npos);
    EXPECT_NE(script.find("beta=2.5"), std::string::npos);
    EXPECT_NE(script.find("using 1:2 with lines"), std::string::npos);
}
