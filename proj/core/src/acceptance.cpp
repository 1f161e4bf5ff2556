#include "cellgeom/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include "cellgeom/analytic_fixedrate.hpp"
#include "cellgeom/analytic_rateless.hpp"
#include "cellgeom/experiments.hpp"
#include "cellgeom/parallel.hpp"
#include "cellgeom/simulator.hpp"
#include "cellgeom/specialfun.hpp"

namespace cellgeom::acceptance {

namespace {

using fixedrate::PowerPolicy;
using fixedrate::SirThreshold;
using specialfun::h_interference;
using specialfun::hyp2f1_coverage;
using specialfun::hyp2f1_mu_kernel;

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

struct Verdict {
    bool passed;
    std::string detail;
};

Verdict hypergeometric_identity() {
    double worst = 0.0;
    for (double theta : {0.01, 0.1, 1.0, 10.0, 100.0}) {
        for (double delta : {0.4, 0.5, 2.0 / 3.0}) {
            const double gap = std::abs(hyp2f1_coverage(theta, delta) - 1.0 - h_interference(theta, delta));
            worst = std::max(worst, gap);
        }
    }
    return {worst < 1e-10, fmt("max gap %.3g (limit 1e-10)", worst)};
}

Verdict half_delta_closed_forms() {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double theta = 100.0 * i / 49.0;
        const double s = std::sqrt(theta);
        const double at = std::atan(s);
        const double cov = 1.0 + s * at;
        const double h = s * at;
        const double kernel = theta == 0.0 ? 1.0 : at / s;
        worst = std::max({worst, std::abs(hyp2f1_coverage(theta, 0.5) - cov),
                          std::abs(h_interference(theta, 0.5) - h),
                          std::abs(hyp2f1_mu_kernel(theta, 0.5) - kernel)});
    }
    return {worst < 1e-8, fmt("max gap %.3g over 50 points (limit 1e-8)", worst)};
}

Verdict transmission_table() {
    const auto p = AnalyticalParams::make(1.0, 3.0, 75.0, 100);
    const double betas[] = {0.0, 1.55, 2.5, 3.5};
    const double expected[] = {1.0, 0.90, 0.82, 0.74};
    double worst_pl = 0.0;
    double worst_fading = 0.0;
    std::ostringstream got;
    for (int i = 0; i < 4; ++i) {
        const double pa = fixedrate::transmission_probability(PowerPolicy::pathloss_threshold(betas[i]), p);
        worst_pl = std::max(worst_pl, std::abs(pa - expected[i]));
        got << (i ? " " : "") << fmt("%.4f", pa);
    }
    for (double beta : {0.0, 0.1, 0.2, 0.3}) {
        const double pa = fixedrate::transmission_probability(PowerPolicy::fading_threshold(beta), p);
        worst_fading = std::max(worst_fading, std::abs(pa - std::exp(-beta)));
    }
    return {worst_pl <= 0.005 && worst_fading < 1e-15,
            fmt("pathloss P(A) = {%s}, max dev %.4f (limit 0.005); fading max dev %.3g",
                got.str().c_str(), worst_pl, worst_fading)};
}

Verdict fpc_threshold_consistency() {
    const auto p = AnalyticalParams::make(1.0, 3.0, 75.0, 100);
    struct Cell {
        double theta, beta, gap;
    };
    std::vector<Cell> cells;
    for (double theta : {0.5, 1.0, 2.0}) {
        for (double beta : {1.55, 2.5}) cells.push_back({theta, beta, 0.0});
    }
    parallel_for(cells.size(), [&](std::size_t i) {
        auto& c = cells[i];
        const double fpc = fixedrate::ps_fpc({c.theta}, PowerPolicy::pathloss_fpc(1e-3, c.beta), p);
        const double th = fixedrate::ps_pathloss_threshold({c.theta}, PowerPolicy::pathloss_threshold(c.beta), p);
        c.gap = std::abs(fpc - th);
    });
    const auto worst = std::max_element(cells.begin(), cells.end(),
                                        [](const Cell& a, const Cell& b) { return a.gap < b.gap; });
    return {worst->gap < 1e-3, fmt("max gap %.3g at theta=%g beta=%g (limit 1e-3)", worst->gap, worst->theta,
                                   worst->beta)};
}

Verdict beta_zero_coincidence() {
    double worst = 0.0;
    for (double alpha : {3.0, 4.0}) {
        for (int N : {100, 200, 300}) {
            const auto p = AnalyticalParams::make(1.0, alpha, 75.0, N);
            const auto theta = SirThreshold::from(p);
            const double ci = rateless::ps_rateless_ci(p);
            const double pl = fixedrate::ps_pathloss_threshold(theta, PowerPolicy::pathloss_threshold(1e-9), p);
            const double fd = fixedrate::ps_fading_threshold(theta, PowerPolicy::fading_threshold(0.0), p);
            worst = std::max({worst, std::abs(pl - ci), std::abs(fd - ci)});
        }
    }
    return {worst < 1e-6, fmt("max gap %.3g (limit 1e-6)", worst)};
}

/// Synchronous CI and TVI outcomes at alpha = 3, N = 300, shared by two criteria.
struct SyncRun {
    std::vector<sim::TrialOutcome> ci;
    std::vector<sim::TrialOutcome> tvi;
    std::size_t users = 0;
};

sim::SimConfig sync_config(const Options& o, double alpha, int N) {
    sim::SimConfig c;
    c.side = 60.0;
    c.lambda = 1.0;
    c.K = 75.0;
    c.alpha = alpha;
    c.N = N;
    c.trials = o.trials;
    c.seed = o.seed;
    return c;
}

const SyncRun& sync_run(const Options& o) {
    static SyncRun cached;
    static std::pair<std::uint64_t, int> key{0, -1};
    if (key == std::pair{o.seed, o.trials}) return cached;
    cached = {};
    const auto config = sync_config(o, 3.0, 300);
    const auto n = static_cast<std::size_t>(config.trials);
    cached.ci.resize(n);
    cached.tvi.resize(n);
    parallel_for(n, [&](std::size_t i) {
        const auto net = sim::sample_network(config, static_cast<std::uint32_t>(i));
        cached.ci[i] = sim::simulate_rateless_ci(net, config);
        cached.tvi[i] = sim::simulate_rateless_tvi(net, config);
    });
    for (const auto& t : cached.ci) cached.users += t.users();
    key = {o.seed, o.trials};
    return cached;
}

std::vector<sim::TrialOutcome> cut(const std::vector<sim::TrialOutcome>& full, int N) {
    std::vector<sim::TrialOutcome> out;
    for (const auto& t : full) out.push_back(sim::truncate(t, N));
    return out;
}

Verdict ci_monte_carlo(const Options& o) {
    const auto& run = sync_run(o);
    bool ok = run.users >= 10000;
    std::ostringstream msg;
    msg << run.users << " users;";
    for (int N : {100, 200, 300}) {
        const auto p = AnalyticalParams::make(1.0, 3.0, 75.0, N);
        const auto [curve, m] = sim::aggregate(cut(run.ci, N), p);
        const double analytic = rateless::ps_rateless_ci(p);
        double sup = 0.0;
        for (std::size_t j = 0; j < curve.grid.size(); ++j) {
            sup = std::max(sup, std::abs(curve.values[j] - rateless::ccdf_const_interference(curve.grid[j], p)));
        }
        const double gap = std::abs(m.ps - analytic);
        ok = ok && gap <= 0.015 && sup < 0.02;
        msg << fmt(" N=%d ps %.4f vs %.4f (gap %.4f), sup %.4f;", N, m.ps, analytic, gap, sup);
    }
    msg << " limits 0.015 / 0.02";
    return {ok, msg.str()};
}

Verdict tvi_bound_dominance(const Options& o) {
    const auto& run = sync_run(o);
    bool ok = true;
    std::ostringstream msg;
    for (int N : {100, 200, 300}) {
        const auto p = AnalyticalParams::make(1.0, 3.0, 75.0, N);
        const auto model = rateless::ThinningModel::standard(p, rateless::ThinningMode::synchronous);
        const auto [curve, m] = sim::aggregate(cut(run.tvi, N), p);
        const double n = static_cast<double>(run.users);
        double worst = -1.0;
        double worst_t = 0.0;
        double worst_sigma = 0.0;
        for (std::size_t j = 0; j < curve.grid.size(); ++j) {
            const double bound = rateless::ccdf_thinning_bound_sync(curve.grid[j], model, p);
            const double sigma = std::sqrt(std::max(bound * (1.0 - bound), 0.0) / n);
            const double gap = curve.values[j] - bound;
            if (gap > 3.0 * sigma) ok = false;
            if (gap > worst) {
                worst = gap;
                worst_t = curve.grid[j];
                worst_sigma = sigma;
            }
        }
        const std::size_t last = curve.grid.size() - 2;
        msg << fmt("N=%d max(sim - bound) %.4f at t=%g (3 sigma %.4f), at t=%d sim %.4f vs bound %.4f; ", N, worst,
                   worst_t, 3.0 * worst_sigma, N - 1, curve.values[last],
                   rateless::ccdf_thinning_bound_sync(curve.grid[last], model, p));
    }
    return {ok, msg.str()};
}

Verdict sync_async_ordering() {
    bool ok = true;
    std::ostringstream msg;
    for (double alpha : {3.0, 4.0}) {
        const auto p = AnalyticalParams::make(1.0, alpha, 75.0, 300);
        const auto sync = rateless::ThinningModel::standard(p, rateless::ThinningMode::synchronous);
        const auto async = rateless::ThinningModel::standard(p, rateless::ThinningMode::asynchronous);
        int bad_sa = 0;
        int bad_ac = 0;
        double worst_sa = 0.0;
        for (int t = 1; t <= p.N; ++t) {
            const double ps = rateless::ccdf_thinning_bound_sync(t, sync, p);
            const double pa = rateless::ccdf_thinning_bound_async(t, async, p);
            const double pc = rateless::ccdf_const_interference(t, p);
            if (ps > pa + 1e-12) {
                ++bad_sa;
                worst_sa = std::max(worst_sa, ps - pa);
            }
            if (pa > pc + 1e-12) ++bad_ac;
        }
        ok = ok && bad_sa == 0 && bad_ac == 0;
        const double t60s = rateless::ccdf_thinning_bound_sync(60, sync, p);
        const double t60a = rateless::ccdf_thinning_bound_async(60, async, p);
        msg << fmt("alpha=%g: P_s>P_a at %d/%d t (max %.4f; t=60: %.4f vs %.4f), P_a>P_c at %d t; ", alpha, bad_sa,
                   p.N, worst_sa, t60s, t60a, bad_ac);
    }
    return {ok, msg.str()};
}

Verdict rate_ranges_alpha4() {
    struct Range {
        int N;
        double lo, hi;
    };
    bool ok = true;
    std::ostringstream msg;
    for (const auto& r : {Range{100, 0.78, 1.0}, Range{300, 0.6, 0.9}}) {
        const auto p = AnalyticalParams::make(1.0, 4.0, 75.0, r.N);
        const double ps = rateless::ps_rateless_ci(p);
        const double ci = rateless::rate_from_ccdf(
                              [&](double t) { return rateless::ccdf_const_interference(t, p); }, p, ps)
                              .rate;
        const double thin = rateless::ps_rate_thinning_sync(p).rate;
        const bool in = ci >= r.lo && ci <= r.hi && thin >= r.lo && thin <= r.hi && ci <= thin;
        ok = ok && in;
        msg << fmt("R_%d: CI %.4f, thinning %.4f in [%.2f, %.2f] %s (to 2 decimals %.2f, %.2f); ", r.N, ci, thin,
                   r.lo, r.hi, in ? "yes" : "no", ci, thin);
    }
    return {ok, msg.str()};
}

Verdict fixed_rate_monte_carlo(const Options& o) {
    struct Case {
        const char* name;
        PowerPolicy policy;
    };
    const Case cases[] = {{"pathloss-tci", PowerPolicy::pathloss_fpc(1.0, 0.0)},
                          {"fading-tci", PowerPolicy::fading_tci(0.0)}};
    auto config = sync_config(o, 4.0, 200);
    const auto trials = static_cast<std::size_t>(config.trials);
    std::vector<sim::NetworkRealization> nets(trials);
    parallel_for(trials, [&](std::size_t i) { nets[i] = sim::sample_network(config, static_cast<std::uint32_t>(i)); });
    std::size_t users = 0;
    for (const auto& n : nets) users += n.size();

    bool ok = users >= 10000;
    std::ostringstream msg;
    msg << users << " users; ";
    for (const auto& c : cases) {
        config.policy = c.policy;
        std::vector<sim::FixedRateLinks> links(trials);
        parallel_for(trials, [&](std::size_t i) { links[i] = sim::simulate_fixedrate_links(nets[i], config); });
        for (int N : {100, 200}) {
            const auto p = AnalyticalParams::make(1.0, 4.0, 75.0, N);
            std::vector<sim::TrialOutcome> outcomes;
            for (const auto& l : links) outcomes.push_back(l.outcome(p.theta(), N));
            const double sim_ps = sim::aggregate(outcomes, p).second.ps;
            const double analytic = fixedrate::ps_fixed_rate(SirThreshold::from(p), c.policy, p);
            const double gap = std::abs(sim_ps - analytic);
            ok = ok && gap <= 0.02;
            msg << fmt("%s N=%d sim %.4f vs %.4f (gap %.4f); ", c.name, N, sim_ps, analytic, gap);
        }
    }
    msg << "limit 0.02";
    return {ok, msg.str()};
}

Verdict determinism() {
    auto spec = experiments::preset("rate-vs-N-pl-threshold");
    spec.base.seed = 42;
    std::string csv[2];
    const unsigned workers[] = {1, 4};
    for (int i = 0; i < 2; ++i) {
        set_worker_override(workers[i]);
        try {
            csv[i] = experiments::to_csv(experiments::run_experiment(spec));
        } catch (...) {
            set_worker_override(0);
            throw;
        }
    }
    set_worker_override(0);
    const bool same = csv[0] == csv[1];
    return {same, fmt("%zu CSV bytes with 1 and 4 workers, %s", csv[0].size(), same ? "identical" : "different")};
}

struct Criterion {
    int id;
    const char* title;
    std::function<Verdict(const Options&)> check;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "hypergeometric identity", [](const Options&) { return hypergeometric_identity(); }},
        {2, "delta=1/2 closed forms", [](const Options&) { return half_delta_closed_forms(); }},
        {3, "beta to P(A) table", [](const Options&) { return transmission_table(); }},
        {4, "FPC tau->0 matches pathloss threshold", [](const Options&) { return fpc_threshold_consistency(); }},
        {5, "beta=0 fixed rate equals rateless CI", [](const Options&) { return beta_zero_coincidence(); }},
        {6, "constant-interference Monte Carlo", ci_monte_carlo},
        {7, "time-varying CCDF below thinning bound", tvi_bound_dominance},
        {8, "P_s <= P_a <= P_c ordering", [](const Options&) { return sync_async_ordering(); }},
        {9, "rateless rate ranges at alpha=4", [](const Options&) { return rate_ranges_alpha4(); }},
        {10, "fixed-rate TCI Monte Carlo at beta=0", fixed_rate_monte_carlo},
        {11, "determinism across thread counts", [](const Options&) { return determinism(); }},
    };
    return all;
}

}  // namespace

int criterion_count() { return static_cast<int>(criteria().size()); }

std::vector<CriterionResult> run(const Options& options) {
    std::vector<CriterionResult> out;
    for (const auto& c : criteria()) {
        if (!options.only.empty() && !options.only.contains(c.id)) continue;
        CriterionResult r;
        r.id = c.id;
        r.title = c.title;
        const auto start = std::chrono::steady_clock::now();
        try {
            const Verdict v = c.check(options);
            r.passed = v.passed;
            r.detail = v.detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

int report(const std::vector<CriterionResult>& results, std::ostream& out) {
    int failures = 0;
    for (const auto& r : results) {
        if (!r.passed) ++failures;
        out << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.title << ": " << r.detail
            << fmt(" [%.1fs]", r.seconds) << '\n';
    }
    out << (results.size() - failures) << '/' << results.size() << " criteria passed\n";
    return failures;
}

}  // namespace cellgeom::acceptance
