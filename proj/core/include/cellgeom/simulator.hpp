#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "cellgeom/analytic_fixedrate.hpp"
#include "cellgeom/params.hpp"
#include "cellgeom/torus.hpp"

namespace cellgeom::sim {

using geom::Point;

enum class Mode { sync_tvi, sync_ci, fixed_rate, async_rain };

std::string_view to_string(Mode mode);

/// Rate cap (bits per channel use) applied when the averaged interference
/// vanishes, and to every achievable rate.
inline constexpr double kRateCap = 30.0;

struct SimConfig {
    double side = 60.0;
    double lambda = 1.0;
    double K = 75.0;
    int N = 100;
    double alpha = 3.0;
    fixedrate::PowerPolicy policy{};
    Mode mode = Mode::sync_tvi;
    /// Space-time intensity for async-rain; 0 selects lambda / N, the density
    /// that matches the synchronous interferer load.
    double lambda_s = 0.0;
    int trials = 1;
    std::uint64_t seed = 0;

    void validate() const;
    AnalyticalParams analytical() const { return AnalyticalParams::make(lambda, alpha, K, N); }
    double effective_lambda_s() const { return lambda_s > 0.0 ? lambda_s : lambda / N; }
};

/// One Poisson network on the torus. Cross fades |g_ki|^2 are not stored:
/// they are regenerated on demand from the counter-based stream, so any
/// (k, i) pair always yields the same value.
struct NetworkRealization {
    double side = 0.0;
    std::vector<Point> bs_positions;
    std::vector<Point> user_positions;
    std::vector<double> desired_fades;
    std::vector<double> start_times;
    std::uint64_t seed = 0;
    std::uint32_t trial = 0;
    /// Re-draw counter; selects fresh substreams for the same trial.
    std::uint32_t attempt = 0;

    std::size_t size() const noexcept { return bs_positions.size(); }
    geom::Torus torus() const { return geom::Torus(side); }
    /// |g_ki|^2 from BS k to user i.
    double cross_fade(std::size_t k, std::size_t i) const;
    /// Distance from BS i to its own user.
    double link_distance(std::size_t i) const;
};

/// Thrown when a Voronoi cell defeats rejection sampling.
class DegenerateCellError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TrialOutcome {
    /// N of the run; packet times above it are censored.
    int horizon = 0;
    bool fixed_rate = false;
    /// Rateless modes: decode time in 1..horizon, or horizon + 1 if censored.
    std::vector<int> packet_times;
    std::vector<std::uint8_t> successes;
    /// Fixed-rate modes: whether the gate of the power policy was open.
    std::vector<std::uint8_t> transmitted;

    std::size_t users() const noexcept { return successes.size(); }
    int censored_value() const noexcept { return horizon + 1; }
};

/// Samples BSs (Poisson count, uniform positions), one user per BS uniformly
/// in its torus Voronoi cell, and unit-mean exponential desired fades.
/// Degenerate cells are retried with a fresh realization of the same trial.
NetworkRealization sample_network(const SimConfig& config, std::uint32_t trial);

/// Builds a realization around given BS positions (users and fades sampled).
NetworkRealization sample_network(const SimConfig& config, std::uint32_t trial,
                                  std::vector<Point> bs_positions);

/// Options for the time-varying sweep.
struct TviOptions {
    /// Optional per-BS last active step; a BS stops at the end of that step
    /// even if its user has not decoded. Empty means no forced stops.
    std::vector<int> forced_stop;
    /// Called after each step with (t, averaged interference per user).
    std::function<void(int, const std::vector<double>&)> observer;
};

/// Synchronous rateless sweep with time-varying interference: at each
/// integer step the averaged interference is updated, users with
/// K <= t C_i(t) decode, and their BSs go silent at the end of the step.
TrialOutcome simulate_rateless_tvi(const NetworkRealization& net, const SimConfig& config,
                                   const TviOptions& options = {});

/// Synchronous rateless with every interferer on for the whole horizon.
TrialOutcome simulate_rateless_ci(const NetworkRealization& net, const SimConfig& config);

/// Per-user fixed-rate link state, independent of N.
struct FixedRateLinks {
    std::vector<double> sir;
    std::vector<std::uint8_t> transmitted;

    /// Success iff transmitted and SIR > theta.
    TrialOutcome outcome(double theta, int horizon) const;
};

FixedRateLinks simulate_fixedrate_links(const NetworkRealization& net, const SimConfig& config);

/// Each BS picks its power from its own link; silent BSs cause no
/// interference and their users fail.
TrialOutcome simulate_fixedrate(const NetworkRealization& net, const SimConfig& config);

/// Interferer duration law for the Poisson-rain trial: CCDF on (0, N), atom at N.
class DurationSampler {
public:
    /// Tabulates `ccdf` on a grid of `points_per_use` points per channel use.
    DurationSampler(const std::function<double(double)>& ccdf, int N, int points_per_use = 8);

    /// Standard interferer law of the thinning model.
    static DurationSampler standard(const AnalyticalParams& p);

    /// Inverse-transform sample from u in (0, 1].
    double sample(double u) const;
    int horizon() const noexcept { return horizon_; }

private:
    int horizon_;
    std::vector<double> grid_;
    std::vector<double> ccdf_;
};

/// Asynchronous Poisson-rain trial: `users` independent tagged links, each
/// with its own interferer field of space-time intensity lambda_s on the
/// window x [-N, N]. Interferers closer than the serving BS are excluded.
TrialOutcome simulate_rateless_async(const SimConfig& config, std::uint32_t trial,
                                     const DurationSampler& durations, std::size_t users);

/// Re-censors a rateless outcome at a smaller horizon.
TrialOutcome truncate(const TrialOutcome& outcome, int N);

/// Pooled CCDF on 1..N and metrics. Rateless: p_s is the decoded fraction and
/// the rate uses the trapezoid mean of the pooled CCDF. Fixed-rate: p_s is
/// the success fraction and rate = (K/N) p_s.
std::pair<CcdfCurve, MetricsResult> aggregate(const std::vector<TrialOutcome>& outcomes,
                                              const AnalyticalParams& p);

/// Runs `trials` independent trials of config.mode in parallel and returns
/// them in trial order. Trial i uses substream i of config.seed.
std::vector<TrialOutcome> run_trials(const SimConfig& config);

}  // namespace cellgeom::sim
