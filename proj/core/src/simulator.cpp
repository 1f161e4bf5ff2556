#include "cellgeom/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "cellgeom/analytic_rateless.hpp"
#include "cellgeom/parallel.hpp"
#include "cellgeom/rng.hpp"

namespace cellgeom::sim {

namespace {

enum Tag : std::uint32_t {
    kBsCount = 1,
    kBsPosition = 2,
    kUser = 3,
    kDesiredFade = 4,
    kCrossFade = 5,
    kAsyncLink = 6,
    kAsyncField = 7,
};

constexpr int kMaxAttempts = 16;
constexpr long kMaxRejections = 1'000'000;

std::uint32_t tag(Tag base, std::uint32_t attempt) { return base | (attempt << 8); }

// d^-alpha from d^2, with the common exponents spelled out.
double path_gain(double d2, double alpha) {
    if (alpha == 4.0) return 1.0 / (d2 * d2);
    if (alpha == 3.0) return 1.0 / (d2 * std::sqrt(d2));
    return std::pow(d2, -0.5 * alpha);
}

double achievable_rate(double signal, double interference) {
    if (!(interference > 0.0)) return kRateCap;
    return std::min(kRateCap, std::log2(1.0 + signal / interference));
}

bool decodes(double K, int t, double rate) { return K <= t * rate; }

std::vector<double> received_signal(const NetworkRealization& net, double alpha,
                                    const std::vector<double>& power) {
    const auto torus = net.torus();
    std::vector<double> out(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) {
        out[i] = power[i] * net.desired_fades[i] *
                 path_gain(torus.distance2(net.bs_positions[i], net.user_positions[i]), alpha);
    }
    return out;
}

// Interference from BS k at user i for unit power.
double unit_interference(const NetworkRealization& net, const geom::Torus& torus, double alpha,
                         std::size_t k, std::size_t i) {
    return net.cross_fade(k, i) *
           path_gain(torus.distance2(net.bs_positions[k], net.user_positions[i]), alpha);
}

std::vector<double> total_interference(const NetworkRealization& net, double alpha,
                                       const std::vector<double>& power) {
    const auto torus = net.torus();
    const std::size_t n = net.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i || power[k] == 0.0) continue;
            sum += power[k] * unit_interference(net, torus, alpha, k, i);
        }
        out[i] = sum;
    }
    return out;
}

NetworkRealization build_network(const SimConfig& config, std::uint32_t trial,
                                 std::uint32_t attempt, std::vector<Point> bs) {
    const geom::Torus torus(config.side);
    for (auto& p : bs) p = torus.wrap(p);

    NetworkRealization net;
    net.side = config.side;
    net.seed = config.seed;
    net.trial = trial;
    net.attempt = attempt;
    net.bs_positions = std::move(bs);
    const std::size_t n = net.size();
    net.user_positions.resize(n);
    net.desired_fades.resize(n);
    net.start_times.assign(n, 0.0);
    if (n == 0) return net;

    const geom::TorusGrid grid(torus, net.bs_positions, 1.0 / std::sqrt(config.lambda));
    const double box_limit = config.side / 4.0;
    for (std::size_t k = 0; k < n; ++k) {
        rng::Stream stream(config.seed, {trial, static_cast<std::uint32_t>(k), tag(kUser, attempt)});
        const double radius = grid.cone_cover_radius(k, box_limit);
        const bool whole_window = !std::isfinite(radius);
        const Point centre = net.bs_positions[k];
        long draws = 0;
        for (;;) {
            if (++draws > kMaxRejections) {
                std::ostringstream msg;
                msg << "rejection sampling exhausted for cell " << k << " of trial " << trial;
                throw DegenerateCellError(msg.str());
            }
            Point q;
            if (whole_window) {
                q = {stream.uniform(0.0, config.side), stream.uniform(0.0, config.side)};
            } else {
                q = torus.wrap({centre.x + stream.uniform(-radius, radius),
                                centre.y + stream.uniform(-radius, radius)});
            }
            if (grid.nearest(q) == k) {
                net.user_positions[k] = q;
                break;
            }
        }
        rng::Stream fade(config.seed, {trial, static_cast<std::uint32_t>(k), tag(kDesiredFade, attempt)});
        net.desired_fades[k] = fade.exponential();
    }
    return net;
}

std::vector<double> unit_power(std::size_t n) { return std::vector<double>(n, 1.0); }

}  // namespace

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::sync_tvi: return "sync-tvi";
        case Mode::sync_ci: return "sync-ci";
        case Mode::fixed_rate: return "fixed-rate";
        case Mode::async_rain: return "async-rain";
    }
    return "unknown";
}

void SimConfig::validate() const {
    std::ostringstream msg;
    if (!(side > 0.0) || !std::isfinite(side)) msg << "side must be > 0; ";
    if (!(lambda > 0.0) || !std::isfinite(lambda)) msg << "lambda must be > 0; ";
    if (!(K > 0.0)) msg << "K must be > 0; ";
    if (N < 1) msg << "N must be >= 1; ";
    if (!(alpha > 2.0)) msg << "alpha must be > 2; ";
    if (trials < 1) msg << "trials must be >= 1; ";
    if (lambda_s < 0.0) msg << "lambda_s must be >= 0; ";
    if (!msg.str().empty()) throw std::invalid_argument("SimConfig: " + msg.str());
    policy.validate();
}

double NetworkRealization::cross_fade(std::size_t k, std::size_t i) const {
    return rng::exponential_at(seed, trial, tag(kCrossFade, attempt), static_cast<std::uint32_t>(k),
                               static_cast<std::uint32_t>(i));
}

double NetworkRealization::link_distance(std::size_t i) const {
    return torus().distance(bs_positions.at(i), user_positions.at(i));
}

NetworkRealization sample_network(const SimConfig& config, std::uint32_t trial) {
    config.validate();
    for (std::uint32_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        rng::Stream count_stream(config.seed, {trial, 0, tag(kBsCount, attempt)});
        std::poisson_distribution<long> count(config.lambda * config.side * config.side);
        const long n = count(count_stream);
        rng::Stream pos(config.seed, {trial, 0, tag(kBsPosition, attempt)});
        std::vector<Point> bs(static_cast<std::size_t>(n));
        for (auto& p : bs) p = {pos.uniform(0.0, config.side), pos.uniform(0.0, config.side)};
        try {
            return build_network(config, trial, attempt, std::move(bs));
        } catch (const DegenerateCellError&) {
        }
    }
    throw DegenerateCellError("sample_network: every re-draw produced a degenerate cell");
}

NetworkRealization sample_network(const SimConfig& config, std::uint32_t trial,
                                  std::vector<Point> bs_positions) {
    config.validate();
    return build_network(config, trial, 0, std::move(bs_positions));
}

TrialOutcome simulate_rateless_tvi(const NetworkRealization& net, const SimConfig& config,
                                   const TviOptions& options) {
    config.validate();
    const std::size_t n = net.size();
    if (!options.forced_stop.empty() && options.forced_stop.size() != n) {
        throw std::invalid_argument("simulate_rateless_tvi: forced_stop needs one entry per BS");
    }
    const auto torus = net.torus();
    const auto signal = received_signal(net, config.alpha, unit_power(n));
    const auto initial = total_interference(net, config.alpha, unit_power(n));

    TrialOutcome out;
    out.horizon = config.N;
    out.packet_times.assign(n, 0);
    out.successes.assign(n, 0);

    // Averaged interference at step t is I0 - (1/t) sum_s R_s (t - s), where
    // R_s is the power removed at the end of step s.
    std::vector<double> removed(n, 0.0);
    std::vector<double> removed_weighted(n, 0.0);
    std::vector<double> averaged(initial);
    std::vector<std::uint8_t> active(n, 1);
    std::vector<std::size_t> stopping;

    for (int t = 1; t <= config.N; ++t) {
        stopping.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (out.packet_times[i] != 0) continue;
            averaged[i] = std::max(0.0, initial[i] - removed[i] + removed_weighted[i] / t);
            if (decodes(config.K, t, achievable_rate(signal[i], averaged[i]))) {
                out.packet_times[i] = t;
                out.successes[i] = 1;
                if (active[i]) stopping.push_back(i);
            }
        }
        if (!options.forced_stop.empty()) {
            for (std::size_t k = 0; k < n; ++k) {
                if (active[k] && options.forced_stop[k] == t && out.packet_times[k] != t) {
                    stopping.push_back(k);
                }
            }
        }
        if (options.observer) options.observer(t, averaged);

        for (std::size_t k : stopping) {
            active[k] = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == k || out.packet_times[i] != 0) continue;
                const double r = unit_interference(net, torus, config.alpha, k, i);
                removed[i] += r;
                removed_weighted[i] += r * t;
            }
        }
    }
    for (auto& T : out.packet_times) {
        if (T == 0) T = out.censored_value();
    }
    return out;
}

TrialOutcome simulate_rateless_ci(const NetworkRealization& net, const SimConfig& config) {
    config.validate();
    const std::size_t n = net.size();
    const auto signal = received_signal(net, config.alpha, unit_power(n));
    const auto interference = total_interference(net, config.alpha, unit_power(n));

    TrialOutcome out;
    out.horizon = config.N;
    out.packet_times.assign(n, out.censored_value());
    out.successes.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const double rate = achievable_rate(signal[i], interference[i]);
        if (!(rate > 0.0) || config.K / rate > config.N + 1.0) continue;
        int t = std::max(1, static_cast<int>(std::ceil(config.K / rate)));
        while (t > 1 && decodes(config.K, t - 1, rate)) --t;
        while (!decodes(config.K, t, rate)) ++t;
        if (t <= config.N) {
            out.packet_times[i] = t;
            out.successes[i] = 1;
        }
    }
    return out;
}

TrialOutcome FixedRateLinks::outcome(double theta, int horizon) const {
    TrialOutcome out;
    out.horizon = horizon;
    out.fixed_rate = true;
    out.transmitted = transmitted;
    out.successes.resize(sir.size());
    for (std::size_t i = 0; i < sir.size(); ++i) {
        out.successes[i] = transmitted[i] && sir[i] > theta;
    }
    return out;
}

FixedRateLinks simulate_fixedrate_links(const NetworkRealization& net, const SimConfig& config) {
    config.validate();
    const std::size_t n = net.size();
    const auto torus = net.torus();
    std::vector<double> power(n);
    for (std::size_t k = 0; k < n; ++k) {
        power[k] = config.policy.power(torus.distance(net.bs_positions[k], net.user_positions[k]),
                                       net.desired_fades[k], config.alpha);
    }
    const auto signal = received_signal(net, config.alpha, power);
    const auto interference = total_interference(net, config.alpha, power);

    FixedRateLinks links;
    links.sir.resize(n);
    links.transmitted.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        links.transmitted[i] = power[i] > 0.0;
        links.sir[i] = interference[i] > 0.0 ? signal[i] / interference[i]
                                             : std::numeric_limits<double>::infinity();
        if (!links.transmitted[i]) links.sir[i] = 0.0;
    }
    return links;
}

TrialOutcome simulate_fixedrate(const NetworkRealization& net, const SimConfig& config) {
    return simulate_fixedrate_links(net, config).outcome(config.analytical().theta(), config.N);
}

DurationSampler::DurationSampler(const std::function<double(double)>& ccdf, int N,
                                 int points_per_use)
    : horizon_(N) {
    if (N < 1 || points_per_use < 1) throw std::invalid_argument("DurationSampler: bad grid");
    const int count = N * points_per_use;
    grid_.resize(count + 1);
    ccdf_.resize(count + 1);
    grid_[0] = 0.0;
    ccdf_[0] = 1.0;
    for (int j = 1; j <= count; ++j) {
        grid_[j] = static_cast<double>(j) / points_per_use;
        // The last node holds P(Tbar >= N), the atom at N.
        const double t = j == count ? std::nextafter(static_cast<double>(N), 0.0) : grid_[j];
        ccdf_[j] = std::clamp(std::min(ccdf_[j - 1], ccdf(t)), 0.0, 1.0);
    }
}

DurationSampler DurationSampler::standard(const AnalyticalParams& p) {
    const double mu = rateless::mu_mean_packet_time(p);
    return DurationSampler([&](double t) { return rateless::interferer_ccdf(t, mu, p); }, p.N);
}

double DurationSampler::sample(double u) const {
    if (u <= ccdf_.back()) return horizon_;
    // First node with ccdf < u; the answer lies in the segment before it.
    const auto it = std::upper_bound(ccdf_.begin(), ccdf_.end(), u,
                                     [](double value, double node) { return value > node; });
    const std::size_t j = static_cast<std::size_t>(it - ccdf_.begin());
    const double hi = ccdf_[j - 1];
    const double lo = ccdf_[j];
    const double frac = hi > lo ? (hi - u) / (hi - lo) : 0.0;
    return grid_[j - 1] + frac * (grid_[j] - grid_[j - 1]);
}

TrialOutcome simulate_rateless_async(const SimConfig& config, std::uint32_t trial,
                                     const DurationSampler& durations, std::size_t users) {
    config.validate();
    if (durations.horizon() != config.N) {
        throw std::invalid_argument("simulate_rateless_async: duration law horizon differs from N");
    }
    const int N = config.N;
    const double half = 0.5 * config.side;
    const double mean_arrivals = config.effective_lambda_s() * config.side * config.side * 2.0 * N;

    TrialOutcome out;
    out.horizon = N;
    out.packet_times.assign(users, out.censored_value());
    out.successes.assign(users, 0);

    // Piecewise-linear accumulation of int_0^t I on the integer grid:
    // int_0^t I = t * sum(slope[<=t]) + sum(offset[<=t]).
    std::vector<double> slope(N + 2);
    std::vector<double> offset(N + 2);

    for (std::size_t j = 0; j < users; ++j) {
        const auto id = static_cast<std::uint32_t>(j);
        rng::Stream link(config.seed, {trial, id, kAsyncLink});
        const double D2 = link.exponential() / (std::numbers::pi * config.lambda);
        const double signal = link.exponential() * path_gain(D2, config.alpha);

        rng::Stream field(config.seed, {trial, id, kAsyncField});
        std::poisson_distribution<long> arrivals(mean_arrivals);
        const long m = arrivals(field);
        std::fill(slope.begin(), slope.end(), 0.0);
        std::fill(offset.begin(), offset.end(), 0.0);
        for (long k = 0; k < m; ++k) {
            const double x = field.uniform(-half, half);
            const double y = field.uniform(-half, half);
            const double start = field.uniform(-static_cast<double>(N), static_cast<double>(N));
            const double length = durations.sample(field.uniform());
            const double fade = field.exponential();
            const double d2 = x * x + y * y;
            if (d2 < D2) continue;
            const double a = std::max(0.0, start);
            const double b = std::min(start + length, static_cast<double>(N));
            if (!(b > a)) continue;
            const double w = fade * path_gain(d2, config.alpha);
            const auto ia = static_cast<std::size_t>(std::ceil(a));
            const auto ib = static_cast<std::size_t>(std::ceil(b));
            slope[ia] += w;
            offset[ia] -= w * a;
            slope[ib] -= w;
            offset[ib] += w * b;
        }

        double cum_slope = slope[0];
        double cum_offset = offset[0];
        for (int t = 1; t <= N; ++t) {
            cum_slope += slope[t];
            cum_offset += offset[t];
            const double averaged = std::max(0.0, (t * cum_slope + cum_offset) / t);
            if (decodes(config.K, t, achievable_rate(signal, averaged))) {
                out.packet_times[j] = t;
                out.successes[j] = 1;
                break;
            }
        }
    }
    return out;
}

TrialOutcome truncate(const TrialOutcome& outcome, int N) {
    if (outcome.fixed_rate) throw std::invalid_argument("truncate: fixed-rate outcome");
    if (N < 1 || N > outcome.horizon) throw std::invalid_argument("truncate: N outside 1..horizon");
    TrialOutcome out;
    out.horizon = N;
    out.packet_times = outcome.packet_times;
    out.successes.resize(out.packet_times.size());
    for (std::size_t i = 0; i < out.packet_times.size(); ++i) {
        if (out.packet_times[i] > N) out.packet_times[i] = N + 1;
        out.successes[i] = out.packet_times[i] <= N;
    }
    return out;
}

std::pair<CcdfCurve, MetricsResult> aggregate(const std::vector<TrialOutcome>& outcomes,
                                              const AnalyticalParams& p) {
    p.validate();
    if (outcomes.empty()) throw std::invalid_argument("aggregate: no outcomes");
    const bool fixed = outcomes.front().fixed_rate;
    std::size_t users = 0;
    std::size_t successes = 0;
    std::vector<std::size_t> decoded_at(p.N + 1, 0);
    for (const auto& o : outcomes) {
        if (o.fixed_rate != fixed) throw std::invalid_argument("aggregate: mixed outcome kinds");
        if (o.horizon != p.N) throw std::invalid_argument("aggregate: outcome horizon differs from N");
        users += o.users();
        for (auto s : o.successes) successes += s;
        if (!fixed) {
            for (int T : o.packet_times) {
                if (T >= 1 && T <= p.N) ++decoded_at[T];
            }
        }
    }
    if (users == 0) throw std::invalid_argument("aggregate: empty user pool");

    const double n = static_cast<double>(users);
    const double ps = successes / n;
    CcdfCurve curve;
    curve.kind = CcdfCurve::Kind::empirical;
    curve.grid.resize(p.N);
    curve.values.resize(p.N);
    std::size_t done = 0;
    for (int t = 1; t <= p.N; ++t) {
        done += decoded_at[t];
        curve.grid[t - 1] = t;
        if (fixed) {
            curve.values[t - 1] = t < p.N ? 1.0 : 0.0;
        } else {
            curve.values[t - 1] = t < p.N ? static_cast<double>(users - done) / n : 0.0;
        }
    }

    MetricsResult metrics = fixed ? fixedrate::fixed_rate_metrics(ps, p)
                                  : rateless::rate_from_ccdf(curve, p, ps);
    metrics.ci_halfwidth = 1.96 * std::sqrt(ps * (1.0 - ps) / n);
    return {std::move(curve), metrics};
}

std::vector<TrialOutcome> run_trials(const SimConfig& config) {
    config.validate();
    std::vector<TrialOutcome> outcomes(config.trials);
    if (config.mode == Mode::async_rain) {
        const auto durations = DurationSampler::standard(config.analytical());
        const auto users = static_cast<std::size_t>(
            std::llround(config.lambda * config.side * config.side));
        parallel_for(outcomes.size(), [&](std::size_t i) {
            outcomes[i] = simulate_rateless_async(config, static_cast<std::uint32_t>(i), durations, users);
        });
        return outcomes;
    }
    parallel_for(outcomes.size(), [&](std::size_t i) {
        const auto net = sample_network(config, static_cast<std::uint32_t>(i));
        switch (config.mode) {
            case Mode::sync_tvi: outcomes[i] = simulate_rateless_tvi(net, config); break;
            case Mode::sync_ci: outcomes[i] = simulate_rateless_ci(net, config); break;
            case Mode::fixed_rate: outcomes[i] = simulate_fixedrate(net, config); break;
            case Mode::async_rain: break;
        }
    });
    return outcomes;
}

}  // namespace cellgeom::sim
