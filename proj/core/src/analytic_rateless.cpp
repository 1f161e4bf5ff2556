#include "cellgeom/analytic_rateless.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cellgeom::rateless {

using specialfun::hyp2f1_coverage;
using specialfun::integrate_adaptive;
using specialfun::kNestedQuadrature;
using specialfun::QuadratureSpec;

namespace {

void check_time(double t, const char* who) {
    if (!(t > 0.0)) {
        std::ostringstream msg;
        msg << who << ": time must be > 0 (got " << t << ")";
        throw std::domain_error(msg.str());
    }
}

void check_probability(double ps, const char* who) {
    if (!(ps >= 0.0 && ps <= 1.0)) {
        std::ostringstream msg;
        msg << who << ": probability must lie in [0, 1] (got " << ps << ")";
        throw std::domain_error(msg.str());
    }
}

double outage_from_coverage(double theta, double delta) {
    const double cov = hyp2f1_coverage(theta, delta);
    return std::isinf(cov) ? 1.0 : 1.0 - 1.0 / cov;
}

// Integrates over [a, b] splitting at every breakpoint that falls inside.
double integrate_split(const CcdfFn& f, double a, double b, const std::vector<double>& cuts,
                       const QuadratureSpec& spec) {
    std::vector<double> edges{a};
    for (double c : cuts) {
        if (c > a && c < b) edges.push_back(c);
    }
    std::sort(edges.begin() + 1, edges.end());
    edges.push_back(b);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (edges[i + 1] > edges[i]) total += integrate_adaptive(f, edges[i], edges[i + 1], spec);
    }
    return total;
}

// The packet-time CCDFs fall from ~1 to their tail around t ~ K; marking a
// few points there keeps the first bisections where the action is.
std::vector<double> transition_points(const AnalyticalParams& p) {
    return {p.K / 8.0, p.K / 2.0, p.K, 2.0 * p.K};
}

MetricsResult finish_rate(double mean_time, const AnalyticalParams& p, double ps) {
    MetricsResult out;
    out.ps = ps;
    if (mean_time < 1.0) {
        mean_time = 1.0;
        out.integral_guarded = true;
    }
    out.rate = p.K * ps / mean_time;
    return out;
}

}  // namespace

double ccdf_const_interference(double t, const AnalyticalParams& p) {
    check_time(t, "ccdf_const_interference");
    if (t >= p.N) return 0.0;
    return outage_from_coverage(p.theta_at(t), p.delta());
}

double ps_rateless_ci(const AnalyticalParams& p) {
    p.validate();
    return 1.0 / hyp2f1_coverage(p.theta(), p.delta());
}

MetricsResult rate_from_ccdf(const CcdfCurve& curve, const AnalyticalParams& p, double ps) {
    check_probability(ps, "rate_from_ccdf");
    curve.validate();
    double area = 0.0;
    double prev_t = 0.0;
    double prev_v = 1.0;
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        area += 0.5 * (prev_v + curve.values[i]) * (curve.grid[i] - prev_t);
        prev_t = curve.grid[i];
        prev_v = curve.values[i];
    }
    return finish_rate(area, p, ps);
}

MetricsResult rate_from_ccdf(const CcdfFn& ccdf, const AnalyticalParams& p, double ps,
                             const QuadratureSpec& spec) {
    check_probability(ps, "rate_from_ccdf");
    const double area = integrate_split(ccdf, 0.0, p.N, transition_points(p), spec);
    return finish_rate(area, p, ps);
}

double mu_mean_packet_time(const AnalyticalParams& p) {
    p.validate();
    const double delta = p.delta();
    auto integrand = [&](double t) {
        return 1.0 - specialfun::hyp2f1_mu_kernel(p.theta_at(t), delta);
    };
    return integrate_split(integrand, 0.0, p.N, transition_points(p), QuadratureSpec{});
}

double interferer_ccdf(double t, double mu, const AnalyticalParams& p) {
    check_time(t, "interferer_ccdf");
    if (!(mu > 0.0 && mu <= p.N)) {
        std::ostringstream msg;
        msg << "interferer_ccdf: mu must lie in (0, N] (got " << mu << ")";
        throw std::domain_error(msg.str());
    }
    if (t >= p.N) return 0.0;
    const double theta = p.theta_at(t);
    const double scale = std::min(1.0, mu / t);
    return outage_from_coverage(std::isinf(theta) ? theta : theta * scale, p.delta());
}

ThinningModel::ThinningModel(int horizon, double mu, CcdfFn ccdf, ThinningMode mode,
                             std::vector<double> kinks)
    : horizon_(horizon), mu_(mu), ccdf_(std::move(ccdf)), mode_(mode), kinks_(std::move(kinks)) {
    if (!(mu_ > 0.0 && mu_ <= horizon_)) {
        std::ostringstream msg;
        msg << "ThinningModel: mu must lie in (0, N] (got " << mu_ << ")";
        throw std::invalid_argument(msg.str());
    }
    if (!ccdf_) throw std::invalid_argument("ThinningModel: empty interferer CCDF");
    mean_time_ = integrate_ccdf(0.0, horizon_, QuadratureSpec{});
}

ThinningModel ThinningModel::standard(const AnalyticalParams& p, ThinningMode mode) {
    const double mu = mu_mean_packet_time(p);
    std::vector<double> kinks = transition_points(p);
    kinks.push_back(mu);
    return ThinningModel(p.N, mu, [p, mu](double t) { return rateless::interferer_ccdf(t, mu, p); },
                         mode, std::move(kinks));
}

ThinningModel ThinningModel::custom(const AnalyticalParams& p, double mu, CcdfFn ccdf,
                                    ThinningMode mode, std::vector<double> kinks) {
    p.validate();
    return ThinningModel(p.N, mu, std::move(ccdf), mode, std::move(kinks));
}

double ThinningModel::interferer_ccdf(double t) const {
    check_time(t, "ThinningModel::interferer_ccdf");
    if (t >= horizon_) return 0.0;
    return ccdf_(t);
}

double ThinningModel::integrate_ccdf(double a, double b, const QuadratureSpec& spec) const {
    b = std::min<double>(b, horizon_);
    if (!(b > a)) return 0.0;
    return integrate_split([this](double v) { return interferer_ccdf(v); }, a, b, kinks_, spec);
}

double ThinningModel::omega(double t) const {
    check_time(t, "ThinningModel::omega");
    if (mode_ == ThinningMode::asynchronous) return mean_time_ / horizon_;
    if (t > horizon_) throw std::domain_error("ThinningModel::omega: t must be <= N");
    if (t == horizon_) return mean_time_ / horizon_;
    return integrate_ccdf(0.0, t, kNestedQuadrature) / t;
}

double omega_sync(double t, const ThinningModel& model, const AnalyticalParams& p) {
    check_time(t, "omega_sync");
    if (t > p.N) throw std::domain_error("omega_sync: t must be <= N");
    if (t == p.N) return model.mean_interferer_time() / p.N;
    return model.integrate_ccdf(0.0, t, kNestedQuadrature) / t;
}

double ccdf_thinning_bound_sync(double t, const ThinningModel& model, const AnalyticalParams& p) {
    check_time(t, "ccdf_thinning_bound_sync");
    if (t >= p.N) return 0.0;
    const double theta = p.theta_at(t);
    if (std::isinf(theta)) return 1.0;
    return outage_from_coverage(omega_sync(t, model, p) * theta, p.delta());
}

double ccdf_thinning_bound_sync(double t, const AnalyticalParams& p) {
    return ccdf_thinning_bound_sync(t, ThinningModel::standard(p), p);
}

MetricsResult ps_rate_thinning_sync(const ThinningModel& model, const AnalyticalParams& p) {
    const double omega_n = model.mean_interferer_time() / p.N;
    const double ps = 1.0 / hyp2f1_coverage(p.theta() * omega_n, p.delta());
    return rate_from_ccdf([&](double t) { return ccdf_thinning_bound_sync(t, model, p); }, p, ps,
                          kNestedQuadrature);
}

MetricsResult ps_rate_thinning_sync(const AnalyticalParams& p) {
    return ps_rate_thinning_sync(ThinningModel::standard(p), p);
}

double omega_async(const AnalyticalParams& p, double mu) {
    std::vector<double> kinks = transition_points(p);
    kinks.push_back(mu);
    const auto model = ThinningModel::custom(
        p, mu, [p, mu](double t) { return rateless::interferer_ccdf(t, mu, p); },
        ThinningMode::asynchronous, std::move(kinks));
    return omega_async(model);
}

double omega_async(const ThinningModel& model) {
    return model.mean_interferer_time() / model.horizon();
}

double ccdf_thinning_bound_async(double t, const ThinningModel& model, const AnalyticalParams& p) {
    check_time(t, "ccdf_thinning_bound_async");
    if (t >= p.N) return 0.0;
    const double theta = p.theta_at(t);
    if (std::isinf(theta)) return 1.0;
    return outage_from_coverage(omega_async(model) * theta, p.delta());
}

double ccdf_thinning_bound_async(double t, const AnalyticalParams& p) {
    return ccdf_thinning_bound_async(t, ThinningModel::standard(p, ThinningMode::asynchronous), p);
}

MetricsResult ps_rate_thinning_async(const ThinningModel& model, const AnalyticalParams& p) {
    const double ps = 1.0 / hyp2f1_coverage(p.theta() * omega_async(model), p.delta());
    return rate_from_ccdf([&](double t) { return ccdf_thinning_bound_async(t, model, p); }, p, ps);
}

double eta_moment_async(double epsilon, double t, const ThinningModel& model,
                        const AnalyticalParams& p) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        throw std::domain_error("eta_moment_async: epsilon must lie in (0, 1]");
    }
    check_time(t, "eta_moment_async");
    if (t > p.N) throw std::domain_error("eta_moment_async: t must be <= N");

    const double n = p.N;
    const double ratio = (1.0 - epsilon) / (1.0 + epsilon);
    const double tail_at_t = t < n ? model.interferer_ccdf(t) : 0.0;
    const double t_eps = std::pow(t, epsilon);
    auto S = [&](double v) { return model.interferer_ccdf(v); };

    // int_0^t eps v^(eps-1) S(v) dv with v = t u^(1/eps).
    std::vector<double> cuts;
    for (double k : model.kinks()) {
        if (k > 0.0 && k < t) cuts.push_back(std::pow(k / t, epsilon));
    }
    const double first_moment_part =
        t_eps * integrate_split([&](double u) { return u > 0.0 ? S(t * std::pow(u, 1.0 / epsilon)) : 1.0; },
                                0.0, 1.0, cuts, kNestedQuadrature);
    const double power_moment_part =
        (1.0 + epsilon) *
        integrate_split([&](double v) { return std::pow(v, epsilon) * S(v); }, 0.0, t, model.kinks(),
                        kNestedQuadrature);

    // Stieltjes terms; g(0) S(0) vanishes for g = v^eps, v^(1+eps).
    const double low_eps = -t_eps * tail_at_t + first_moment_part;            // int_(0,t] v^eps dF
    const double low_eps1 = -t_eps * t * tail_at_t + power_moment_part;       // int_(0,t] v^(1+eps) dF
    const double high_mean = t * tail_at_t + model.integrate_ccdf(t, n, kNestedQuadrature);  // int_(t,N] v dF
    const double high_mass = tail_at_t;                                       // int_(t,N] dF

    return (t * low_eps + ratio * low_eps1 + t_eps * high_mean + ratio * t_eps * t * high_mass) /
           (n * t_eps);
}

CcdfCurve tabulate(const CcdfFn& ccdf, int N, CcdfCurve::Kind kind) {
    CcdfCurve curve;
    curve.kind = kind;
    curve.grid.reserve(N);
    curve.values.reserve(N);
    for (int t = 1; t <= N; ++t) {
        curve.grid.push_back(t);
        curve.values.push_back(ccdf(t));
    }
    return curve;
}

}  // namespace cellgeom::rateless
