#include "cellgeom/analytic_fixedrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cellgeom::fixedrate {

using specialfun::hyp2f1_coverage;
using specialfun::integrate_adaptive;
using specialfun::kNestedQuadrature;

namespace {

// e^-z < 1e-12 beyond this point.
const double kTailCut = -std::log(1e-12);

void require_kind(const PowerPolicy& policy, PowerPolicy::Kind kind, const char* who) {
    policy.validate();
    if (policy.kind != kind) {
        std::ostringstream msg;
        msg << who << ": expected a " << to_string(kind) << " policy, got " << to_string(policy.kind);
        throw std::invalid_argument(msg.str());
    }
}

// pi lambda / beta^delta, +inf at beta = 0.
double cell_reach(double beta, const AnalyticalParams& p) {
    if (beta == 0.0) return std::numeric_limits<double>::infinity();
    return std::numbers::pi * p.lambda / std::pow(beta, p.delta());
}

}  // namespace

PowerPolicy PowerPolicy::constant(double rho) {
    PowerPolicy out{Kind::constant, 0.0, 0.0, rho, std::nullopt};
    out.validate();
    return out;
}

PowerPolicy PowerPolicy::pathloss_fpc(double tau, double beta, double rho) {
    PowerPolicy out{Kind::pathloss_fpc, tau, beta, rho, std::nullopt};
    out.validate();
    return out;
}

PowerPolicy PowerPolicy::pathloss_fpc_max_power(double tau, double rho, double rho_max) {
    if (!(tau > 0.0)) throw std::invalid_argument("pathloss_fpc_max_power: tau must be > 0");
    if (!(rho_max > 0.0)) throw std::invalid_argument("pathloss_fpc_max_power: rho_max must be > 0");
    PowerPolicy out{Kind::pathloss_fpc, tau, std::pow(rho / rho_max, 1.0 / tau), rho, rho_max};
    out.validate();
    return out;
}

PowerPolicy PowerPolicy::pathloss_threshold(double beta, double rho) {
    PowerPolicy out{Kind::pathloss_threshold, 0.0, beta, rho, std::nullopt};
    out.validate();
    return out;
}

PowerPolicy PowerPolicy::fading_threshold(double beta, double rho) {
    PowerPolicy out{Kind::fading_threshold, 0.0, beta, rho, std::nullopt};
    out.validate();
    return out;
}

PowerPolicy PowerPolicy::fading_tci(double beta, double rho) {
    PowerPolicy out{Kind::fading_tci, 0.0, beta, rho, std::nullopt};
    out.validate();
    return out;
}

PowerPolicy PowerPolicy::fading_tci_max_power(double rho, double rho_max) {
    if (!(rho_max > 0.0)) throw std::invalid_argument("fading_tci_max_power: rho_max must be > 0");
    PowerPolicy out{Kind::fading_tci, 0.0, rho / rho_max, rho, rho_max};
    out.validate();
    return out;
}

void PowerPolicy::validate() const {
    std::ostringstream msg;
    if (!(tau >= 0.0 && tau <= 1.0)) msg << "tau must lie in [0, 1]; ";
    if (!(beta >= 0.0) || !std::isfinite(beta)) msg << "beta must be finite and >= 0; ";
    if (!(rho > 0.0) || !std::isfinite(rho)) msg << "rho must be > 0; ";
    if (rho_max && !(*rho_max > 0.0)) msg << "rho_max must be > 0; ";
    if (kind != Kind::pathloss_fpc && tau != 0.0) msg << "tau only applies to pathloss FPC; ";
    if (!msg.str().empty()) throw std::invalid_argument("PowerPolicy: " + msg.str());
}

bool PowerPolicy::transmits(double distance, double fade, double alpha) const {
    switch (kind) {
        case Kind::constant: return true;
        case Kind::pathloss_fpc:
        case Kind::pathloss_threshold: return std::pow(distance, -alpha) >= beta;
        case Kind::fading_threshold:
        case Kind::fading_tci: return fade >= beta;
    }
    return false;
}

double PowerPolicy::power(double distance, double fade, double alpha) const {
    if (!transmits(distance, fade, alpha)) return 0.0;
    switch (kind) {
        case Kind::constant:
        case Kind::pathloss_threshold:
        case Kind::fading_threshold: return rho;
        case Kind::pathloss_fpc: return rho * std::pow(distance, tau * alpha);
        case Kind::fading_tci: return rho / fade;
    }
    return 0.0;
}

std::string_view to_string(PowerPolicy::Kind kind) {
    switch (kind) {
        case PowerPolicy::Kind::constant: return "constant";
        case PowerPolicy::Kind::pathloss_fpc: return "pathloss-fpc";
        case PowerPolicy::Kind::pathloss_threshold: return "pathloss-threshold";
        case PowerPolicy::Kind::fading_threshold: return "fading-threshold";
        case PowerPolicy::Kind::fading_tci: return "fading-tci";
    }
    return "unknown";
}

void SirThreshold::validate() const {
    if (!(theta >= 0.0) || std::isnan(theta)) {
        throw std::domain_error("SirThreshold: theta must be >= 0");
    }
}

double transmission_probability(const PowerPolicy& policy, const AnalyticalParams& p) {
    policy.validate();
    p.validate();
    if (policy.beta == 0.0 || policy.kind == PowerPolicy::Kind::constant) return 1.0;
    if (policy.pathloss_based()) return -std::expm1(-cell_reach(policy.beta, p));
    return std::exp(-policy.beta);
}

double ps_fpc(const SirThreshold& theta, const PowerPolicy& policy, const AnalyticalParams& p) {
    require_kind(policy, PowerPolicy::Kind::pathloss_fpc, "ps_fpc");
    theta.validate();
    p.validate();
    if (!(policy.tau > 0.0)) {
        throw std::domain_error("ps_fpc: tau must be > 0 (use ps_pathloss_threshold for tau = 0)");
    }
    const double th = theta.theta;
    const double delta = p.delta();
    const double reach = std::min(cell_reach(policy.beta, p), kTailCut);
    if (th == 0.0) return -std::expm1(-reach);
    const double exponent = policy.tau / delta;
    const double stretch = 1.0 / (1.0 - delta);

    // With w = z y the innermost integral becomes
    //   h(x; z) = int_0^reach e^-w / (x + (z/w)^(tau/delta)) dw,
    // and x = theta u^(1/(1-delta)) turns the x-integral into
    //   J(z) = delta theta / (1-delta) int_0^1 h(x(u); z) du.
    auto J = [&](double z) {
        auto middle = [&](double u) {
            const double x = th * std::pow(u, stretch);
            auto inner = [&](double w) {
                if (w <= 0.0) return 0.0;
                return std::exp(-w) / (x + std::pow(z / w, exponent));
            };
            return integrate_adaptive(inner, 0.0, reach, kNestedQuadrature);
        };
        return delta * th / (1.0 - delta) * integrate_adaptive(middle, 0.0, 1.0, kNestedQuadrature);
    };

    // Outer integral in t = e^-z over [e^-reach, 1].
    auto outer = [&](double t) {
        const double z = -std::log(t);
        if (z <= 0.0) return 1.0;
        return std::exp(-z * J(z));
    };
    return integrate_adaptive(outer, std::exp(-reach), 1.0, kNestedQuadrature);
}

double ps_pathloss_threshold(const SirThreshold& theta, const PowerPolicy& policy,
                             const AnalyticalParams& p) {
    require_kind(policy, PowerPolicy::Kind::pathloss_threshold, "ps_pathloss_threshold");
    theta.validate();
    p.validate();
    const double reach = cell_reach(policy.beta, p);
    const double active = -std::expm1(-reach);
    const double load = 1.0 + specialfun::h_interference(theta.theta, p.delta()) * active;
    if (std::isinf(load)) return 0.0;
    return -std::expm1(-reach * load) / load;
}

double ps_fading_threshold(const SirThreshold& theta, const PowerPolicy& policy,
                           const AnalyticalParams& p) {
    require_kind(policy, PowerPolicy::Kind::fading_threshold, "ps_fading_threshold");
    theta.validate();
    p.validate();
    const double beta = policy.beta;
    const double delta = p.delta();
    auto F = [&](double th) {
        const double cov = hyp2f1_coverage(th, delta);
        if (std::isinf(cov)) return 0.0;
        return std::exp(beta) / (std::expm1(beta) + cov);
    };
    const double head = F(theta.theta);
    const double gate = beta == 0.0 ? 0.0 : F(theta.theta / beta);
    return head + gate * (std::exp(-beta) - head);
}

double ps_fading_tci(const SirThreshold& theta, const PowerPolicy& policy,
                     const AnalyticalParams& p) {
    require_kind(policy, PowerPolicy::Kind::fading_tci, "ps_fading_tci");
    theta.validate();
    p.validate();
    const double beta = policy.beta;
    const double th = theta.theta;
    const double truncation = std::exp(-beta);
    if (th == 0.0) return truncation;
    const double delta = p.delta();
    const double stretch = 1.0 / (1.0 - delta);
    // e^y E1(beta + y) = e^-beta * [e^(beta+y) E1(beta+y)].
    auto g = [&](double u) {
        const double y = th * std::pow(u, stretch);
        if (beta + y <= 0.0) return 0.0;
        return truncation * specialfun::exp_integral_e1_scaled(beta + y);
    };
    const double G = delta * th / (1.0 - delta) * integrate_adaptive(g, 0.0, 1.0);
    return truncation / (1.0 + G);
}

double ps_fixed_rate(const SirThreshold& theta, const PowerPolicy& policy,
                     const AnalyticalParams& p) {
    switch (policy.kind) {
        case PowerPolicy::Kind::constant:
            theta.validate();
            return 1.0 / hyp2f1_coverage(theta.theta, p.delta());
        case PowerPolicy::Kind::pathloss_fpc: return ps_fpc(theta, policy, p);
        case PowerPolicy::Kind::pathloss_threshold: return ps_pathloss_threshold(theta, policy, p);
        case PowerPolicy::Kind::fading_threshold: return ps_fading_threshold(theta, policy, p);
        case PowerPolicy::Kind::fading_tci: return ps_fading_tci(theta, policy, p);
    }
    throw std::invalid_argument("ps_fixed_rate: unknown policy kind");
}

MetricsResult fixed_rate_metrics(double ps, const AnalyticalParams& p) {
    if (!(ps >= 0.0 && ps <= 1.0)) {
        throw std::domain_error("fixed_rate_metrics: ps must lie in [0, 1]");
    }
    p.validate();
    MetricsResult out;
    out.ps = ps;
    out.rate = p.K / p.N * ps;
    return out;
}

}  // namespace cellgeom::fixedrate
