#pragma once

#include <optional>
#include <string_view>

#include "cellgeom/params.hpp"
#include "cellgeom/specialfun.hpp"

namespace cellgeom::fixedrate {

/// Transmit-power rule applied by every BS to its own link. `beta` is in
/// pathloss units (D^-alpha) for the pathloss kinds and in fading-power units
/// (|h|^2) for the fading kinds. A policy that does not transmit sends nothing,
/// so its user fails and it causes no interference.
struct PowerPolicy {
    enum class Kind { constant, pathloss_fpc, pathloss_threshold, fading_threshold, fading_tci };

    Kind kind = Kind::constant;
    double tau = 0.0;
    double beta = 0.0;
    double rho = 1.0;
    std::optional<double> rho_max;

    static PowerPolicy constant(double rho = 1.0);
    /// rho D^(tau alpha) while D^-alpha >= beta. tau = 1 is pathloss TCI.
    static PowerPolicy pathloss_fpc(double tau, double beta, double rho = 1.0);
    /// beta = (rho / rho_max)^(1/tau).
    static PowerPolicy pathloss_fpc_max_power(double tau, double rho, double rho_max);
    static PowerPolicy pathloss_threshold(double beta, double rho = 1.0);
    static PowerPolicy fading_threshold(double beta, double rho = 1.0);
    /// rho / |h|^2 while |h|^2 >= beta.
    static PowerPolicy fading_tci(double beta, double rho = 1.0);
    /// beta = rho / rho_max.
    static PowerPolicy fading_tci_max_power(double rho, double rho_max);

    void validate() const;

    bool pathloss_based() const noexcept {
        return kind == Kind::pathloss_fpc || kind == Kind::pathloss_threshold;
    }
    bool fading_based() const noexcept {
        return kind == Kind::fading_threshold || kind == Kind::fading_tci;
    }

    /// Whether a BS at distance `distance` from its user with fade `fade` transmits.
    bool transmits(double distance, double fade, double alpha) const;

    /// Transmit power for that link, 0 when the gate is closed.
    double power(double distance, double fade, double alpha) const;
};

std::string_view to_string(PowerPolicy::Kind kind);

/// theta = 2^(K/N) - 1, the SIR a fixed-rate codeword of length N needs.
struct SirThreshold {
    double theta = 0.0;

    static SirThreshold from(const AnalyticalParams& p) { return {p.theta()}; }
    void validate() const;
};

/// P(A): 1 - exp(-pi lambda / beta^delta) for pathloss kinds, e^-beta for
/// fading kinds, 1 for constant power or beta = 0.
double transmission_probability(const PowerPolicy& policy, const AnalyticalParams& p);

/// Pathloss FPC, 0 < tau <= 1:
///   p_s = int_0^Z exp(-z J(z)) e^-z dz,  Z = pi lambda / beta^delta,
///   J(z) = theta^delta int_0^theta delta x^-delta
///          int_0^(Z/z) z e^(-z y) / (x + y^(-tau/delta)) dy dx.
/// Evaluated as nested adaptive quadratures (outer in e^-z). For beta = 0 the
/// infinite limits are cut where e^-z < 1e-12.
double ps_fpc(const SirThreshold& theta, const PowerPolicy& policy, const AnalyticalParams& p);

/// Pathloss channel thresholding:
///   p_s = (1 - exp(-pi lambda (1 + H Ft) / beta^delta)) / (1 + H Ft),
///   Ft = 1 - exp(-pi lambda / beta^delta).
double ps_pathloss_threshold(const SirThreshold& theta, const PowerPolicy& policy,
                             const AnalyticalParams& p);

/// Fading channel thresholding:
///   p_s ~ F(theta) + F(theta/beta) (e^-beta - F(theta)),
///   F(theta) = e^beta / (e^beta - 1 + 2F1([1,-delta]; 1-delta; -theta)),
/// with F(theta/beta) = 0 at beta = 0.
double ps_fading_threshold(const SirThreshold& theta, const PowerPolicy& policy,
                           const AnalyticalParams& p);

/// Fading TCI:
///   p_s ~ e^-beta / (1 + G),  G = theta^delta int_0^theta delta y^-delta e^y E1(beta + y) dy.
double ps_fading_tci(const SirThreshold& theta, const PowerPolicy& policy,
                     const AnalyticalParams& p);

/// Dispatches on policy.kind; constant power gives 1/2F1 coverage.
double ps_fixed_rate(const SirThreshold& theta, const PowerPolicy& policy,
                     const AnalyticalParams& p);

/// rate = (K/N) p_s.
MetricsResult fixed_rate_metrics(double ps, const AnalyticalParams& p);

}  // namespace cellgeom::fixedrate
