#pragma once

#include <functional>
#include <vector>

#include "cellgeom/params.hpp"
#include "cellgeom/specialfun.hpp"

/// Rateless coding with constant transmit power: packet-time CCDFs under
/// constant interference and under the independent thinning model, and the
/// success probability / rate they imply.
namespace cellgeom::rateless {

using CcdfFn = std::function<double(double)>;

/// P_c(t) = 1 - 1/2F1([1,-delta]; 1-delta; -theta_t) for 0 < t < N, and 0 for
/// t >= N (the packet time is truncated at N).
double ccdf_const_interference(double t, const AnalyticalParams& p);

/// p_s(N) = 1/2F1([1,-delta]; 1-delta; -theta).
double ps_rateless_ci(const AnalyticalParams& p);

/// R_N = K p_s / E[T] with E[T] the trapezoid integral of a tabulated CCDF.
/// The curve is anchored at P(T > 0) = 1, so an integer-valued packet time
/// tabulated on 1..N integrates to E[T] - 1/2, the continuous-time mean.
/// E[T] is clamped to at least one channel use (integral_guarded is set).
MetricsResult rate_from_ccdf(const CcdfCurve& curve, const AnalyticalParams& p, double ps);

/// Same, with E[T] = int_0^N ccdf(t) dt by adaptive quadrature.
MetricsResult rate_from_ccdf(const CcdfFn& ccdf, const AnalyticalParams& p, double ps,
                             const specialfun::QuadratureSpec& spec = {});

/// mu = int_0^N (1 - 2F1([1,delta]; 1+delta; -theta_t)) dt.
double mu_mean_packet_time(const AnalyticalParams& p);

/// Interferer packet-time CCDF P(Tbar > t) = 1 - 1/2F1(...; -theta_t min(1, mu/t)),
/// truncated to 0 for t >= N; the remaining mass sits in an atom at N.
double interferer_ccdf(double t, double mu, const AnalyticalParams& p);

enum class ThinningMode { synchronous, asynchronous };

/// Independent thinning model: interferer packet times are i.i.d. with CCDF S
/// on (0, N) and an atom at N. Immutable once built; E[Tbar] is computed at
/// construction.
class ThinningModel {
public:
    /// S from interferer_ccdf with mu = mu_mean_packet_time(p).
    static ThinningModel standard(const AnalyticalParams& p,
                                  ThinningMode mode = ThinningMode::synchronous);

    /// Arbitrary interferer law. `ccdf` is only queried on (0, N); `kinks`
    /// lists points where it is not smooth.
    static ThinningModel custom(const AnalyticalParams& p, double mu, CcdfFn ccdf,
                                ThinningMode mode = ThinningMode::synchronous,
                                std::vector<double> kinks = {});

    double mu() const noexcept { return mu_; }
    ThinningMode mode() const noexcept { return mode_; }
    int horizon() const noexcept { return horizon_; }

    /// P(Tbar > t); 0 for t >= N.
    double interferer_ccdf(double t) const;

    /// E[Tbar] = int_0^N P(Tbar > v) dv.
    double mean_interferer_time() const noexcept { return mean_time_; }

    /// int_a^b P(Tbar > v) dv with the model's kinks as breakpoints.
    double integrate_ccdf(double a, double b, const specialfun::QuadratureSpec& spec) const;

    /// omega(t) in synchronous mode, omega_N in asynchronous mode.
    double omega(double t) const;

    const std::vector<double>& kinks() const noexcept { return kinks_; }

private:
    ThinningModel(int horizon, double mu, CcdfFn ccdf, ThinningMode mode, std::vector<double> kinks);

    int horizon_;
    double mu_;
    CcdfFn ccdf_;
    ThinningMode mode_;
    std::vector<double> kinks_;
    double mean_time_ = 0.0;
};

/// omega(t) = int_0^1 P(Tbar > x t) dx, evaluated as (1/t) int_0^t P(Tbar > v) dv.
/// Defined for 0 < t <= N; omega(N) = E[Tbar]/N.
double omega_sync(double t, const ThinningModel& model, const AnalyticalParams& p);

/// P_s(t) = 1 - 1/2F1(...; -omega(t) theta_t), 0 for t >= N.
double ccdf_thinning_bound_sync(double t, const ThinningModel& model, const AnalyticalParams& p);
double ccdf_thinning_bound_sync(double t, const AnalyticalParams& p);

/// p_s >= 1/2F1(...; -theta E[Tbar]/N), and the rate lower bound from the
/// P_s(t) curve.
MetricsResult ps_rate_thinning_sync(const ThinningModel& model, const AnalyticalParams& p);
MetricsResult ps_rate_thinning_sync(const AnalyticalParams& p);

/// omega_N = (1/N) int_0^N P(Tbar > t) dt for the standard interferer law with
/// the given mu.
double omega_async(const AnalyticalParams& p, double mu);
double omega_async(const ThinningModel& model);

/// P_a(t) = 1 - 1/2F1(...; -omega_N theta_t), 0 for t >= N.
double ccdf_thinning_bound_async(double t, const ThinningModel& model, const AnalyticalParams& p);
double ccdf_thinning_bound_async(double t, const AnalyticalParams& p);

/// Success probability and rate lower bound under the Poisson-rain model.
MetricsResult ps_rate_thinning_async(const ThinningModel& model, const AnalyticalParams& p);

/// E[etabar(t)^eps] under Poisson rain for 0 < eps <= 1 and 0 < t <= N:
///
///   1/(N t^eps) [ t int_(0,t] s^eps dF + (1-eps)/(1+eps) int_(0,t] s^(1+eps) dF
///               + t^eps int_(t,N] s dF + (1-eps)/(1+eps) t^(1+eps) int_(t,N] dF ]
///
/// Each Stieltjes integral is integrated by parts against the CCDF, which
/// accounts for the atom at N through P(Tbar > N) = 0.
double eta_moment_async(double epsilon, double t, const ThinningModel& model,
                        const AnalyticalParams& p);

/// CCDF sampled on the integer grid 1..N.
CcdfCurve tabulate(const CcdfFn& ccdf, int N, CcdfCurve::Kind kind);

}  // namespace cellgeom::rateless
