#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace cellgeom {

/// Scalar parameters shared by every analytic expression.
struct AnalyticalParams {
    double lambda = 1.0;  ///< BS density per unit area
    double alpha = 3.0;   ///< path-loss exponent, > 2
    double K = 75.0;      ///< information bits per packet
    int N = 100;          ///< delay constraint in channel uses

    /// Validating constructor; throws std::invalid_argument.
    static AnalyticalParams make(double lambda, double alpha, double K, int N);

    void validate() const;

    double delta() const noexcept { return 2.0 / alpha; }

    /// SIR threshold for finishing K bits in t channel uses, 2^(K/t) - 1.
    /// +inf once 2^(K/t) overflows.
    double theta_at(double t) const;

    /// Fixed-rate threshold, theta_at(N).
    double theta() const { return theta_at(N); }
};

/// Tabulated CCDF t -> P(T > t).
struct CcdfCurve {
    enum class Kind { exact, upper_bound, empirical };

    std::vector<double> grid;    ///< ascending times in (0, N]
    std::vector<double> values;  ///< P(T > t) at each grid point
    Kind kind = Kind::exact;

    /// Checks sizes, ordering, [0,1] range and monotonicity.
    void validate() const;
};

std::string_view to_string(CcdfCurve::Kind kind);

struct MetricsResult {
    double ps = 0.0;    ///< success probability
    double rate = 0.0;  ///< bits per channel use
    std::optional<double> ci_halfwidth;
    /// Set when the mean packet time was clamped to one channel use.
    bool integral_guarded = false;
};

}  // namespace cellgeom
