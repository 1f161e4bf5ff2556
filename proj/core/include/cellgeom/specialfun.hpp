#pragma once

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace cellgeom::specialfun {

/// Tolerance contract for adaptive quadrature. A result is accepted once the
/// summed error estimate drops below max(abs_tol, rel_tol * |result|).
struct QuadratureSpec {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    int max_subdivisions = 2000;

    void validate() const;
};

/// Tolerance used for the inner levels of nested integrals.
inline constexpr QuadratureSpec kNestedQuadrature{1e-7, 1e-7, 2000};

/// Thrown when adaptive quadrature exhausts its subdivision budget. Carries
/// the best estimate found so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double partial, double error_estimate)
        : std::runtime_error(what), partial_(partial), error_estimate_(error_estimate) {}

    double partial() const noexcept { return partial_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double partial_;
    double error_estimate_;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b].
///
/// The rule never samples the interval endpoints, so integrable endpoint
/// singularities of type x^-p (p < 1) are handled by repeated bisection of
/// the worst interval. Callers with a known x^-p singularity should prefer to
/// remove it with a power substitution first; the hypergeometric kernels
/// below do exactly that.
double integrate_adaptive(const Integrand& f, double a, double b,
                          const QuadratureSpec& spec = {});

/// Same as integrate_adaptive, with interior breakpoints where the integrand
/// has kinks. Breakpoints outside (a, b) are ignored.
double integrate_adaptive(const Integrand& f, double a, double b,
                          std::initializer_list<double> breakpoints,
                          const QuadratureSpec& spec = {});

/// 2F1([1, b]; 1 + b; -z) for 0 < b < 1 and z >= 0, the one family every
/// other hypergeometric in this library reduces to. Evaluated from its Euler
/// integral after t = u^(1/b), which removes the t^(b-1) endpoint singularity;
/// for z > 1 the z -> 1/z connection formula maps back onto z < 1.
double hyp2f1_unit(double b, double z);

/// 2F1([1, -delta]; 1 - delta; -theta) >= 1.
double hyp2f1_coverage(double theta, double delta);

/// 2F1([1, delta]; 1 + delta; -theta), in (0, 1] and decreasing in theta.
double hyp2f1_mu_kernel(double theta, double delta);

/// H(theta) = theta * delta / (1 - delta) * 2F1([1, 1 - delta]; 2 - delta; -theta).
/// hyp2f1_coverage(theta, delta) == 1 + h_interference(theta, delta).
double h_interference(double theta, double delta);

/// Exponential integral E1(x) for x > 0.
double exp_integral_e1(double x);

/// e^x * E1(x) for x > 0; finite for arbitrarily large x.
double exp_integral_e1_scaled(double x);

}  // namespace cellgeom::specialfun
