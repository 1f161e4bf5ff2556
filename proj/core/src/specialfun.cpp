#include "cellgeom/specialfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace cellgeom::specialfun {

namespace {

// The Euler integrand is smooth after the power substitution, so the kernel
// can afford near machine-precision targets at negligible cost.
constexpr QuadratureSpec kKernelQuadrature{1e-15, 1e-13, 200};

void check_delta(double theta, double delta, const char* who) {
    if (!(delta > 0.0 && delta < 1.0) || !(theta >= 0.0)) {
        std::ostringstream msg;
        msg << who << ": requires theta >= 0 and 0 < delta < 1 (got theta=" << theta
            << ", delta=" << delta << ")";
        throw std::domain_error(msg.str());
    }
}

// b * int_0^1 t^(b-1) / (1 + z t) dt with t = u^(1/b), valid for 0 <= z <= 1.
double unit_kernel_small(double b, double z) {
    const double power = 1.0 / b;
    return integrate_adaptive([=](double u) { return 1.0 / (1.0 + z * std::pow(u, power)); },
                              0.0, 1.0, kKernelQuadrature);
}

}  // namespace

double hyp2f1_unit(double b, double z) {
    if (!(b > 0.0 && b < 1.0) || !(z >= 0.0)) {
        std::ostringstream msg;
        msg << "hyp2f1_unit: requires 0 < b < 1 and z >= 0 (got b=" << b << ", z=" << z << ")";
        throw std::domain_error(msg.str());
    }
    if (z == 0.0) return 1.0;
    if (std::isinf(z)) return 0.0;
    if (z <= 1.0) return unit_kernel_small(b, z);
    // Connection formula: split int_0^z s^(b-1)/(1+s) ds into the full Beta
    // integral minus the tail, and map the tail back onto argument 1/z.
    const double reflected = unit_kernel_small(1.0 - b, 1.0 / z);
    return b * std::numbers::pi / std::sin(std::numbers::pi * b) * std::pow(z, -b) -
           b / (1.0 - b) / z * reflected;
}

double h_interference(double theta, double delta) {
    check_delta(theta, delta, "h_interference");
    if (theta == 0.0) return 0.0;
    if (std::isinf(theta)) return std::numeric_limits<double>::infinity();
    return theta * delta / (1.0 - delta) * hyp2f1_unit(1.0 - delta, theta);
}

double hyp2f1_coverage(double theta, double delta) {
    check_delta(theta, delta, "hyp2f1_coverage");
    return 1.0 + h_interference(theta, delta);
}

double hyp2f1_mu_kernel(double theta, double delta) {
    check_delta(theta, delta, "hyp2f1_mu_kernel");
    return hyp2f1_unit(delta, theta);
}

namespace {

void check_e1_domain(double x) {
    if (!(x > 0.0)) {
        std::ostringstream msg;
        msg << "exp_integral_e1: requires x > 0 (got " << x << ")";
        throw std::domain_error(msg.str());
    }
}

// -gamma - ln x - sum_{n>=1} (-x)^n / (n n!), used for x <= 1.
double e1_series(double x) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double term = 1.0;
    double sum = 0.0;
    for (int n = 1; n < 200; ++n) {
        term *= -x / n;
        const double contrib = term / n;
        sum += contrib;
        if (std::abs(contrib) < eps * std::abs(sum)) break;
    }
    return -std::numbers::egamma - std::log(x) - sum;
}

// Continued fraction for e^x E1(x), modified Lentz; used for x > 1.
double e1_scaled_fraction(double x) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double step = c * d;
        h *= step;
        if (std::abs(step - 1.0) < eps) break;
    }
    return h;
}

}  // namespace

double exp_integral_e1(double x) {
    check_e1_domain(x);
    if (x <= 1.0) return e1_series(x);
    if (x > 745.0) return 0.0;
    return e1_scaled_fraction(x) * std::exp(-x);
}

double exp_integral_e1_scaled(double x) {
    check_e1_domain(x);
    if (x <= 1.0) return std::exp(x) * e1_series(x);
    if (std::isinf(x)) return 0.0;
    return e1_scaled_fraction(x);
}

}  // namespace cellgeom::specialfun
