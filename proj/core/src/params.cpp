#include "cellgeom/params.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cellgeom {

AnalyticalParams AnalyticalParams::make(double lambda, double alpha, double K, int N) {
    AnalyticalParams p{lambda, alpha, K, N};
    p.validate();
    return p;
}

void AnalyticalParams::validate() const {
    std::ostringstream msg;
    if (!(lambda > 0.0)) msg << "lambda must be > 0; ";
    if (!(alpha > 2.0) || !std::isfinite(alpha)) msg << "alpha must be > 2; ";
    if (!(K > 0.0) || !std::isfinite(K)) msg << "K must be > 0; ";
    if (N < 1) msg << "N must be >= 1; ";
    if (!msg.str().empty()) throw std::invalid_argument("AnalyticalParams: " + msg.str());
}

double AnalyticalParams::theta_at(double t) const {
    if (!(t > 0.0)) {
        std::ostringstream msg;
        msg << "theta_at: time must be > 0 (got " << t << ")";
        throw std::domain_error(msg.str());
    }
    const double exponent = K / t;
    if (exponent >= 1024.0) return std::numeric_limits<double>::infinity();
    return std::expm1(exponent * std::numbers::ln2);
}

std::string_view to_string(CcdfCurve::Kind kind) {
    switch (kind) {
        case CcdfCurve::Kind::exact: return "exact";
        case CcdfCurve::Kind::upper_bound: return "upper-bound";
        case CcdfCurve::Kind::empirical: return "empirical";
    }
    return "unknown";
}

void CcdfCurve::validate() const {
    if (grid.size() != values.size()) {
        throw std::invalid_argument("CcdfCurve: grid and values differ in length");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0)) throw std::invalid_argument("CcdfCurve: grid must be positive");
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("CcdfCurve: grid must be strictly ascending");
        }
        if (!(values[i] >= 0.0 && values[i] <= 1.0)) {
            throw std::invalid_argument("CcdfCurve: values must lie in [0, 1]");
        }
        if (i > 0 && values[i] > values[i - 1]) {
            throw std::invalid_argument("CcdfCurve: values must be non-increasing");
        }
    }
}

}  // namespace cellgeom
