#include <gtest/gtest.h>

#include <cmath>

#include "cellgeom/analytic_rateless.hpp"

using namespace cellgeom;
using namespace cellgeom::rateless;

namespace {

AnalyticalParams alpha4(int N) { return AnalyticalParams::make(1.0, 4.0, 75.0, N); }

double ci_rate(const AnalyticalParams& p) {
    return rate_from_ccdf([&](double t) { return ccdf_const_interference(t, p); }, p, ps_rateless_ci(p)).rate;
}

}  // namespace

TEST(Params, Validation) {
    EXPECT_THROW(AnalyticalParams::make(0.0, 3.0, 75.0, 100), std::invalid_argument);
    EXPECT_THROW(AnalyticalParams::make(1.0, 2.0, 75.0, 100), std::invalid_argument);
    EXPECT_THROW(AnalyticalParams::make(1.0, 3.0, 0.0, 100), std::invalid_argument);
    EXPECT_THROW(AnalyticalParams::make(1.0, 3.0, 75.0, 0), std::invalid_argument);
    const auto p = alpha4(100);
    EXPECT_DOUBLE_EQ(p.delta(), 0.5);
    EXPECT_NEAR(p.theta(), std::pow(2.0, 0.75) - 1.0, 1e-15);
    EXPECT_TRUE(std::isinf(p.theta_at(1e-3)));
}

TEST(ConstInterference, Golden) {
    const auto p = alpha4(100);
    EXPECT_NEAR(ps_rateless_ci(p), 0.63697492183894821, 1e-12);
    EXPECT_NEAR(ci_rate(p), 0.77960434547443664, 1e-8);
    EXPECT_NEAR(ci_rate(alpha4(300)), 0.596401007301, 1e-8);
}

TEST(ConstInterference, CcdfShape) {
    const auto p = AnalyticalParams::make(1.0, 3.0, 75.0, 200);
    double prev = 1.0;
    for (int t = 1; t < p.N; ++t) {
        const double v = ccdf_const_interference(t, p);
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, prev);
        prev = v;
    }
    EXPECT_EQ(ccdf_const_interference(p.N, p), 0.0);
    EXPECT_NEAR(ccdf_const_interference(p.N - 1e-9, p), 1.0 - ps_rateless_ci(p), 1e-6);
    EXPECT_THROW(ccdf_const_interference(0.0, p), std::domain_error);
}

TEST(RateFromCcdf, TabulatedAgreesWithQuadrature) {
    const auto p = alpha4(100);
    const auto fn = [&](double t) { return ccdf_const_interference(t, p); };
    const auto curve = tabulate(fn, p.N, CcdfCurve::Kind::exact);
    EXPECT_NO_THROW(curve.validate());
    const double ps = ps_rateless_ci(p);
    EXPECT_NEAR(rate_from_ccdf(curve, p, ps).rate, rate_from_ccdf(fn, p, ps).rate, 5e-3);
}

TEST(RateFromCcdf, GuardsMeanBelowOneChannelUse) {
    const auto p = AnalyticalParams::make(1.0, 3.0, 1.0, 10);
    const auto r = rate_from_ccdf([](double) { return 0.0; }, p, 1.0);
    EXPECT_TRUE(r.integral_guarded);
    EXPECT_DOUBLE_EQ(r.rate, 1.0);
}

TEST(Thinning, Golden) {
    const auto p = alpha4(100);
    const auto model = ThinningModel::standard(p);
    EXPECT_NEAR(mu_mean_packet_time(p), 41.419548213932701, 1e-7);
    EXPECT_NEAR(model.mean_interferer_time(), 55.598901985755114, 1e-6);
    EXPECT_NEAR(omega_sync(60.0, model, p), 0.72563976640820907, 1e-7);
    EXPECT_NEAR(ccdf_thinning_bound_sync(60.0, model, p), 0.43994765344327149, 1e-7);
    EXPECT_NEAR(ccdf_thinning_bound_async(60.0, p), 0.38631569167221856, 1e-7);
    EXPECT_NEAR(ps_rate_thinning_sync(p).ps, 0.74639070643011848, 1e-7);
    EXPECT_NEAR(ps_rate_thinning_sync(alpha4(300)).ps, 0.953157598133, 1e-7);
}

TEST(Thinning, OmegaEndpointsAndAsyncAgreement) {
    const auto p = AnalyticalParams::make(1.0, 3.0, 75.0, 150);
    const auto model = ThinningModel::standard(p);
    const double omega_N = model.mean_interferer_time() / p.N;
    EXPECT_NEAR(omega_sync(p.N, model, p), omega_N, 1e-9);
    EXPECT_NEAR(omega_async(p, model.mu()), omega_N, 1e-9);
    EXPECT_NEAR(omega_sync(1e-6, model, p), 1.0, 1e-6);
    EXPECT_THROW(omega_sync(p.N + 1.0, model, p), std::domain_error);
}

TEST(Thinning, InterfererCcdfHasAtomAtN) {
    const auto p = alpha4(100);
    const double mu = mu_mean_packet_time(p);
    EXPECT_GT(interferer_ccdf(p.N - 1e-9, mu, p), 0.1);
    EXPECT_EQ(interferer_ccdf(p.N, mu, p), 0.0);
    EXPECT_EQ(interferer_ccdf(p.N + 5.0, mu, p), 0.0);
}

// Pointwise orderings that hold for every t: thinning below constant
// interference, and Poisson rain below the synchronous bound.
TEST(Thinning, BoundOrderings) {
    for (double alpha : {3.0, 4.0}) {
        const auto p = AnalyticalParams::make(1.0, alpha, 75.0, 300);
        const auto sync = ThinningModel::standard(p, ThinningMode::synchronous);
        const auto async = ThinningModel::standard(p, ThinningMode::asynchronous);
        for (int t = 1; t <= p.N; ++t) {
            const double ps = ccdf_thinning_bound_sync(t, sync, p);
            const double pa = ccdf_thinning_bound_async(t, async, p);
            const double pc = ccdf_const_interference(t, p);
            EXPECT_LE(ps, pc + 1e-12) << "t=" << t;
            EXPECT_LE(pa, ps + 1e-12) << "t=" << t;
        }
    }
}

TEST(Thinning, RateBoundsAboveConstantInterference) {
    for (int N : {75, 150, 300}) {
        const auto p = alpha4(N);
        const auto thin = ps_rate_thinning_sync(p);
        EXPECT_GT(thin.ps, ps_rateless_ci(p));
        EXPECT_GT(thin.rate, ci_rate(p));
        const auto model = ThinningModel::standard(p, ThinningMode::asynchronous);
        EXPECT_GE(ps_rate_thinning_async(model, p).ps, thin.ps - 1e-12);
    }
}

TEST(Thinning, SilentInterferersRemoveOutage) {
    const auto p = alpha4(100);
    const auto model = ThinningModel::custom(p, 1.0, [](double) { return 0.0; });
    EXPECT_DOUBLE_EQ(model.mean_interferer_time(), 0.0);
    EXPECT_DOUBLE_EQ(ccdf_thinning_bound_sync(10.0, model, p), 0.0);
    EXPECT_DOUBLE_EQ(ps_rate_thinning_sync(model, p).ps, 1.0);
}

TEST(Thinning, AlwaysOnInterferersMatchConstantInterference) {
    const auto p = alpha4(100);
    const auto model = ThinningModel::custom(p, p.N, [](double) { return 1.0; });
    for (double t : {5.0, 30.0, 99.0}) {
        EXPECT_NEAR(ccdf_thinning_bound_sync(t, model, p), ccdf_const_interference(t, p), 1e-9);
    }
}

TEST(EtaMoment, FirstMomentIsOmegaN) {
    const auto p = alpha4(100);
    const auto model = ThinningModel::standard(p, ThinningMode::asynchronous);
    for (double t : {10.0, 50.0, 100.0}) {
        EXPECT_NEAR(eta_moment_async(1.0, t, model, p), 0.55598901985755114, 1e-6) << "t=" << t;
    }
}

TEST(EtaMoment, JensenAndDomain) {
    const auto p = alpha4(100);
    const auto model = ThinningModel::standard(p, ThinningMode::asynchronous);
    const double m1 = eta_moment_async(1.0, 40.0, model, p);
    const double mh = eta_moment_async(0.5, 40.0, model, p);
    EXPECT_GE(mh, m1 * m1 - 1e-12);
    EXPECT_LE(mh * mh, m1 + 1e-9);
    EXPECT_THROW(eta_moment_async(0.0, 40.0, model, p), std::domain_error);
    EXPECT_THROW(eta_moment_async(1.5, 40.0, model, p), std::domain_error);
}

TEST(Tabulate, KindAndGrid) {
    const auto p = alpha4(50);
    const auto curve = tabulate([&](double t) { return ccdf_thinning_bound_sync(t, p); }, p.N,
                                CcdfCurve::Kind::upper_bound);
    ASSERT_EQ(curve.grid.size(), 50u);
    EXPECT_EQ(curve.grid.front(), 1.0);
    EXPECT_EQ(curve.grid.back(), 50.0);
    EXPECT_EQ(curve.kind, CcdfCurve::Kind::upper_bound);
    EXPECT_EQ(to_string(curve.kind), "upper-bound");
}
