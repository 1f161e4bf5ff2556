#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cellgeom/analytic_fixedrate.hpp"
#include "cellgeom/analytic_rateless.hpp"

using namespace cellgeom;
using namespace cellgeom::fixedrate;

namespace {

AnalyticalParams params(double alpha, int N) { return AnalyticalParams::make(1.0, alpha, 75.0, N); }

}  // namespace

TEST(PowerPolicy, Validation) {
    EXPECT_THROW(PowerPolicy::pathloss_fpc(-0.1, 1.0).validate(), std::invalid_argument);
    EXPECT_NO_THROW(PowerPolicy::pathloss_fpc(0.0, 1.0).validate());
    EXPECT_THROW(PowerPolicy::pathloss_fpc(1.5, 1.0).validate(), std::invalid_argument);
    EXPECT_THROW(PowerPolicy::pathloss_threshold(-1.0).validate(), std::invalid_argument);
    auto bad = PowerPolicy::fading_threshold(0.1);
    bad.tau = 0.5;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    EXPECT_NO_THROW(PowerPolicy::fading_tci(0.3).validate());
}

TEST(PowerPolicy, MaxPowerMappings) {
    const auto fpc = PowerPolicy::pathloss_fpc_max_power(0.5, 1.0, 4.0);
    EXPECT_NEAR(fpc.beta, std::pow(0.25, 2.0), 1e-15);
    const auto tci = PowerPolicy::fading_tci_max_power(1.0, 5.0);
    EXPECT_NEAR(tci.beta, 0.2, 1e-15);
    EXPECT_THROW(PowerPolicy::fading_tci_max_power(1.0, 0.0), std::invalid_argument);
}

TEST(PowerPolicy, GateAndPower) {
    const double alpha = 4.0;
    const auto th = PowerPolicy::pathloss_threshold(1.0);
    EXPECT_TRUE(th.transmits(0.9, 0.01, alpha));
    EXPECT_FALSE(th.transmits(1.1, 10.0, alpha));
    EXPECT_EQ(th.power(1.1, 10.0, alpha), 0.0);

    const auto fpc = PowerPolicy::pathloss_fpc(0.5, 0.0, 2.0);
    EXPECT_NEAR(fpc.power(3.0, 1.0, alpha), 2.0 * std::pow(3.0, 2.0), 1e-12);

    const auto tci = PowerPolicy::fading_tci(0.2);
    EXPECT_FALSE(tci.transmits(1.0, 0.1, alpha));
    EXPECT_NEAR(tci.power(1.0, 0.5, alpha), 2.0, 1e-15);
    EXPECT_EQ(PowerPolicy::constant().power(7.0, 0.1, alpha), 1.0);
    EXPECT_EQ(to_string(PowerPolicy::Kind::pathloss_fpc), "pathloss-fpc");
}

TEST(TransmissionProbability, Table) {
    const auto p = params(3.0, 100);
    EXPECT_EQ(transmission_probability(PowerPolicy::pathloss_threshold(0.0), p), 1.0);
    EXPECT_NEAR(transmission_probability(PowerPolicy::pathloss_threshold(1.55), p),
                1.0 - std::exp(-std::numbers::pi / std::pow(1.55, 2.0 / 3.0)), 1e-15);
    for (double beta : {0.1, 0.2, 0.3}) {
        EXPECT_DOUBLE_EQ(transmission_probability(PowerPolicy::fading_tci(beta), p), std::exp(-beta));
    }
    EXPECT_EQ(transmission_probability(PowerPolicy::constant(), p), 1.0);
}

TEST(PathlossThreshold, Golden) {
    const auto p = params(3.0, 200);
    EXPECT_NEAR(ps_pathloss_threshold(SirThreshold::from(p), PowerPolicy::pathloss_threshold(1.55), p),
                0.64590852280268949, 1e-12);
}

TEST(PathlossThreshold, BetaZeroIsCoverage) {
    const auto p = params(4.0, 150);
    EXPECT_NEAR(ps_pathloss_threshold(SirThreshold::from(p), PowerPolicy::pathloss_threshold(0.0), p),
                rateless::ps_rateless_ci(p), 1e-14);
}

TEST(FadingThreshold, Golden) {
    const auto p = params(4.0, 100);
    EXPECT_NEAR(ps_fading_threshold(SirThreshold::from(p), PowerPolicy::fading_threshold(0.1), p),
                0.72347012887024589, 1e-12);
    EXPECT_NEAR(ps_fading_threshold(SirThreshold::from(p), PowerPolicy::fading_threshold(0.0), p),
                rateless::ps_rateless_ci(p), 1e-14);
}

TEST(FadingTci, Golden) {
    const auto p = params(4.0, 100);
    EXPECT_NEAR(ps_fading_tci({1.0}, PowerPolicy::fading_tci(0.0), p), 0.3373131981299714, 1e-9);
    EXPECT_NEAR(ps_fading_tci(SirThreshold::from(p), PowerPolicy::fading_tci(0.1), p), 0.49602453251232128, 1e-9);
}

TEST(FadingTci, ZeroThresholdIsCertainSuccess) {
    const auto p = params(4.0, 100);
    EXPECT_NEAR(ps_fading_tci({0.0}, PowerPolicy::fading_tci(0.2), p), std::exp(-0.2), 1e-14);
}

TEST(Fpc, GoldenAgainstNestedQuadrature) {
    EXPECT_NEAR(ps_fpc(SirThreshold::from(params(4.0, 100)), PowerPolicy::pathloss_fpc(1.0, 1.55),
                       params(4.0, 100)),
                0.5290486507225091, 2e-6);
    EXPECT_NEAR(ps_fpc(SirThreshold::from(params(3.0, 100)), PowerPolicy::pathloss_fpc(0.5, 1.55),
                       params(3.0, 100)),
                0.47747817567140227, 2e-6);
}

TEST(Fpc, SmallTauApproachesThreshold) {
    const auto p = params(3.0, 100);
    for (double beta : {1.55, 2.5}) {
        const double fpc = ps_fpc({1.0}, PowerPolicy::pathloss_fpc(1e-3, beta), p);
        const double th = ps_pathloss_threshold({1.0}, PowerPolicy::pathloss_threshold(beta), p);
        EXPECT_NEAR(fpc, th, 1e-3);
    }
}

TEST(Fpc, ProbabilityBoundedByTransmission) {
    const auto p = params(4.0, 200);
    for (double beta : {0.0, 1.55, 3.5}) {
        const auto policy = PowerPolicy::pathloss_fpc(1.0, beta);
        const double ps = ps_fpc(SirThreshold::from(p), policy, p);
        EXPECT_GT(ps, 0.0);
        EXPECT_LE(ps, transmission_probability(policy, p) + 1e-9);
    }
}

TEST(Fpc, RejectsZeroTau) {
    auto policy = PowerPolicy::pathloss_fpc(1.0, 1.0);
    policy.tau = 0.0;
    EXPECT_THROW(ps_fpc({1.0}, policy, params(3.0, 100)), std::exception);
}

TEST(FixedRate, DispatchAndMetrics) {
    const auto p = params(3.0, 100);
    const auto theta = SirThreshold::from(p);
    EXPECT_NEAR(ps_fixed_rate(theta, PowerPolicy::constant(), p), rateless::ps_rateless_ci(p), 1e-14);
    EXPECT_EQ(ps_fixed_rate(theta, PowerPolicy::fading_tci(0.1), p),
              ps_fading_tci(theta, PowerPolicy::fading_tci(0.1), p));
    const auto m = fixed_rate_metrics(0.5, p);
    EXPECT_DOUBLE_EQ(m.rate, 0.75 * 0.5);
    EXPECT_THROW(fixed_rate_metrics(1.5, p), std::domain_error);
    EXPECT_THROW(SirThreshold{-1.0}.validate(), std::domain_error);
}

TEST(FixedRate, SuccessDecreasesWithThreshold) {
    const auto p = params(4.0, 100);
    for (const auto& policy : {PowerPolicy::pathloss_threshold(1.55), PowerPolicy::fading_threshold(0.2),
                               PowerPolicy::fading_tci(0.1)}) {
        double prev = 1.0;
        for (double theta : {0.1, 0.5, 1.0, 3.0, 10.0}) {
            const double ps = ps_fixed_rate({theta}, policy, p);
            EXPECT_LT(ps, prev);
            prev = ps;
        }
    }
}
