#include <gtest/gtest.h>

#include <random>

#include "einwarp/profile.hpp"
#include "oracles.hpp"

using namespace einwarp;

TEST(Jets, ExpAtZero) {
    const Jet2 j = Profile::exponential(1.0, 1.0).eval_jet2(0.0);
    EXPECT_EQ(j.v, 1.0);
    EXPECT_EQ(j.d1, 1.0);
    EXPECT_EQ(j.d2, 1.0);
}

TEST(Jets, CoshAtZero) {
    const Jet2 j = Profile::cosh(1.0, 1.0).eval_jet2(0.0);
    EXPECT_EQ(j.v, 1.0);
    EXPECT_EQ(j.d1, 0.0);
    EXPECT_EQ(j.d2, 1.0);
}

TEST(Jets, SechAtZeroAgainstFiniteDifferences) {
    const Profile p = Profile::sech(1.0, 1.0);
    const Jet2 j = p.eval_jet2(0.0);
    EXPECT_EQ(j.v, 1.0);
    EXPECT_EQ(j.d1, 0.0);
    EXPECT_NEAR(j.d2, -1.0, 1e-15);
    const auto fd = test::fd_jet(p, 0.0);
    EXPECT_NEAR(j.d1, fd[1], 1e-8);
    // the plain second difference bottoms out near 1e-7 at step 1e-5, so the
    // 1e-8 agreement is checked with a fourth-order stencil instead
    const double h = 1e-3;
    const double d2 = (-p.value(2.0 * h) + 16.0 * p.value(h) - 30.0 * p.value(0.0) +
                       16.0 * p.value(-h) - p.value(-2.0 * h)) /
                      (12.0 * h * h);
    EXPECT_NEAR(j.d2, d2, 1e-8);
}

TEST(Jets, ReciprocalPowerClosedForm) {
    const Profile p = Profile::power(1.0, 0.0, 1.0, -1.0);
    for (const double x : {0.3, 1.0, 2.5, 7.0}) {
        const Jet2 j = p.eval_jet2(x);
        EXPECT_DOUBLE_EQ(j.v, 1.0 / x);
        EXPECT_DOUBLE_EQ(j.d1, -1.0 / (x * x));
        EXPECT_DOUBLE_EQ(j.d2, 2.0 / (x * x * x));
    }
}

TEST(Jets, LogCoshChainRule) {
    const Profile p = Profile::log_of(Profile::cosh(1.0, 1.0));
    for (const double x : {-1.7, -0.2, 0.9, 2.4}) {
        const Jet2 j = p.eval_jet2(x);
        EXPECT_NEAR(j.v, std::log(std::cosh(x)), 1e-14);
        EXPECT_NEAR(j.d1, std::tanh(x), 1e-14);
        const double s = 1.0 / std::cosh(x);
        EXPECT_NEAR(j.d2, s * s, 1e-14);
    }
}

// (pq)'' must be the Leibniz combination of the factor jets, bit for bit,
// because that is the only way residual identities can cancel exactly.
TEST(Jets, ProductIsExactlyLeibniz) {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> pt(-1.2, 1.2);
    for (int i = 0; i < 50; ++i) {
        const Profile p = test::random_scalar_profile(rng);
        const Profile q = test::random_scalar_profile(rng);
        const Profile prod = Profile::product(1.0, {p, q});
        const double x = pt(rng);
        const Jet2 a = p.eval_jet2(x);
        const Jet2 b = q.eval_jet2(x);
        const Jet2 c = prod.eval_jet2(x);
        EXPECT_EQ(c.v, a.v * b.v);
        EXPECT_EQ(c.d1, a.d1 * b.v + a.v * b.d1);
        EXPECT_EQ(c.d2, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2);
    }
}

TEST(Jets, AllBuiltinsAgainstCentralDifferences) {
    struct Case {
        Profile p;
        double lo, hi;
    };
    const std::vector<Case> cases = {
        {Profile::constant(2.5), -3.0, 3.0},
        {Profile::linear(0.3, -1.7), -3.0, 3.0},
        {Profile::exponential(1.2, 0.7), -2.0, 2.0},
        {Profile::log_affine({1.0, 1.0, 1.0, -1.0, 0.0, 1.0}), 0.2, 5.0},
        {Profile::cosh(0.8, 1.1), -2.0, 2.0},
        {Profile::sech(1.0, 0.9), -2.0, 2.0},
        {Profile::tanh(1.3, 0.6), -2.0, 2.0},
        {Profile::coth(1.0, 1.0), 0.3, 4.0},
        {Profile::power(2.0, 0.5, 1.0, -1.5), 0.2, 4.0},
        {Profile::sum({1.0, -2.0}, {Profile::cosh(1.0, 1.0), Profile::linear(0.0, 1.0)}),
         -2.0, 2.0},
        {Profile::product(0.5, {Profile::exponential(1.0, 0.5), Profile::cosh(1.0, 1.0)}),
         -2.0, 2.0},
        {Profile::pow_of(Profile::sech(1.0, 1.0), 4.0), -2.0, 2.0},
        {Profile::exp_of(Profile::power(1.0, 0.0, 1.0, 0.25)), 0.5, 5.0},
    };
    std::mt19937 rng(7);
    for (const auto& c : cases) {
        std::uniform_real_distribution<double> pt(c.lo, c.hi);
        for (int i = 0; i < 100; ++i) {
            const double x = pt(rng);
            const Jet2 j = c.p.eval_jet2(x);
            const auto fd = test::fd_jet(c.p, x);
            const auto noise = test::fd_noise(c.p, x);
            const double s1 = std::max(1.0, std::abs(fd[1]));
            const double s2 = std::max(1.0, std::abs(fd[2]));
            EXPECT_NEAR(j.d1, fd[1], 1e-6 * s1 + noise.d1)
                << to_string(c.p.kind()) << " at " << x;
            EXPECT_NEAR(j.d2, fd[2], 1e-6 * s2 + noise.d2)
                << to_string(c.p.kind()) << " at " << x;
        }
    }
}

TEST(Jets, QuotientMatchesProductWithInverse) {
    const Jet2 a{1.3, -0.4, 2.2}, b{0.7, 1.9, -0.8};
    const Jet2 q = a / b;
    const Jet2 r = a * inv(b);
    EXPECT_NEAR(q.v, r.v, 1e-15);
    EXPECT_NEAR(q.d1, r.d1, 1e-14);
    EXPECT_NEAR(q.d2, r.d2, 1e-13);
}
