#include <gtest/gtest.h>

#include <cmath>

#include "einwarp/analysis.hpp"
#include "einwarp/catalog.hpp"

using namespace einwarp;

namespace {

Profile bounded_multiplier_spline(double lo, double hi) {
    // 1 + sin^2(xi) sampled densely enough for the probe points
    std::vector<double> xs, ys;
    const int n = 4001;
    for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        xs.push_back(x);
        ys.push_back(1.0 + std::sin(x) * std::sin(x));
    }
    return Profile::spline(xs, ys);
}

}  // namespace

TEST(Growth, ConstantWarpDecays) {
    const GrowthReport r = growth_probe(Profile::constant(2.0), 1.0, 1e4);
    EXPECT_EQ(r.verdict, GrowthVerdict::DecayingToZero);
}

TEST(Growth, ExponentialWarpGrows) {
    const GrowthReport r = growth_probe(Profile::exponential(1.0, 1.0), 1.0, 500.0);
    EXPECT_EQ(r.verdict, GrowthVerdict::Growing);
    EXPECT_NEAR(r.slope, 0.5, 0.05);  // q = sqrt(xi)
}

TEST(Growth, DecayingExponentAlsoGrowsInAbsoluteValue) {
    // the hypothesis is two-sided: f = e^{-xi} violates it just the same
    const GrowthReport r = growth_probe(Profile::exponential(1.0, -1.0), 1.0, 500.0);
    EXPECT_EQ(r.verdict, GrowthVerdict::Growing);
}

TEST(Growth, SubcriticalExponentDecays) {
    // f = e^{xi^{1/4}}: q = xi^{-1/4}
    const Profile f = Profile::exp_of(Profile::power(1.0, 0.0, 1.0, 0.25));
    const GrowthReport r = growth_probe(f, 1.0, 1e4);
    EXPECT_EQ(r.verdict, GrowthVerdict::DecayingToZero);
    EXPECT_NEAR(r.slope, -0.25, 0.05);
}

TEST(Growth, CriticalRateIsBounded) {
    // f = e^{2 sqrt(xi)}: q = 2 exactly
    const Profile f = Profile::exp_of(Profile::power(2.0, 0.0, 1.0, 0.5));
    const GrowthReport r = growth_probe(f, 1.0, 1e4);
    EXPECT_EQ(r.verdict, GrowthVerdict::BoundedNonzero);
}

TEST(Growth, BoundedMultiplierKeepsTheVerdict) {
    const Profile mult = bounded_multiplier_spline(0.5, 60.0);
    const Profile grow = Profile::exponential(1.0, 1.0);
    EXPECT_EQ(growth_probe(grow, 1.0, 50.0).verdict,
              growth_probe(Profile::product(1.0, {grow, mult}), 1.0, 50.0).verdict);
    const Profile cst = Profile::constant(3.0);
    EXPECT_EQ(growth_probe(cst, 1.0, 50.0).verdict,
              growth_probe(Profile::product(1.0, {cst, mult}), 1.0, 50.0).verdict);
}

TEST(Classifier, TotalAndUnique) {
    int rigid = 0, nonexistent = 0, undetermined = 0;
    for (const Sign s : {Sign::Positive, Sign::Negative})
        for (const Sign a : {Sign::Negative, Sign::Zero, Sign::Positive})
            for (const Sign bf : {Sign::Negative, Sign::Zero, Sign::Positive}) {
                RigidityHypotheses h;
                h.sign_sigma = s;
                h.sign_A = a;
                h.sign_BF = bf;
                h.ricci_w_nonneg = true;
                h.growth_ok = GrowthStatus::VerifiedOnRange;
                h.gradient_decay = true;
                const RigidityVerdict v = classify_rigidity(h);
                switch (v.verdict) {
                    case Verdict::Rigid: ++rigid; break;
                    case Verdict::Nonexistent: ++nonexistent; break;
                    case Verdict::Undetermined: ++undetermined; break;
                }
            }
    EXPECT_EQ(rigid + nonexistent + undetermined, 18);
    EXPECT_EQ(rigid, 4);
    EXPECT_EQ(nonexistent, 6);
    EXPECT_EQ(undetermined, 8);
}

TEST(Classifier, MixedStrictZeroPatternsAreUndetermined) {
    RigidityHypotheses h;
    h.sign_sigma = Sign::Positive;
    h.sign_A = Sign::Negative;
    h.sign_BF = Sign::Zero;
    h.ricci_w_nonneg = true;
    h.gradient_decay = true;
    EXPECT_EQ(classify_rigidity(h).verdict, Verdict::Undetermined);
}

TEST(Classifier, SideConditionsGate) {
    RigidityHypotheses h;
    h.sign_sigma = Sign::Positive;
    h.sign_A = Sign::Negative;
    h.sign_BF = Sign::Negative;
    h.ricci_w_nonneg = true;
    h.gradient_decay = true;
    h.growth_ok = GrowthStatus::Asserted;
    EXPECT_EQ(classify_rigidity(h).verdict, Verdict::Rigid);
    h.growth_ok = GrowthStatus::Violated;
    EXPECT_EQ(classify_rigidity(h).verdict, Verdict::Undetermined);
    h.growth_ok = GrowthStatus::Asserted;
    h.ricci_w_nonneg = false;
    EXPECT_EQ(classify_rigidity(h).verdict, Verdict::Undetermined);
}

TEST(Classifier, SolitonScenarios) {
    // steady soliton, R_F != 0: cannot exist
    {
        const PresetResult p = soliton_preset("ricci", 3, 2);
        RigidityHypotheses h;
        h.sign_sigma = sigma_of(p.params, 2) > 0 ? Sign::Positive : Sign::Negative;
        h.sign_A = Sign::Zero;       // lambda = 0
        h.sign_BF = Sign::Positive;  // R_F != 0 (either sign works; try +)
        h.ricci_w_nonneg = true;
        h.gradient_decay = true;
        EXPECT_EQ(classify_rigidity(h).verdict, Verdict::Nonexistent);
        h.sign_BF = Sign::Negative;
        EXPECT_EQ(classify_rigidity(h).verdict, Verdict::Nonexistent);
    }
    // expanding soliton, R_F < 0: standard product
    {
        RigidityHypotheses h;
        h.sign_sigma = Sign::Positive;  // sigma = 1/m
        h.sign_A = Sign::Negative;      // lambda < 0
        h.sign_BF = Sign::Negative;
        h.ricci_w_nonneg = true;
        h.gradient_decay = true;
        const RigidityVerdict v = classify_rigidity(h);
        EXPECT_EQ(v.verdict, Verdict::Rigid);
        EXPECT_EQ(v.clause, "rigidity (a)");
    }
    // Einstein warped product with R_g < 0 and positive fiber scalar
    {
        RigidityHypotheses h;
        h.sign_sigma = Sign::Positive;  // sigma = 1/m (rho = 0)
        h.sign_A = Sign::Negative;      // lambda = R_g/d < 0
        h.sign_BF = Sign::Positive;
        h.ricci_w_nonneg = true;
        h.gradient_decay = true;
        EXPECT_EQ(classify_rigidity(h).verdict, Verdict::Nonexistent);
    }
    // Schouten hypothesis set: rho R_B + lambda <= 0, R_F > 0
    {
        const PresetResult p = soliton_preset("schouten", 3, 2);
        const double sigma = sigma_of(p.params, 2);
        EXPECT_GT(sigma, 0.0);
        const double bf = 1.0 * (p.params.alpha - 2.0 * p.params.rho) /
                          (p.params.alpha - 4.0 * p.params.rho);
        EXPECT_GT(bf, 0.0);
        RigidityHypotheses h;
        h.sign_sigma = Sign::Positive;
        h.sign_A = Sign::Negative;
        h.sign_BF = Sign::Positive;
        h.ricci_w_nonneg = true;
        h.gradient_decay = true;
        const RigidityVerdict v = classify_rigidity(h);
        EXPECT_EQ(v.verdict, Verdict::Nonexistent);
        EXPECT_EQ(v.clause, "nonexistence (a)");
    }
}

TEST(Presets, RhoValues) {
    EXPECT_EQ(soliton_preset("ricci", 3, 2).params.rho, 0.0);
    EXPECT_EQ(soliton_preset("ricci", 3, 2).params.mu, 0.0);
    EXPECT_EQ(soliton_preset("einstein-soliton", 3, 2).params.rho, 0.5);
    EXPECT_DOUBLE_EQ(soliton_preset("traceless", 2, 2).params.rho, 0.25);
    EXPECT_DOUBLE_EQ(soliton_preset("schouten", 3, 2).params.rho, 0.125);
    EXPECT_TRUE(soliton_preset("einstein-manifold", 3, 2).h_constant);
    EXPECT_THROW(soliton_preset("yamabe", 3, 2), UnknownPreset);
}

TEST(Estimate, ConstantSolutionGivesZero) {
    const BaseAnsatz base{3, 1.0, Profile::constant(1.0)};
    const Profile u = Profile::constant(2.0);
    const Profile phi = Profile::constant(0.0);
    const Profile A = Profile::constant(0.0);
    EstimateConfig cfg = suggest_config(base, phi, u, 4.0);
    const EstimateResult r = empirical_estimate(cfg, base, phi, u, A, 0.0, 1.0);
    EXPECT_EQ(r.lhs_sup, 0.0);
    EXPECT_EQ(r.empirical_C, 0.0);
}

TEST(Estimate, LogGradientIsScaleInvariant) {
    const BaseAnsatz base{3, 1.0, Profile::constant(1.0)};
    const Profile u = Profile::linear(100.0, 1.0);
    const Profile phi = Profile::constant(0.0);
    const Profile A = Profile::constant(0.0);
    const EstimateConfig cfg = suggest_config(base, phi, u, 4.0);

    const Profile cu = Profile::product(4.0, {u});  // power of two: exact scaling
    EstimateConfig cfg2 = suggest_config(base, phi, cu, 4.0);
    const EstimateResult r1 = empirical_estimate(cfg, base, phi, u, A, 0.0, 1.0);
    const EstimateResult r2 = empirical_estimate(cfg2, base, phi, cu, A, 0.0, 1.0);
    ASSERT_EQ(r1.rows.size(), r2.rows.size());
    for (std::size_t i = 0; i < r1.rows.size(); ++i)
        EXPECT_EQ(r1.rows[i].grad_ln_u, r2.rows[i].grad_ln_u);
}

TEST(Estimate, HarmonicProbeTable) {
    // u = 100 + xi is drifted-harmonic on the flat base; the frozen table
    // documents how the empirical constant moves with R for this probe
    // (the bracket shrinks like 1/sqrt(R) while |grad ln u| stays put, so
    // the required constant grows)
    const BaseAnsatz base{3, 1.0, Profile::constant(1.0)};
    const Profile u = Profile::linear(100.0, 1.0);
    const Profile phi = Profile::constant(0.0);
    const Profile A = Profile::constant(0.0);
    const double want[3] = {0.0065388040574370816, 0.010063382067618856,
                            0.014910466642464006};
    const double radii[3] = {2.0, 4.0, 8.0};
    for (int i = 0; i < 3; ++i) {
        EstimateConfig cfg = suggest_config(base, phi, u, radii[i]);
        const EstimateResult r = empirical_estimate(cfg, base, phi, u, A, 0.0, 1.0);
        EXPECT_NEAR(r.empirical_C, want[i], 1e-12);
        EXPECT_GT(r.empirical_C, 0.0);
    }
}

TEST(Estimate, ExponentialWarpLogGradient) {
    // u = e^{8 xi/5}: |grad ln u| = 8/5 everywhere, a non-decaying gradient
    // consistent with this example violating the growth hypothesis
    const CatalogEntry& e = catalog_find("ex1");
    const LichnerowiczData L = build_lichnerowicz(e.ansatz);
    const Profile A = Profile::sum({1.0 / L.sigma}, {L.coeff_A});
    for (const double R : {2.0, 4.0, 8.0}) {
        EstimateConfig cfg = suggest_config(e.ansatz.base, L.w, L.u, R);
        const EstimateResult r = empirical_estimate(cfg, e.ansatz.base, L.w, L.u, A,
                                                    -L.coeff_B / L.sigma, L.epsilon);
        EXPECT_NEAR(r.lhs_sup, 1.6, 1e-12);
        for (const auto& row : r.rows) EXPECT_NEAR(row.grad_ln_u, 1.6, 1e-12);
        EXPECT_GT(r.empirical_C, 0.0);
        EXPECT_TRUE(std::isfinite(r.empirical_C));
    }
    // and the warp indeed violates the growth hypothesis
    EXPECT_EQ(growth_probe(e.ansatz.f, 1.0, 500.0).verdict, GrowthVerdict::Growing);
}

TEST(Estimate, RejectsNonSolutions) {
    const BaseAnsatz base{3, 1.0, Profile::constant(1.0)};
    const Profile u = Profile::exponential(1.0, 1.0);  // Delta u = u != 0
    const Profile phi = Profile::constant(0.0);
    const Profile A = Profile::constant(0.0);
    EstimateConfig cfg = suggest_config(base, phi, u, 2.0);
    EXPECT_THROW(empirical_estimate(cfg, base, phi, u, A, 0.0, 1.0), NotASolution);
}

TEST(Estimate, ConfigInvariantsAreEnforced) {
    const BaseAnsatz base{3, 1.0, Profile::constant(1.0)};
    const Profile u = Profile::linear(100.0, 1.0);
    const Profile phi = Profile::constant(0.0);
    const Profile A = Profile::constant(0.0);
    EstimateConfig cfg = suggest_config(base, phi, u, 4.0);
    cfg.q = 0.0;  // q - p ln u < 0 on the ball
    EXPECT_THROW(empirical_estimate(cfg, base, phi, u, A, 0.0, 1.0),
                 InvalidEstimateConfig);
    EXPECT_THROW(suggest_config(base, phi, u, 1.0), InvalidEstimateConfig);  // R < 2
}

TEST(Estimate, SuggestedCurvatureConstants) {
    const BaseAnsatz base{3, 1.0, Profile::constant(1.0)};
    const Profile u = Profile::linear(100.0, 1.0);
    // concave drift: Ric^phi has a negative eigenvalue, K = 1/(n-1)
    const Profile concave = Profile::power(-0.5, 0.0, 1.0, 2.0);
    const EstimateConfig cfg = suggest_config(base, concave, u, 2.0);
    EXPECT_NEAR(cfg.K, 0.5, 1e-12);
    // linear drift with slope s: gamma = (n-1) + |s| sqrt(a)
    const Profile lin = Profile::linear(0.0, 0.7);
    const EstimateConfig cfg2 = suggest_config(base, lin, u, 2.0);
    EXPECT_NEAR(cfg2.gamma, 2.7, 1e-12);
}
