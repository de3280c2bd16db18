#pragma once

#include <string>
#include <vector>

#include "einwarp/lichnerowicz.hpp"

namespace einwarp {

// ---------------------------------------------------------------------------
// gradient-estimate probe
// ---------------------------------------------------------------------------

/// Inputs of the local gradient estimate on the ball B(x0, R). The distance
/// along the ansatz line is |xi - xi0| / |abar|, so the probe is restricted
/// to a flat base where that is the actual geodesic distance.
struct EstimateConfig {
    double R = 4.0;    ///< ball radius, >= 2
    double x0 = 0.0;   ///< ball center in the xi coordinate
    double p = 1.0;    ///< > 0
    double q = 0.0;    ///< chosen so q - p ln u >= delta on the ball
    double delta = 1.0;
    double D = 1.0;    ///< upper bound for u on the ball
    double K = 0.0;    ///< curvature lower-bound constant, >= 0
    double gamma = 0.0;  ///< max of the drifted Laplacian of r on the unit sphere
    int grid = 401;
    double solution_tol = 1e-6;  ///< PDE residual allowed before NotASolution
};

struct EstimateRow {
    double xi = 0.0;
    double u = 0.0;
    double grad_ln_u = 0.0;
    double bracket = 0.0;
    double local_C = 0.0;
};

struct EstimateResult {
    double lhs_sup = 0.0;
    double bracket_sup = 0.0;
    double empirical_C = 0.0;
    std::vector<EstimateRow> rows;  ///< over the half ball B(x0, R/2)
};

/// Fill q (1 + p sup ln u), delta, D, K (from the Bakry-Emery eigenvalues
/// over the ball) and gamma (two-point closed form on the unit sphere).
EstimateConfig suggest_config(const BaseAnsatz& base, const Profile& phi, const Profile& u,
                              double R, double x0 = 0.0, double p = 1.0, int grid = 401);

/// Evaluate both sides of the gradient estimate for a verified solution of
/// Delta_phi u + A u + B u^eps = 0 and report the empirical constant
/// sup lhs / ((q - p ln u) * bracket). Throws NotASolution when the PDE
/// residual exceeds cfg.solution_tol, BracketZero when the bracket vanishes
/// while the gradient does not.
EstimateResult empirical_estimate(const EstimateConfig& cfg, const BaseAnsatz& base,
                                  const Profile& phi, const Profile& u, const Profile& A,
                                  double B, double eps);

// ---------------------------------------------------------------------------
// growth probe
// ---------------------------------------------------------------------------

enum class GrowthVerdict { DecayingToZero, BoundedNonzero, Growing };

const char* to_string(GrowthVerdict v);

/// Samples q(xi) = |ln f| / sqrt(xi) at geometrically spaced points of
/// [xi_lo, xi_hi] (0 < xi_lo < xi_hi) and classifies the trend by the
/// log-log slope. A numerical indicator for the growth hypothesis
/// f = e^{o(sqrt r)}, not a proof.
struct GrowthReport {
    std::vector<double> xi;
    std::vector<double> q;
    double slope = 0.0;
    GrowthVerdict verdict = GrowthVerdict::BoundedNonzero;
};

GrowthReport growth_probe(const Profile& f, double xi_lo, double xi_hi, int samples = 16);

// ---------------------------------------------------------------------------
// rigidity / nonexistence classifier
// ---------------------------------------------------------------------------

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };
enum class GrowthStatus { VerifiedOnRange, Asserted, Violated };
enum class Verdict { Rigid, Nonexistent, Undetermined };

const char* to_string(Sign s);
const char* to_string(GrowthStatus s);
const char* to_string(Verdict v);
Sign sign_from_string(const std::string& s);
GrowthStatus growth_status_from_string(const std::string& s);

struct RigidityHypotheses {
    Sign sign_sigma = Sign::Positive;  ///< sign of sigma(m); never zero
    Sign sign_A = Sign::Zero;          ///< sign of (rho R_B + lambda)/(alpha - 2 m rho)
    Sign sign_BF = Sign::Zero;         ///< sign of R_F (alpha - m rho)/(alpha - 2 m rho)
    bool ricci_w_nonneg = false;
    GrowthStatus growth_ok = GrowthStatus::Asserted;
    bool gradient_decay = false;  ///< sup |rho grad R_B + grad lambda| = o(R^{-3/2})
    bool ricci_w_grid_verified = false;  ///< provenance: grid-checked vs asserted
};

struct RigidityVerdict {
    Verdict verdict = Verdict::Undetermined;
    std::string clause;  ///< which classifier rule matched, or why none did
};

/// Total function of the sign tuple plus side conditions. Strict and zero
/// sign patterns are matched literally; mixed strict/zero combinations that
/// neither rule covers are Undetermined.
RigidityVerdict classify_rigidity(const RigidityHypotheses& h);

// ---------------------------------------------------------------------------
// soliton presets
// ---------------------------------------------------------------------------

struct PresetResult {
    Params params;
    bool h_constant = false;   ///< Einstein manifolds: the potential is constant
    std::string lambda_role;   ///< what the soliton function means for this preset
};

/// name in {ricci, einstein-manifold, einstein-soliton, traceless, schouten};
/// dims fix d = n + m for the rho presets.
PresetResult soliton_preset(const std::string& name, int n, int m);

}  // namespace einwarp
