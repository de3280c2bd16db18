#pragma once

#include "einwarp/profile.hpp"

namespace einwarp {

/// Structure constants of the fundamental equation
///   alpha Ric + beta Hess(h) + mu dh (x) dh = (rho R + lambda) g.
struct Params {
    double alpha = 1.0;
    double beta = 1.0;
    double mu = 0.0;
    double rho = 0.0;

    void validate() const {
        if (alpha == 0.0 && beta == 0.0 && mu == 0.0)
            throw BadCoefficients("(alpha, beta, mu) must not all vanish");
    }
};

enum class FiberChart { Euclidean, Sphere, Hyperbolic, None };

const char* to_string(FiberChart c);
FiberChart fiber_chart_from_string(const std::string& s);

/// Conformally flat base (R^n, psi^-2 g_euc) reduced to the invariant
/// coordinate xi. Only the squared length of the direction covector enters
/// the curvature formulas, so that is all we store.
struct BaseAnsatz {
    int n = 3;
    double alpha_norm_sq = 1.0;
    Profile psi = Profile::constant(1.0);

    void validate() const {
        if (n < 2) throw BadCoefficients("base dimension must be at least 2");
        if (!(alpha_norm_sq > 0.0))
            throw BadCoefficients("the direction covector must be nonzero");
    }
};

/// Einstein fiber, known only through its dimension and Einstein constant.
/// A chart is attached when the explicit model space is wanted for
/// coordinate-level checks.
struct FiberData {
    int m = 2;
    double theta = 0.0;
    FiberChart chart = FiberChart::Euclidean;

    double scalar() const { return m * theta; }

    void validate() const {
        if (m < 1) throw BadCoefficients("fiber dimension must be at least 1");
        switch (chart) {
            case FiberChart::Euclidean:
                if (theta != 0.0)
                    throw BadCoefficients("euclidean chart requires theta = 0");
                break;
            case FiberChart::Sphere:
                if (theta != static_cast<double>(m - 1))
                    throw BadCoefficients("sphere chart requires theta = m - 1");
                break;
            case FiberChart::Hyperbolic:
                if (theta != static_cast<double>(-(m - 1)))
                    throw BadCoefficients("hyperbolic chart requires theta = -(m - 1)");
                break;
            case FiberChart::None:
                break;
        }
    }
};

/// Full candidate metric g = psi^-2 g_euc + f^2 g_F with potential h and
/// soliton function lambda, all functions of xi.
struct WarpedAnsatz {
    BaseAnsatz base;
    FiberData fiber;
    Profile f = Profile::constant(1.0);
    Profile h = Profile::constant(0.0);
    Profile lambda = Profile::constant(0.0);
    Params params;

    Interval common_domain() const {
        return base.psi.domain().intersect(f.domain()).intersect(h.domain()).intersect(
            lambda.domain());
    }

    void validate() const {
        base.validate();
        fiber.validate();
        params.validate();
        if (common_domain().empty())
            throw BadCoefficients("profile domains have empty intersection");
    }
};

/// Symmetric two-tensor of the reduced geometry in coordinates:
/// entries rank1 * abar_i abar_j + iso * delta_ij.
struct RankOneIso {
    double rank1 = 0.0;
    double iso = 0.0;
};

inline const char* to_string(FiberChart c) {
    switch (c) {
        case FiberChart::Euclidean: return "euclidean";
        case FiberChart::Sphere: return "sphere";
        case FiberChart::Hyperbolic: return "hyperbolic";
        case FiberChart::None: return "none";
    }
    return "?";
}

inline FiberChart fiber_chart_from_string(const std::string& s) {
    for (FiberChart c : {FiberChart::Euclidean, FiberChart::Sphere, FiberChart::Hyperbolic,
                         FiberChart::None})
        if (s == to_string(c)) return c;
    throw ParseError("unknown fiber chart: " + s);
}

}  // namespace einwarp
