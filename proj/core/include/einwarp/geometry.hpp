#pragma once

#include <utility>

#include "einwarp/ansatz.hpp"

namespace einwarp {

/// Ricci tensor of the conformal base metric psi^-2 g_euc in coordinates,
/// as a rank-one-plus-isotropic pair.
RankOneIso conformal_ricci(const BaseAnsatz& base, double xi);

/// Scalar curvature of the conformal base metric.
double conformal_scalar(const BaseAnsatz& base, double xi);

/// Hessian of p (lifted along xi) with respect to the base metric.
RankOneIso conformal_hessian(const BaseAnsatz& base, const Profile& p, double xi);

/// Laplace-Beltrami of p with respect to the base metric.
double conformal_laplacian(const BaseAnsatz& base, const Profile& p, double xi);

/// <grad p, grad q> in the base metric.
double grad_inner(const BaseAnsatz& base, const Profile& p, const Profile& q, double xi);

inline double grad_norm_sq(const BaseAnsatz& base, const Profile& p, double xi) {
    return grad_inner(base, p, p, xi);
}

/// Scalar curvature of the warped metric. With include_fiber the term
/// m theta / f^2 is added (the full product scalar curvature); without it
/// the reduced base-only expression is returned.
double warped_scalar(const WarpedAnsatz& a, double xi, bool include_fiber = true);

/// Drifted Laplacian: Delta u - <grad w, grad u> in the base metric.
double drifted_laplacian(const BaseAnsatz& base, const Profile& w, const Profile& u,
                         double xi);

/// Eigenvalues of the Bakry-Emery tensor Ric + Hess(w) as a self-adjoint
/// operator of the base metric: (parallel to the ansatz direction,
/// perpendicular with multiplicity n-1).
std::pair<double, double> bakry_emery_eigs(const BaseAnsatz& base, const Profile& w,
                                           double xi);

/// The braces of the reduced scalar-curvature expression: the scalar
/// curvature divided by |abar|^2, with the optional fiber contribution.
double scalar_braces(const BaseAnsatz& base, const Profile& f, double xi, int m,
                     double theta, bool include_fiber);

}  // namespace einwarp
