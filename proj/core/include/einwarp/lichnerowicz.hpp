#pragma once

#include <optional>

#include "einwarp/system.hpp"

namespace einwarp {

/// Change-of-variables data for the nonlinear PDE satisfied by u = f^{1/sigma}:
///   sigma Delta_w u + A u - B u^{1-2 sigma} = 0
/// with drift w = beta h / (alpha - 2 m rho).
struct LichnerowiczData {
    double sigma = 1.0;
    Profile w = Profile::constant(0.0);
    Profile u = Profile::constant(1.0);
    Profile coeff_A = Profile::constant(0.0);  ///< (rho R_B + lambda)/(alpha - 2 m rho)
    double coeff_B = 0.0;  ///< (alpha - m rho) R_F / (m (alpha - 2 m rho))
    double epsilon = 1.0;  ///< 1 - 2 sigma, the nonlinear exponent
};

/// sigma(m) = (alpha - 2 m rho) / (m [alpha - rho (1+m)]).
/// Throws ForbiddenParameters when alpha is 2 m rho or (1+m) rho.
double sigma_of(const Params& p, int m);

/// Assemble the PDE data from an ansatz. coeff_A is exact (a closed-form
/// rescaling of lambda) whenever rho = 0 or the base is flat; otherwise it is
/// sampled onto a cubic spline over sample_range (defaults to the common
/// profile domain, which must then be bounded).
LichnerowiczData build_lichnerowicz(const WarpedAnsatz& a,
                                    std::optional<Interval> sample_range = {},
                                    int sample_count = 2001);

/// sigma Delta_w u + A u - B u^{1-2 sigma} at xi. Throws NonpositiveU.
double pde_residual(const LichnerowiczData& L, const BaseAnsatz& base, double xi);

/// Delta_phi u + A u + B u^eps at xi, the general drifted-Laplacian form.
double general_pde_residual(const BaseAnsatz& base, const Profile& phi, const Profile& u,
                            const Profile& A, double B, double eps, double xi);

}  // namespace einwarp
