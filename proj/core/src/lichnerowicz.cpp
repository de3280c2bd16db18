#include "einwarp/lichnerowicz.hpp"

#include <cmath>

namespace einwarp {

double sigma_of(const Params& p, int m) {
    const double num = p.alpha - 2.0 * m * p.rho;
    const double den_inner = p.alpha - p.rho * (1.0 + m);
    const double scale = std::max({1.0, std::abs(p.alpha), std::abs(m * p.rho)});
    if (std::abs(num) <= 1e-14 * scale)
        throw ForbiddenParameters("alpha = 2 m rho is outside the admissible set");
    if (std::abs(den_inner) <= 1e-14 * scale)
        throw ForbiddenParameters("alpha = (1+m) rho is outside the admissible set");
    return num / (m * den_inner);
}

LichnerowiczData build_lichnerowicz(const WarpedAnsatz& a, std::optional<Interval> range,
                                    int sample_count) {
    a.validate();
    const Params& p = a.params;
    const int m = a.fiber.m;

    LichnerowiczData L;
    L.sigma = sigma_of(p, m);
    L.epsilon = 1.0 - 2.0 * L.sigma;
    const double denom = p.alpha - 2.0 * m * p.rho;

    L.w = Profile::sum({p.beta / denom}, {a.h});
    L.u = Profile::pow_of(a.f, 1.0 / L.sigma);
    L.coeff_B = (p.alpha - m * p.rho) * a.fiber.scalar() / (m * denom);

    const bool flat_base = a.base.psi.kind() == ProfileKind::Constant;
    if (p.rho == 0.0 || flat_base) {
        // rho R_B drops out (R_B = 0 when psi is constant), so coeff_A is an
        // exact rescaling of lambda
        L.coeff_A = Profile::sum({1.0 / denom}, {a.lambda});
    } else {
        Interval r = range.value_or(a.common_domain());
        if (!r.bounded())
            throw BadCoefficients(
                "coeff_A sampling needs a bounded range on a curved base with rho != 0");
        if (sample_count < 4) sample_count = 4;
        std::vector<double> xs, ys;
        xs.reserve(static_cast<std::size_t>(sample_count));
        ys.reserve(static_cast<std::size_t>(sample_count));
        // trim the open endpoints slightly so singular boundaries stay out
        const double pad = (r.hi - r.lo) * 1e-9;
        const double lo = r.open_lo ? r.lo + pad : r.lo;
        const double hi = r.open_hi ? r.hi - pad : r.hi;
        const double dx = (hi - lo) / (sample_count - 1);
        for (int i = 0; i < sample_count; ++i) {
            const double x = (i == sample_count - 1) ? hi : lo + i * dx;
            xs.push_back(x);
            ys.push_back((p.rho * conformal_scalar(a.base, x) + a.lambda.value(x)) / denom);
        }
        L.coeff_A = Profile::spline(std::move(xs), std::move(ys));
    }
    return L;
}

double pde_residual(const LichnerowiczData& L, const BaseAnsatz& base, double xi) {
    const Jet2 U = L.u.eval_jet2(xi);
    if (!(U.v > 0.0)) throw NonpositiveU("u must be positive");
    const double drift = drifted_laplacian(base, L.w, L.u, xi);
    return L.sigma * drift + L.coeff_A.value(xi) * U.v -
           L.coeff_B * std::pow(U.v, L.epsilon);
}

double general_pde_residual(const BaseAnsatz& base, const Profile& phi, const Profile& u,
                            const Profile& A, double B, double eps, double xi) {
    const Jet2 U = u.eval_jet2(xi);
    if (!(U.v > 0.0)) throw NonpositiveU("u must be positive");
    const double drift = drifted_laplacian(base, phi, u, xi);
    return drift + A.value(xi) * U.v + B * std::pow(U.v, eps);
}

}  // namespace einwarp
