#include "einwarp/geometry.hpp"

#include <cmath>

namespace einwarp {

RankOneIso conformal_ricci(const BaseAnsatz& base, double xi) {
    const Jet2 P = base.psi.eval_jet2(xi);
    const double a = base.alpha_norm_sq;
    RankOneIso r;
    r.rank1 = (base.n - 2) * P.d2 / P.v;
    r.iso = a * (P.v * P.d2 - (base.n - 1) * P.d1 * P.d1) / (P.v * P.v);
    return r;
}

double conformal_scalar(const BaseAnsatz& base, double xi) {
    const Jet2 P = base.psi.eval_jet2(xi);
    return base.alpha_norm_sq * (base.n - 1) *
           (2.0 * P.v * P.d2 - base.n * P.d1 * P.d1);
}

RankOneIso conformal_hessian(const BaseAnsatz& base, const Profile& p, double xi) {
    const Jet2 P = base.psi.eval_jet2(xi);
    const Jet2 u = p.eval_jet2(xi);
    RankOneIso r;
    r.rank1 = u.d2 + 2.0 * (P.d1 / P.v) * u.d1;
    r.iso = -base.alpha_norm_sq * (P.d1 / P.v) * u.d1;
    return r;
}

double conformal_laplacian(const BaseAnsatz& base, const Profile& p, double xi) {
    const Jet2 P = base.psi.eval_jet2(xi);
    const Jet2 u = p.eval_jet2(xi);
    return base.alpha_norm_sq * P.v * P.v *
           (u.d2 - (base.n - 2) * (P.d1 / P.v) * u.d1);
}

double grad_inner(const BaseAnsatz& base, const Profile& p, const Profile& q, double xi) {
    const Jet2 P = base.psi.eval_jet2(xi);
    const Jet2 u = p.eval_jet2(xi);
    const Jet2 w = q.eval_jet2(xi);
    // the derivative product is grouped first so that swapping p and q is
    // exact, not just up to rounding
    return base.alpha_norm_sq * (P.v * P.v) * (u.d1 * w.d1);
}

double scalar_braces(const BaseAnsatz& base, const Profile& f, double xi, int m,
                     double theta, bool include_fiber) {
    const Jet2 P = base.psi.eval_jet2(xi);
    const Jet2 F = f.eval_jet2(xi);
    if (!(F.v > 0.0)) throw NonpositiveWarp("warping function is not positive");
    const int n = base.n;
    double s = (n - 1) * (2.0 * P.v * P.d2 - n * P.d1 * P.d1) -
               2.0 * m * P.v * P.v * (F.d2 / F.v - (n - 2) * (P.d1 / P.v) * (F.d1 / F.v)) -
               m * (m - 1) * P.v * P.v * (F.d1 / F.v) * (F.d1 / F.v);
    if (include_fiber) s += m * theta / (base.alpha_norm_sq * F.v * F.v);
    return s;
}

double warped_scalar(const WarpedAnsatz& a, double xi, bool include_fiber) {
    return a.base.alpha_norm_sq *
           scalar_braces(a.base, a.f, xi, a.fiber.m, a.fiber.theta, include_fiber);
}

double drifted_laplacian(const BaseAnsatz& base, const Profile& w, const Profile& u,
                         double xi) {
    return conformal_laplacian(base, u, xi) - grad_inner(base, w, u, xi);
}

std::pair<double, double> bakry_emery_eigs(const BaseAnsatz& base, const Profile& w,
                                           double xi) {
    base.validate();
    const RankOneIso ric = conformal_ricci(base, xi);
    const RankOneIso hes = conformal_hessian(base, w, xi);
    const double rank1 = ric.rank1 + hes.rank1;
    const double iso = ric.iso + hes.iso;
    const Jet2 P = base.psi.eval_jet2(xi);
    // raise an index with g_B^{-1} = psi^2 delta: the abar direction carries
    // rank1*|abar|^2 + iso, the orthogonal complement carries iso
    const double psi2 = P.v * P.v;
    const double lambda_parallel = psi2 * (rank1 * base.alpha_norm_sq + iso);
    const double lambda_perp = psi2 * iso;
    return {lambda_parallel, lambda_perp};
}

}  // namespace einwarp
