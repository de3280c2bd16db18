#include "einwarp/solver.hpp"

#include <algorithm>
#include <cmath>

namespace einwarp {

void ConstructionSpec::validate() const {
    base.validate();
    params.validate();
    if (params.beta == 0.0)
        throw BadCoefficients("the potential equation is second order in h only through beta");
    if (m < 1) throw BadCoefficients("fiber dimension must be at least 1");
    if (!(grid.xi_min < grid.xi_max) || grid.count < 4)
        throw BadCoefficients("construction grid must be increasing with at least 4 points");
    if (initial.xi0 < grid.xi_min || initial.xi0 > grid.xi_max)
        throw BadCoefficients("initial point must lie inside the grid interval");
}

namespace {

// Cash-Karp tableau
constexpr double kC[6] = {0.0, 1.0 / 5.0, 3.0 / 10.0, 3.0 / 5.0, 1.0, 7.0 / 8.0};
constexpr double kA[6][5] = {
    {},
    {1.0 / 5.0},
    {3.0 / 40.0, 9.0 / 40.0},
    {3.0 / 10.0, -9.0 / 10.0, 6.0 / 5.0},
    {-11.0 / 54.0, 5.0 / 2.0, -70.0 / 27.0, 35.0 / 27.0},
    {1631.0 / 55296.0, 175.0 / 512.0, 575.0 / 13824.0, 44275.0 / 110592.0, 253.0 / 4096.0},
};
constexpr double kB5[6] = {37.0 / 378.0,  0.0, 250.0 / 621.0,
                           125.0 / 594.0, 0.0, 512.0 / 1771.0};

using Y = std::array<double, 2>;

Y axpy(const Y& y, double c, const Y& k) { return {y[0] + c * k[0], y[1] + c * k[1]}; }

/// One Cash-Karp step; returns the fifth-order advance and the gauge
/// |y5 - (y + h k1)| (a first-order error estimate, deliberately
/// conservative).
void ck_step(const Rhs2& rhs, double x, const Y& y, double h, Y& y5, double& gauge) {
    Y k[6];
    k[0] = rhs(x, y);
    for (int s = 1; s < 6; ++s) {
        Y ys = y;
        for (int j = 0; j < s; ++j) {
            ys[0] += h * kA[s][j] * k[j][0];
            ys[1] += h * kA[s][j] * k[j][1];
        }
        k[s] = rhs(x + kC[s] * h, ys);
    }
    y5 = y;
    for (int s = 0; s < 6; ++s) {
        y5[0] += h * kB5[s] * k[s][0];
        y5[1] += h * kB5[s] * k[s][1];
    }
    const Y ye = axpy(y, h, k[0]);
    gauge = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double sc = 1.0 + std::abs(y[i]);
        gauge = std::max(gauge, std::abs(y5[i] - ye[i]) / sc);
    }
}

}  // namespace

IntegrationResult integrate_adaptive(const Rhs2& rhs, double x0, const Y& y0,
                                     const std::vector<double>& outputs,
                                     const StepControl& control) {
    IntegrationResult out;
    if (outputs.empty()) return out;

    double span = 0.0;
    for (const double t : outputs) span = std::max(span, std::abs(t - x0));
    const double hmax = control.max_step > 0.0 ? control.max_step : std::max(span / 8.0, 1e-8);

    const auto sweep = [&](std::vector<double> targets, double dir) {
        IntegrationResult seg;
        if (targets.empty()) return seg;
        std::sort(targets.begin(), targets.end());
        if (dir < 0.0) std::reverse(targets.begin(), targets.end());

        double x = x0;
        Y y = y0;
        double h = std::min(hmax, std::max(span / 256.0, 1e-10));
        for (const double target : targets) {
            while (dir * (target - x) > 1e-14 * std::max(1.0, std::abs(target))) {
                double hs = std::min(h, dir * (target - x));
                Y y5;
                double gauge;
                ck_step(rhs, x, y, dir * hs, y5, gauge);
                if (gauge <= control.tol) {
                    x += dir * hs;
                    y = y5;
                    if (std::abs(y[1]) > control.v_cap)
                        throw BlowUp("slope escaped past the cap at xi = " + std::to_string(x),
                                     x);
                    if (hs >= h) {
                        const double grow =
                            gauge > 0.0 ? std::clamp(0.9 * std::sqrt(control.tol / gauge),
                                                     1.0, 5.0)
                                        : 5.0;
                        h = std::min(hmax, h * grow);
                    }
                } else {
                    const double shrink =
                        std::clamp(0.9 * std::sqrt(control.tol / gauge), 0.1, 0.9);
                    const double hnew = hs * shrink;
                    if (hnew <= 1e-15 * std::max(1.0, std::abs(x)))
                        throw Error("step size underflow during integration");
                    h = hnew;
                }
            }
            seg.xs.push_back(target);
            seg.ys.push_back(y);
        }
        return seg;
    };

    std::vector<double> fwd, bwd;
    bool want_x0 = false;
    for (const double t : outputs) {
        if (t > x0)
            fwd.push_back(t);
        else if (t < x0)
            bwd.push_back(t);
        else
            want_x0 = true;
    }
    // assemble in ascending order: backward targets reversed, x0, forward targets
    out = sweep(bwd, -1.0);
    std::reverse(out.xs.begin(), out.xs.end());
    std::reverse(out.ys.begin(), out.ys.end());
    if (want_x0) {
        out.xs.push_back(x0);
        out.ys.push_back(y0);
    }
    IntegrationResult f = sweep(fwd, +1.0);
    out.xs.insert(out.xs.end(), f.xs.begin(), f.xs.end());
    out.ys.insert(out.ys.end(), f.ys.begin(), f.ys.end());
    return out;
}

namespace {

/// Right-hand side of the potential equation as a first-order system in
/// (h, v = h'). Positivity of psi and f is enforced along the way.
Rhs2 potential_rhs(const ConstructionSpec& spec) {
    return [spec](double x, const std::array<double, 2>& y) -> std::array<double, 2> {
        const Jet2 P = spec.base.psi.eval_jet2(x);
        const Jet2 F = spec.f.eval_jet2(x);
        if (!(P.v > 0.0)) throw NonpositiveProfile("psi lost positivity at xi = " + std::to_string(x));
        if (!(F.v > 0.0)) throw NonpositiveProfile("f lost positivity at xi = " + std::to_string(x));
        const Params& p = spec.params;
        const int n = spec.base.n, m = spec.m;
        const double q = -p.alpha * (n - 2) * P.d2 / P.v + p.alpha * m * F.d2 / F.v +
                         2.0 * p.alpha * m * (F.d1 / F.v) * (P.d1 / P.v);
        const double v = y[1];
        const double dv = (q - 2.0 * p.beta * (P.d1 / P.v) * v - p.mu * v * v) / p.beta;
        return {v, dv};
    };
}

}  // namespace

std::vector<double> suggest_constant_slopes(const ConstructionSpec& spec) {
    spec.validate();
    if (spec.base.psi.kind() != ProfileKind::Constant) return {};
    const auto rhs = potential_rhs(spec);
    // probe Q at two points; constant-slope candidates only make sense when
    // the equation is autonomous in v
    const double qa = rhs(spec.grid.xi_min + 1e-3, {0.0, 0.0})[1] * spec.params.beta;
    const double qb = rhs(spec.grid.xi_max - 1e-3, {0.0, 0.0})[1] * spec.params.beta;
    if (std::abs(qa - qb) > 1e-9 * std::max(1.0, std::abs(qa))) return {};
    const double q = qa;
    const double mu = spec.params.mu;
    if (mu == 0.0) {
        if (q == 0.0) return {0.0};
        return {};
    }
    if (q / mu < 0.0) return {};
    const double r = std::sqrt(q / mu);
    return {r, -r};
}

Profile solve_potential(const ConstructionSpec& spec) {
    spec.validate();
    const auto rhs = potential_rhs(spec);

    std::vector<double> knots = spec.grid.points();
    knots.push_back(spec.initial.xi0);
    std::sort(knots.begin(), knots.end());
    // collapse knots that coincide up to rounding, else the spline rejects them
    const double span = spec.grid.xi_max - spec.grid.xi_min;
    knots.erase(std::unique(knots.begin(), knots.end(),
                            [span](double a, double b) {
                                return std::abs(b - a) <= 1e-12 * std::max(1.0, span);
                            }),
                knots.end());

    const IntegrationResult r =
        integrate_adaptive(rhs, spec.initial.xi0, {spec.initial.h0, spec.initial.dh0},
                           knots, spec.control);

    std::vector<double> hs(r.xs.size()), vs(r.xs.size()), dvs(r.xs.size());
    for (std::size_t i = 0; i < r.xs.size(); ++i) {
        hs[i] = r.ys[i][0];
        vs[i] = r.ys[i][1];
        dvs[i] = rhs(r.xs[i], r.ys[i])[1];
    }
    return Profile::hermite_spline(r.xs, std::move(hs), std::move(vs), std::move(dvs));
}

Profile derive_lambda(const BaseAnsatz& base, const Profile& f, const Profile& h,
                      const Params& params, int m, const GridSpec& grid,
                      bool fiber_in_scalar, double theta) {
    base.validate();
    const double a = base.alpha_norm_sq;
    const auto value = [&](double x) {
        const Jet2 P = base.psi.eval_jet2(x);
        const Jet2 F = f.eval_jet2(x);
        const Jet2 H = h.eval_jet2(x);
        if (!(F.v > 0.0)) throw NonpositiveWarp("warping function is not positive");
        const double lhs = params.alpha * P.v * P.d2 -
                           params.alpha * (base.n - 1) * P.d1 * P.d1 +
                           params.alpha * m * P.v * P.d1 * (F.d1 / F.v) -
                           params.beta * P.v * P.d1 * H.d1;
        const double s = scalar_braces(base, f, x, m, theta, fiber_in_scalar);
        return a * (lhs - params.rho * s);
    };

    const std::vector<double> xs = grid.points();
    if (xs.size() < 4) throw BadCoefficients("lambda derivation needs at least 4 grid points");
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = value(xs[i]);
    return Profile::spline(xs, std::move(ys));
}

ConstructResult construct(const ConstructionSpec& spec, const FiberData& fiber,
                          const VerifyOptions& opt) {
    spec.validate();
    fiber.validate();
    if (fiber.m != spec.m) throw BadCoefficients("fiber dimension disagrees with the construction spec");

    Profile h = solve_potential(spec);
    // lambda comes from the literal reduced equation (theta-free); the
    // caller's fiber then has to agree with the implied constant below
    Profile lam = derive_lambda(spec.base, spec.f, h, spec.params, spec.m, spec.grid,
                                opt.fiber_in_scalar, 0.0);

    ConstructResult res{
        WarpedAnsatz{spec.base, fiber, spec.f, std::move(h), std::move(lam), spec.params},
        {},
        {}};
    res.report = verify(res.ansatz, spec.grid, opt);

    if (res.report.theta.defined) {
        for (const double x : spec.grid.points())
            res.implied_theta.push_back(implied_fiber_constant(res.ansatz, x));
        const double scale = std::max(1.0, std::abs(res.report.theta.mean));
        const bool constant = res.report.theta.max_deviation <= opt.tol * scale;
        if (constant && std::abs(res.report.theta.mean - fiber.theta) > opt.tol * scale)
            throw FiberMismatch("construction implies fiber constant " +
                                    std::to_string(res.report.theta.mean) + ", got " +
                                    std::to_string(fiber.theta),
                                res.report.theta.mean);
    }
    return res;
}

}  // namespace einwarp
