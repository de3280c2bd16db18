#include "einwarp/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace einwarp {

namespace {

std::vector<double> ball_grid(double x0, double half_width, int count) {
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(count));
    const double lo = x0 - half_width, hi = x0 + half_width;
    const double dx = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) xs.push_back(i == count - 1 ? hi : lo + i * dx);
    return xs;
}

}  // namespace

EstimateConfig suggest_config(const BaseAnsatz& base, const Profile& phi, const Profile& u,
                              double R, double x0, double p, int grid) {
    base.validate();
    if (R < 2.0) throw InvalidEstimateConfig("ball radius must be at least 2");
    if (!(p > 0.0)) throw InvalidEstimateConfig("p must be positive");
    const double sa = std::sqrt(base.alpha_norm_sq);

    EstimateConfig cfg;
    cfg.R = R;
    cfg.x0 = x0;
    cfg.p = p;
    cfg.grid = grid;

    double sup_ln_u = -std::numeric_limits<double>::infinity();
    double sup_u = 0.0;
    double min_eig = std::numeric_limits<double>::infinity();
    for (const double x : ball_grid(x0, sa * R, grid)) {
        const double uv = u.value(x);
        if (!(uv > 0.0)) throw NonpositiveU("u must be positive on the ball");
        sup_ln_u = std::max(sup_ln_u, std::log(uv));
        sup_u = std::max(sup_u, uv);
        const auto [par, perp] = bakry_emery_eigs(base, phi, x);
        min_eig = std::min({min_eig, par, perp});
    }
    cfg.delta = 1.0;
    cfg.q = cfg.delta + p * sup_ln_u;
    cfg.D = sup_u;
    cfg.K = std::max(0.0, -min_eig / (base.n - 1));

    // two intersections of the unit sphere with the ansatz line; on the flat
    // base Delta_phi r = (n-1)/r - phi' <abar, grad r> there
    const double dplus = (base.n - 1) - sa * phi.eval_jet2(x0 + sa).d1;
    const double dminus = (base.n - 1) + sa * phi.eval_jet2(x0 - sa).d1;
    cfg.gamma = std::max(dplus, dminus);
    return cfg;
}

EstimateResult empirical_estimate(const EstimateConfig& cfg, const BaseAnsatz& base,
                                  const Profile& phi, const Profile& u, const Profile& A,
                                  double B, double eps) {
    base.validate();
    if (cfg.R < 2.0) throw InvalidEstimateConfig("ball radius must be at least 2");
    if (!(cfg.p > 0.0)) throw InvalidEstimateConfig("p must be positive");
    if (!(cfg.delta > 0.0)) throw InvalidEstimateConfig("delta must be positive");

    const double sa = std::sqrt(base.alpha_norm_sq);
    const std::vector<double> ball = ball_grid(cfg.x0, sa * cfg.R, cfg.grid);

    // the estimate concerns solutions: reject data that does not solve the PDE
    double sup_residual = 0.0;
    for (const double x : ball)
        sup_residual = std::max(sup_residual, std::abs(general_pde_residual(base, phi, u, A, B, eps, x)));
    if (sup_residual > cfg.solution_tol)
        throw NotASolution("PDE residual " + std::to_string(sup_residual) +
                           " exceeds the solution tolerance");

    // ball-wide suprema entering the bracket
    double sup_grad_A = 0.0, sup_B_term = 0.0, sup_u_pow = 0.0;
    for (const double x : ball) {
        const Jet2 Aj = A.eval_jet2(x);
        const Jet2 P = base.psi.eval_jet2(x);
        sup_grad_A = std::max(sup_grad_A, sa * P.v * std::abs(Aj.d1));
        const double uv = u.value(x);
        if (!(uv > 0.0)) throw NonpositiveU("u must be positive on the ball");
        const double qp = cfg.q - cfg.p * std::log(uv);
        if (!(qp >= cfg.delta))
            throw InvalidEstimateConfig("q - p ln u fell below delta on the ball");
        if (uv > cfg.D * (1.0 + 1e-12))
            throw InvalidEstimateConfig("u exceeds the certified bound D on the ball");
        const double bterm = (eps - 1.0 + cfg.p / qp) * B;
        sup_B_term = std::max(sup_B_term, std::max(bterm, 0.0));
        sup_u_pow = std::max(sup_u_pow, std::pow(uv, 0.5 * (eps - 1.0)));
    }

    const double const_terms = 1.0 / cfg.R + std::sqrt(cfg.K) +
                               std::sqrt(std::max(cfg.gamma, 0.0)) / std::sqrt(cfg.R) +
                               std::cbrt(sup_grad_A) + std::sqrt(sup_B_term) * sup_u_pow;

    EstimateResult res;
    for (const double x : ball_grid(cfg.x0, sa * cfg.R / 2.0, cfg.grid)) {
        const Jet2 U = u.eval_jet2(x);
        const Jet2 P = base.psi.eval_jet2(x);
        EstimateRow row;
        row.xi = x;
        row.u = U.v;
        row.grad_ln_u = sa * P.v * std::abs(U.d1 / U.v);
        const double Aplus = std::max(A.value(x), 0.0);
        row.bracket = const_terms + std::sqrt(Aplus);
        res.lhs_sup = std::max(res.lhs_sup, row.grad_ln_u);
        res.bracket_sup = std::max(res.bracket_sup, row.bracket);
        res.rows.push_back(row);
    }
    if (res.lhs_sup == 0.0) {
        res.empirical_C = 0.0;
        for (auto& r : res.rows) r.local_C = 0.0;
        return res;
    }
    for (auto& row : res.rows) {
        const double qp = cfg.q - cfg.p * std::log(row.u);
        if (row.bracket <= 0.0 && row.grad_ln_u > 0.0)
            throw BracketZero("every bracket term vanished while |grad ln u| > 0");
        row.local_C = row.bracket > 0.0 ? row.grad_ln_u / (qp * row.bracket) : 0.0;
        res.empirical_C = std::max(res.empirical_C, row.local_C);
    }
    return res;
}

const char* to_string(GrowthVerdict v) {
    switch (v) {
        case GrowthVerdict::DecayingToZero: return "decaying-to-zero";
        case GrowthVerdict::BoundedNonzero: return "bounded-nonzero";
        case GrowthVerdict::Growing: return "growing";
    }
    return "?";
}

GrowthReport growth_probe(const Profile& f, double xi_lo, double xi_hi, int samples) {
    if (!(xi_lo > 0.0) || !(xi_hi > xi_lo))
        throw OutOfDomain("growth probe needs 0 < xi_lo < xi_hi");
    if (samples < 4) samples = 4;

    GrowthReport rep;
    const double ratio = std::pow(xi_hi / xi_lo, 1.0 / (samples - 1));
    double t = xi_lo;
    for (int i = 0; i < samples; ++i) {
        const double x = (i == samples - 1) ? xi_hi : t;
        const double fv = f.value(x);
        if (!(fv > 0.0)) throw NonpositiveProfile("growth probe needs f > 0");
        rep.xi.push_back(x);
        rep.q.push_back(std::abs(std::log(fv)) / std::sqrt(x));
        t *= ratio;
    }

    double qmax = 0.0;
    for (const double q : rep.q) qmax = std::max(qmax, q);
    if (qmax < 1e-12) {
        rep.verdict = GrowthVerdict::DecayingToZero;
        rep.slope = 0.0;
        return rep;
    }

    // least-squares slope of ln q against ln xi, skipping near-zero samples
    // (f crossing 1 makes isolated q vanish)
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int used = 0;
    for (std::size_t i = 0; i < rep.q.size(); ++i) {
        if (rep.q[i] < 1e-14 * qmax) continue;
        const double lx = std::log(rep.xi[i]);
        const double ly = std::log(rep.q[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++used;
    }
    if (used < 2) {
        rep.verdict = GrowthVerdict::DecayingToZero;
        return rep;
    }
    rep.slope = (used * sxy - sx * sy) / (used * sxx - sx * sx);
    if (rep.slope > 0.05)
        rep.verdict = GrowthVerdict::Growing;
    else if (rep.slope < -0.05)
        rep.verdict = GrowthVerdict::DecayingToZero;
    else
        rep.verdict = GrowthVerdict::BoundedNonzero;
    return rep;
}

const char* to_string(Sign s) {
    switch (s) {
        case Sign::Negative: return "-";
        case Sign::Zero: return "0";
        case Sign::Positive: return "+";
    }
    return "?";
}

const char* to_string(GrowthStatus s) {
    switch (s) {
        case GrowthStatus::VerifiedOnRange: return "verified-on-range";
        case GrowthStatus::Asserted: return "asserted";
        case GrowthStatus::Violated: return "violated";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Rigid: return "Rigid";
        case Verdict::Nonexistent: return "Nonexistent";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

Sign sign_from_string(const std::string& s) {
    if (s == "-" || s == "negative") return Sign::Negative;
    if (s == "0" || s == "zero") return Sign::Zero;
    if (s == "+" || s == "positive") return Sign::Positive;
    throw ParseError("unknown sign: " + s);
}

GrowthStatus growth_status_from_string(const std::string& s) {
    for (GrowthStatus g : {GrowthStatus::VerifiedOnRange, GrowthStatus::Asserted,
                           GrowthStatus::Violated})
        if (s == to_string(g)) return g;
    throw ParseError("unknown growth status: " + s);
}

RigidityVerdict classify_rigidity(const RigidityHypotheses& h) {
    const bool side = h.ricci_w_nonneg && h.growth_ok != GrowthStatus::Violated &&
                      h.gradient_decay;

    const auto is = [&](Sign a, Sign bf) { return h.sign_A == a && h.sign_BF == bf; };

    std::string clause;
    Verdict v = Verdict::Undetermined;
    if (h.sign_sigma == Sign::Positive) {
        if (is(Sign::Negative, Sign::Negative))
            v = Verdict::Rigid, clause = "rigidity (a)";
        else if (is(Sign::Zero, Sign::Zero))
            v = Verdict::Rigid, clause = "rigidity (a), zero variant";
        else if ((h.sign_A != Sign::Positive && h.sign_BF == Sign::Positive))
            v = Verdict::Nonexistent, clause = "nonexistence (a)";
        else if (is(Sign::Zero, Sign::Negative))
            v = Verdict::Nonexistent, clause = "nonexistence (a), zero variant";
    } else if (h.sign_sigma == Sign::Negative) {
        if (is(Sign::Positive, Sign::Positive))
            v = Verdict::Rigid, clause = "rigidity (b)";
        else if (is(Sign::Zero, Sign::Zero))
            v = Verdict::Rigid, clause = "rigidity (b), zero variant";
        else if ((h.sign_A != Sign::Negative && h.sign_BF == Sign::Negative))
            v = Verdict::Nonexistent, clause = "nonexistence (b)";
        else if (is(Sign::Zero, Sign::Positive))
            v = Verdict::Nonexistent, clause = "nonexistence (b), zero variant";
    }

    if (v == Verdict::Undetermined)
        return {v, "no classifier rule covers this sign pattern"};
    if (!side)
        return {Verdict::Undetermined,
                clause + " matched, but a side condition (Ric_w >= 0, growth, decay) is unmet"};
    return {v, clause};
}

PresetResult soliton_preset(const std::string& name, int n, int m) {
    const int d = n + m;
    if (d < 3) throw BadCoefficients("presets need total dimension at least 3");
    PresetResult r;
    if (name == "ricci") {
        r.params = {1.0, 1.0, 0.0, 0.0};
        r.lambda_role = "soliton constant: 0 steady, < 0 expanding, > 0 shrinking";
    } else if (name == "einstein-manifold") {
        r.params = {1.0, 1.0, 0.0, 0.0};
        r.h_constant = true;
        r.lambda_role = "Einstein constant lambda = R_g / d; beta is irrelevant";
    } else if (name == "einstein-soliton") {
        r.params = {1.0, 1.0, 0.0, 0.5};
        r.lambda_role = "rho-Einstein soliton function with rho = 1/2";
    } else if (name == "traceless") {
        r.params = {1.0, 1.0, 0.0, 1.0 / d};
        r.lambda_role = "rho-Einstein soliton function with rho = 1/d";
    } else if (name == "schouten") {
        r.params = {1.0, 1.0, 0.0, 1.0 / (2.0 * (d - 1))};
        r.lambda_role = "rho-Einstein soliton function with rho = 1/(2(d-1))";
    } else {
        throw UnknownPreset("unknown soliton preset: " + name);
    }
    return r;
}

}  // namespace einwarp
