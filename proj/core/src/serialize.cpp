#include "einwarp/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace einwarp {

namespace {

json interval_to_json(const Interval& d) {
    json j = json::array();
    j.push_back(std::isfinite(d.lo) ? json(d.lo) : json());
    j.push_back(std::isfinite(d.hi) ? json(d.hi) : json());
    return j;
}

void apply_interval(Profile& p, const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("domain must be [lo, hi]");
    const double lo = j[0].is_null() ? -std::numeric_limits<double>::infinity()
                                     : j[0].get<double>();
    const double hi = j[1].is_null() ? std::numeric_limits<double>::infinity()
                                     : j[1].get<double>();
    if (std::isfinite(lo) || std::isfinite(hi)) p = p.restricted(lo, hi);
}

void append17(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

}  // namespace

json profile_to_json(const Profile& p) {
    json j;
    j["kind"] = to_string(p.kind());
    switch (p.kind()) {
        case ProfileKind::Spline:
            j["xs"] = p.knots_x();
            j["ys"] = p.knots_y();
            if (p.is_hermite()) {
                j["d1"] = p.knots_d1();
                j["d2"] = p.knots_d2();
            }
            break;
        case ProfileKind::Composite: {
            j["op"] = to_string(p.op());
            if (!p.coeffs().empty()) j["coeffs"] = p.coeffs();
            json ch = json::array();
            for (const auto& c : p.children()) ch.push_back(profile_to_json(c));
            j["children"] = ch;
            break;
        }
        default:
            j["coeffs"] = p.coeffs();
    }
    j["domain"] = interval_to_json(p.domain());
    return j;
}

Profile profile_from_json(const json& j) {
    try {
        const ProfileKind kind = profile_kind_from_string(j.at("kind").get<std::string>());
        Profile p = Profile::constant(0.0);
        switch (kind) {
            case ProfileKind::Spline: {
                const auto xs = j.at("xs").get<std::vector<double>>();
                const auto ys = j.at("ys").get<std::vector<double>>();
                if (j.contains("d1"))
                    p = Profile::hermite_spline(xs, ys, j.at("d1").get<std::vector<double>>(),
                                                j.at("d2").get<std::vector<double>>());
                else
                    p = Profile::spline(xs, ys);
                break;
            }
            case ProfileKind::Composite: {
                const CompositeOp op = composite_op_from_string(j.at("op").get<std::string>());
                std::vector<Profile> children;
                for (const auto& c : j.at("children")) children.push_back(profile_from_json(c));
                std::vector<double> coeffs;
                if (j.contains("coeffs")) coeffs = j.at("coeffs").get<std::vector<double>>();
                switch (op) {
                    case CompositeOp::Sum:
                        p = Profile::sum(coeffs, std::move(children));
                        break;
                    case CompositeOp::Product:
                        p = Profile::product(coeffs.empty() ? 1.0 : coeffs[0],
                                             std::move(children));
                        break;
                    case CompositeOp::Pow:
                        if (coeffs.size() != 1 || children.size() != 1)
                            throw ParseError("pow composite needs one child and one exponent");
                        p = Profile::pow_of(std::move(children[0]), coeffs[0]);
                        break;
                    case CompositeOp::Log:
                        if (children.size() != 1)
                            throw ParseError("log composite needs one child");
                        p = Profile::log_of(std::move(children[0]));
                        break;
                    case CompositeOp::Exp:
                        if (children.size() != 1)
                            throw ParseError("exp composite needs one child");
                        p = Profile::exp_of(std::move(children[0]));
                        break;
                    case CompositeOp::None:
                        throw ParseError("composite profile without an op");
                }
                break;
            }
            default:
                p = builtin(kind, j.at("coeffs").get<std::vector<double>>());
        }
        if (j.contains("domain")) apply_interval(p, j.at("domain"));
        return p;
    } catch (const json::exception& e) {
        throw ParseError(std::string("profile: ") + e.what());
    }
}

json params_to_json(const Params& p) {
    return {{"alpha", p.alpha}, {"beta", p.beta}, {"mu", p.mu}, {"rho", p.rho}};
}

Params params_from_json(const json& j) {
    try {
        return {j.at("alpha").get<double>(), j.at("beta").get<double>(),
                j.at("mu").get<double>(), j.at("rho").get<double>()};
    } catch (const json::exception& e) {
        throw ParseError(std::string("params: ") + e.what());
    }
}

json base_to_json(const BaseAnsatz& b) {
    return {{"n", b.n}, {"alpha_norm_sq", b.alpha_norm_sq}, {"psi", profile_to_json(b.psi)}};
}

BaseAnsatz base_from_json(const json& j) {
    try {
        return {j.at("n").get<int>(), j.at("alpha_norm_sq").get<double>(),
                profile_from_json(j.at("psi"))};
    } catch (const json::exception& e) {
        throw ParseError(std::string("base: ") + e.what());
    }
}

json fiber_to_json(const FiberData& f) {
    return {{"m", f.m}, {"theta", f.theta}, {"chart", to_string(f.chart)}};
}

FiberData fiber_from_json(const json& j) {
    try {
        return {j.at("m").get<int>(), j.at("theta").get<double>(),
                fiber_chart_from_string(j.at("chart").get<std::string>())};
    } catch (const json::exception& e) {
        throw ParseError(std::string("fiber: ") + e.what());
    }
}

json ansatz_to_json(const WarpedAnsatz& a) {
    return {{"base", base_to_json(a.base)},     {"fiber", fiber_to_json(a.fiber)},
            {"f", profile_to_json(a.f)},        {"h", profile_to_json(a.h)},
            {"lambda", profile_to_json(a.lambda)}, {"params", params_to_json(a.params)}};
}

WarpedAnsatz ansatz_from_json(const json& j) {
    try {
        WarpedAnsatz a{base_from_json(j.at("base")), fiber_from_json(j.at("fiber")),
                       profile_from_json(j.at("f")), profile_from_json(j.at("h")),
                       profile_from_json(j.at("lambda")), params_from_json(j.at("params"))};
        a.validate();
        return a;
    } catch (const json::exception& e) {
        throw ParseError(std::string("ansatz: ") + e.what());
    }
}

json grid_to_json(const GridSpec& g) {
    return {{"xi_min", g.xi_min}, {"xi_max", g.xi_max}, {"count", g.count}};
}

GridSpec grid_from_json(const json& j) {
    try {
        return {j.at("xi_min").get<double>(), j.at("xi_max").get<double>(),
                j.at("count").get<int>()};
    } catch (const json::exception& e) {
        throw ParseError(std::string("grid: ") + e.what());
    }
}

json report_to_json(const ResidualReport& r) {
    json eq = json::object();
    for (const auto& [name, stat] : r.per_equation)
        eq[name] = {{"sup_abs_residual", stat.sup_abs}, {"argmax_xi", stat.argmax_xi}};
    json theta;
    if (r.theta.defined)
        theta = {{"mean", r.theta.mean}, {"max_deviation", r.theta.max_deviation}};
    else
        theta = {{"mean", nullptr}, {"max_deviation", nullptr},
                 {"note", "alpha = m rho: see fiber_bracket"}};
    return {{"grid", grid_to_json(r.grid)},
            {"per_equation", eq},
            {"theta_constancy", theta},
            {"fiber_theta", r.fiber_theta},
            {"tolerance", r.tolerance},
            {"fiber_in_scalar", r.fiber_in_scalar},
            {"verdict", r.pass ? "pass" : "fail"}};
}

json construction_to_json(const ConstructionSpec& s) {
    return {{"base", base_to_json(s.base)},
            {"f", profile_to_json(s.f)},
            {"params", params_to_json(s.params)},
            {"m", s.m},
            {"initial", {{"xi0", s.initial.xi0}, {"h", s.initial.h0}, {"dh", s.initial.dh0}}},
            {"grid", grid_to_json(s.grid)},
            {"control",
             {{"tol", s.control.tol},
              {"max_step", s.control.max_step},
              {"v_cap", s.control.v_cap}}}};
}

ConstructionSpec construction_from_json(const json& j) {
    try {
        ConstructionSpec s;
        s.base = base_from_json(j.at("base"));
        s.f = profile_from_json(j.at("f"));
        s.params = params_from_json(j.at("params"));
        s.m = j.at("m").get<int>();
        const json& init = j.at("initial");
        s.initial = {init.at("xi0").get<double>(), init.at("h").get<double>(),
                     init.at("dh").get<double>()};
        s.grid = grid_from_json(j.at("grid"));
        if (j.contains("control")) {
            const json& c = j.at("control");
            if (c.contains("tol")) s.control.tol = c.at("tol").get<double>();
            if (c.contains("max_step")) s.control.max_step = c.at("max_step").get<double>();
            if (c.contains("v_cap")) s.control.v_cap = c.at("v_cap").get<double>();
        }
        return s;
    } catch (const json::exception& e) {
        throw ParseError(std::string("construction spec: ") + e.what());
    }
}

json hypotheses_to_json(const RigidityHypotheses& h) {
    return {{"sign_sigma", to_string(h.sign_sigma)},
            {"sign_A", to_string(h.sign_A)},
            {"sign_BF", to_string(h.sign_BF)},
            {"ricci_w_nonneg", h.ricci_w_nonneg},
            {"growth_ok", to_string(h.growth_ok)},
            {"gradient_decay", h.gradient_decay},
            {"ricci_w_provenance", h.ricci_w_grid_verified ? "grid-verified" : "user-asserted"}};
}

RigidityHypotheses hypotheses_from_json(const json& j) {
    RigidityHypotheses h;
    const auto need = [&](const char* key) -> const json& {
        if (!j.contains(key))
            throw IncompleteHypotheses(std::string("missing hypothesis field: ") + key);
        return j.at(key);
    };
    try {
        h.sign_sigma = sign_from_string(need("sign_sigma").get<std::string>());
        h.sign_A = sign_from_string(need("sign_A").get<std::string>());
        h.sign_BF = sign_from_string(need("sign_BF").get<std::string>());
        h.ricci_w_nonneg = need("ricci_w_nonneg").get<bool>();
        h.growth_ok = growth_status_from_string(need("growth_ok").get<std::string>());
        h.gradient_decay = need("gradient_decay").get<bool>();
        if (j.contains("ricci_w_provenance"))
            h.ricci_w_grid_verified =
                j.at("ricci_w_provenance").get<std::string>() == "grid-verified";
        return h;
    } catch (const json::exception& e) {
        throw ParseError(std::string("hypotheses: ") + e.what());
    }
}

json verdict_to_json(const RigidityVerdict& v, const RigidityHypotheses& h) {
    return {{"verdict", to_string(v.verdict)},
            {"clause", v.clause},
            {"hypotheses", hypotheses_to_json(h)}};
}

json estimate_to_json(const EstimateResult& r, const EstimateConfig& cfg) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"xi", row.xi},
                        {"u", row.u},
                        {"grad_ln_u", row.grad_ln_u},
                        {"bracket", row.bracket},
                        {"local_C", row.local_C}});
    return {{"lhs_sup", r.lhs_sup},
            {"bracket_sup", r.bracket_sup},
            {"empirical_C", r.empirical_C},
            {"config",
             {{"R", cfg.R},
              {"x0", cfg.x0},
              {"p", cfg.p},
              {"q", cfg.q},
              {"delta", cfg.delta},
              {"D", cfg.D},
              {"K", cfg.K},
              {"gamma", cfg.gamma}}},
            {"rows", rows}};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string estimate_csv(const EstimateResult& r) {
    std::string out = "xi,u,grad_ln_u,bracket,local_C\n";
    for (const auto& row : r.rows) {
        append17(out, row.xi);
        out += ',';
        append17(out, row.u);
        out += ',';
        append17(out, row.grad_ln_u);
        out += ',';
        append17(out, row.bracket);
        out += ',';
        append17(out, row.local_C);
        out += '\n';
    }
    return out;
}

std::string residual_csv(const WarpedAnsatz& a, const GridSpec& grid, bool fiber_in_scalar) {
    std::string out = "xi,residual_1,residual_2,residual_3,theta_implied\n";
    const double denom = a.params.alpha - a.fiber.m * a.params.rho;
    const bool theta_ok = std::abs(denom) > 1e-12 * std::max(1.0, std::abs(a.params.alpha));
    for (const double x : grid.points()) {
        append17(out, x);
        out += ',';
        append17(out, residual_ode1(a, x));
        out += ',';
        append17(out, residual_ode2(a, x, fiber_in_scalar));
        out += ',';
        append17(out, residual_ode3(a, x, fiber_in_scalar));
        out += ',';
        if (theta_ok)
            append17(out, implied_fiber_constant(a, x));
        else
            out += "nan";
        out += '\n';
    }
    return out;
}

}  // namespace einwarp
