#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "einwarp/serialize.hpp"

namespace {

using namespace einwarp;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;
constexpr int kExitBlowUp = 3;
constexpr int kExitFiberMismatch = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write to " + out_path);
        out << text;
    }
}

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    const auto p1 = s.find(':');
    const auto p2 = s.find(':', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw ParseError("--grid expects a:b:n");
    try {
        g.xi_min = std::stod(s.substr(0, p1));
        g.xi_max = std::stod(s.substr(p1 + 1, p2 - p1 - 1));
        g.count = std::stoi(s.substr(p2 + 1));
    } catch (const std::exception&) {
        throw ParseError("--grid expects numeric a:b:n");
    }
    if (g.count < 2 || !(g.xi_min < g.xi_max)) throw ParseError("--grid must be increasing with n >= 2");
    return g;
}

/// Catalog id or JSON file on disk; returns the entry grid when available.
WarpedAnsatz load_ansatz(const std::string& input, std::optional<GridSpec>& grid) {
    if (std::filesystem::exists(input)) {
        const json j = parse_json(slurp(input));
        if (j.contains("grid")) grid = grid_from_json(j.at("grid"));
        if (j.contains("ansatz")) return ansatz_from_json(j.at("ansatz"));
        return ansatz_from_json(j);
    }
    const CatalogEntry& e = catalog_find(input);
    grid = e.default_grid;
    return e.ansatz;
}

GridSpec resolve_grid(const std::optional<GridSpec>& from_input, const std::string& flag,
                      const WarpedAnsatz& a) {
    if (!flag.empty()) return parse_grid(flag);
    if (from_input) return *from_input;
    const Interval dom = a.common_domain();
    if (dom.bounded()) {
        const double pad = (dom.hi - dom.lo) * 1e-6;
        return {dom.lo + pad, dom.hi - pad, 401};
    }
    throw ParseError("no grid: pass --grid a:b:n or embed one in the input");
}

int cmd_verify(const std::string& input, const std::string& grid_flag, double tol,
               bool literal_prop2, const std::string& out) {
    std::optional<GridSpec> g;
    const WarpedAnsatz a = load_ansatz(input, g);
    VerifyOptions opt;
    opt.tol = tol;
    opt.fiber_in_scalar = !literal_prop2;
    const ResidualReport rep = verify(a, resolve_grid(g, grid_flag, a), opt);
    emit(report_to_json(rep).dump(2), out);
    return rep.pass ? kExitOk : kExitFail;
}

int cmd_construct(const std::string& spec_path, std::optional<double> fiber_theta,
                  const std::string& fiber_chart, std::optional<int> fiber_m, double tol,
                  bool literal_prop2, const std::string& out) {
    const json j = parse_json(slurp(spec_path));
    const ConstructionSpec spec = construction_from_json(j);

    FiberData fiber;
    if (j.contains("fiber")) fiber = fiber_from_json(j.at("fiber"));
    else fiber = {spec.m, 0.0, FiberChart::Euclidean};
    if (fiber_m) fiber.m = *fiber_m;
    if (fiber_theta) fiber.theta = *fiber_theta;
    if (!fiber_chart.empty()) fiber.chart = fiber_chart_from_string(fiber_chart);

    VerifyOptions opt{tol};
    opt.fiber_in_scalar = !literal_prop2;
    const ConstructResult res = construct(spec, fiber, opt);

    json outj;
    outj["ansatz"] = ansatz_to_json(res.ansatz);
    outj["report"] = report_to_json(res.report);
    outj["implied_theta"] = res.implied_theta;
    emit(outj.dump(2), out);
    return res.report.pass ? kExitOk : kExitFail;
}

int cmd_classify(const std::string& file, const std::string& preset, int n, int m,
                 bool steady, bool expanding, bool shrinking,
                 std::optional<double> fiber_scalar, const std::string& a_sign,
                 const std::string& ricci_w, const std::string& growth, bool no_decay,
                 const std::string& out) {
    RigidityHypotheses h;
    json extra = json::object();

    if (!file.empty()) {
        h = hypotheses_from_json(parse_json(slurp(file)));
    } else if (!preset.empty()) {
        const PresetResult pr = soliton_preset(preset, n, m);
        extra["preset"] = preset;
        extra["params"] = params_to_json(pr.params);
        extra["lambda_role"] = pr.lambda_role;
        if (pr.h_constant) extra["h_constant"] = true;

        const double sigma = sigma_of(pr.params, m);
        h.sign_sigma = sigma > 0.0 ? Sign::Positive : Sign::Negative;

        if (!a_sign.empty()) {
            h.sign_A = sign_from_string(a_sign);
        } else if (steady) {
            h.sign_A = Sign::Zero;
        } else if (expanding) {
            h.sign_A = Sign::Negative;
        } else if (shrinking) {
            h.sign_A = Sign::Positive;
        } else {
            throw IncompleteHypotheses(
                "pass --A-sign, or --steady/--expanding/--shrinking for the soliton presets");
        }

        if (!fiber_scalar) throw IncompleteHypotheses("missing --fiber-scalar (sign of R_F)");
        const double bf = *fiber_scalar * (pr.params.alpha - m * pr.params.rho) /
                          (pr.params.alpha - 2.0 * m * pr.params.rho);
        h.sign_BF = bf > 0.0 ? Sign::Positive : bf < 0.0 ? Sign::Negative : Sign::Zero;

        // a preset invocation asserts the scenario's geometric side
        // conditions unless overridden below
        h.ricci_w_nonneg = true;
        h.growth_ok = GrowthStatus::Asserted;
        h.gradient_decay = true;
    } else {
        throw IncompleteHypotheses("pass --file or --preset");
    }

    if (!ricci_w.empty()) h.ricci_w_nonneg = (ricci_w == "yes");
    if (!growth.empty()) h.growth_ok = growth_status_from_string(growth);
    if (no_decay) h.gradient_decay = false;

    const RigidityVerdict v = classify_rigidity(h);
    json j = verdict_to_json(v, h);
    for (auto& [k, val] : extra.items()) j[k] = val;
    emit(j.dump(2), out);
    return kExitOk;
}

int cmd_estimate(const std::string& input, double R, double x0, double p, int grid_n,
                 const std::vector<double>& sweep, bool as_json, const std::string& out) {
    std::string id = input;
    if (id.size() > 5 && id.substr(id.size() - 5) == "-lich") id = id.substr(0, id.size() - 5);
    std::optional<GridSpec> g;
    const WarpedAnsatz a = load_ansatz(id, g);

    // the probe needs the flat-base closed form for distances
    bool flat = a.base.psi.kind() == ProfileKind::Constant;
    if (flat) flat = a.base.psi.value(0.0) == 1.0;
    if (!flat) throw UnsupportedBase("the estimate probe requires the flat base psi = 1");

    Interval range;
    if (g) range = {g->xi_min, g->xi_max, false, false};
    const LichnerowiczData L = build_lichnerowicz(a, g ? std::optional<Interval>(range)
                                                       : std::nullopt);
    const Profile A_gen = Profile::sum({1.0 / L.sigma}, {L.coeff_A});
    const double B_gen = -L.coeff_B / L.sigma;

    if (!sweep.empty()) {
        // empirical constant against the ball radius
        std::string csv = "R,lhs_sup,bracket_sup,empirical_C\n";
        char buf[120];
        for (const double r : sweep) {
            EstimateConfig cfg = suggest_config(a.base, L.w, L.u, r, x0, p, grid_n);
            const EstimateResult res = empirical_estimate(cfg, a.base, L.w, L.u, A_gen,
                                                          B_gen, L.epsilon);
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", r, res.lhs_sup,
                          res.bracket_sup, res.empirical_C);
            csv += buf;
        }
        emit(csv, out);
        return kExitOk;
    }

    EstimateConfig cfg = suggest_config(a.base, L.w, L.u, R, x0, p, grid_n);
    const EstimateResult res = empirical_estimate(cfg, a.base, L.w, L.u, A_gen, B_gen,
                                                  L.epsilon);
    if (as_json)
        emit(estimate_to_json(res, cfg).dump(2), out);
    else
        emit(estimate_csv(res), out);
    return kExitOk;
}

int cmd_export(const std::string& input, const std::string& grid_flag, bool literal_prop2,
               const std::string& out) {
    std::optional<GridSpec> g;
    const WarpedAnsatz a = load_ansatz(input, g);
    const GridSpec grid = resolve_grid(g, grid_flag, a);
    emit(residual_csv(a, grid, !literal_prop2), out);
    return kExitOk;
}

int cmd_list(bool as_json, const std::string& out) {
    if (as_json) {
        json arr = json::array();
        for (const auto& e : catalog_entries()) {
            const int d = e.ansatz.base.n + e.ansatz.fiber.m;
            arr.push_back({{"id", e.id},
                           {"provenance", e.provenance},
                           {"completeness", e.completeness},
                           {"n", e.ansatz.base.n},
                           {"m", e.ansatz.fiber.m},
                           {"params", params_to_json(e.ansatz.params)},
                           {"degeneracy", to_string(classify_degeneracy(e.ansatz.params, d))},
                           {"grid", grid_to_json(e.default_grid)}});
        }
        emit(arr.dump(2), out);
    } else {
        std::string text;
        for (const auto& e : catalog_entries()) {
            const int d = e.ansatz.base.n + e.ansatz.fiber.m;
            text += e.id + "  (n=" + std::to_string(e.ansatz.base.n) +
                    ", m=" + std::to_string(e.ansatz.fiber.m) + ", " +
                    to_string(classify_degeneracy(e.ansatz.params, d)) + ")\n    " +
                    e.provenance + "\n    " + e.completeness + "\n";
        }
        emit(text, out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) try {
    CLI::App app{"workbench for gradient Einstein-type warped metrics"};
    app.require_subcommand(1);

    std::string input, out, grid_flag, fiber_chart, preset, file, a_sign, ricci_w, growth;
    double tol = 1e-9, R = 4.0, x0 = 0.0, p = 1.0;
    std::optional<double> fiber_theta, fiber_scalar;
    std::vector<double> sweep_R;
    std::optional<int> fiber_m;
    int n = 3, m = 2, grid_n = 401;
    bool literal = false, as_json = false, steady = false, expanding = false,
         shrinking = false, no_decay = false;

    auto* verify_cmd = app.add_subcommand("verify", "evaluate the defining residuals");
    verify_cmd->add_option("input", input, "catalog id or ansatz JSON file")->required();
    verify_cmd->add_option("--grid", grid_flag, "evaluation grid a:b:n");
    verify_cmd->add_option("--tol", tol, "pass tolerance for the jet-exact residuals");
    verify_cmd->add_flag("--literal-prop2", literal, "drop the fiber term from the scalar braces");
    verify_cmd->add_option("--out", out, "write the report here instead of stdout");

    auto* construct_cmd = app.add_subcommand("construct", "integrate a new metric from a spec");
    construct_cmd->add_option("spec", input, "construction spec JSON file")->required();
    construct_cmd->add_option("--fiber-theta", fiber_theta, "Einstein constant of the fiber");
    construct_cmd->add_option("--fiber-chart", fiber_chart, "euclidean|sphere|hyperbolic|none");
    construct_cmd->add_option("--fiber-m", fiber_m, "fiber dimension");
    construct_cmd->add_option("--tol", tol, "verification tolerance (default 1e-6 for splines)");
    construct_cmd->add_flag("--literal-prop2", literal, "drop the fiber term from the scalar braces");
    construct_cmd->add_option("--out", out, "write ansatz + report here");

    auto* classify_cmd = app.add_subcommand("classify", "rigidity / nonexistence corollaries");
    classify_cmd->add_option("--file", file, "hypotheses JSON file");
    classify_cmd->add_option("--preset", preset,
                             "ricci|einstein-manifold|einstein-soliton|traceless|schouten");
    classify_cmd->add_option("--n", n, "base dimension");
    classify_cmd->add_option("--m", m, "fiber dimension");
    classify_cmd->add_flag("--steady", steady, "steady soliton (lambda = 0)");
    classify_cmd->add_flag("--expanding", expanding, "expanding soliton (lambda < 0)");
    classify_cmd->add_flag("--shrinking", shrinking, "shrinking soliton (lambda > 0)");
    classify_cmd->add_option("--fiber-scalar", fiber_scalar, "fiber scalar curvature R_F");
    classify_cmd->add_option("--A-sign", a_sign, "sign of (rho R_B + lambda)/(alpha-2m rho)");
    classify_cmd->add_option("--ricci-w", ricci_w, "yes|no: Bakry-Emery tensor nonnegative")
        ->check(CLI::IsMember({"yes", "no"}));
    classify_cmd->add_flag_callback("--ricci-w-nonneg", [&ricci_w] { ricci_w = "yes"; },
                                    "shorthand for --ricci-w yes");
    classify_cmd->add_option("--growth", growth, "verified-on-range|asserted|violated");
    classify_cmd->add_flag("--no-decay", no_decay, "drop the gradient-decay hypothesis");
    classify_cmd->add_option("--out", out, "write the verdict here");

    auto* estimate_cmd = app.add_subcommand("estimate", "empirical gradient-estimate probe");
    estimate_cmd->add_option("input", input, "catalog id (optionally with -lich suffix)")
        ->required();
    estimate_cmd->add_option("--R", R, "ball radius (>= 2)");
    estimate_cmd->add_option("--x0", x0, "ball center in xi");
    estimate_cmd->add_option("--p", p, "estimate parameter p > 0");
    estimate_cmd->add_option("--grid-n", grid_n, "grid resolution");
    estimate_cmd->add_option("--sweep-R", sweep_R,
                             "emit a CSV of the empirical constant over these radii");
    estimate_cmd->add_flag("--json", as_json, "JSON instead of CSV");
    estimate_cmd->add_option("--out", out, "write here instead of stdout");

    auto* export_cmd = app.add_subcommand("export", "residual grid as CSV for plotting");
    export_cmd->add_option("input", input, "catalog id or ansatz JSON file")->required();
    export_cmd->add_option("--grid", grid_flag, "evaluation grid a:b:n");
    export_cmd->add_flag("--literal-prop2", literal, "drop the fiber term from the scalar braces");
    export_cmd->add_option("--out", out, "write here instead of stdout");

    auto* list_cmd = app.add_subcommand("list", "show the example catalog");
    list_cmd->add_flag("--json", as_json, "JSON instead of text");
    list_cmd->add_option("--out", out, "write here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(input, grid_flag, tol, literal, out);
        if (app.got_subcommand(construct_cmd)) {
            if (!construct_cmd->count("--tol")) tol = 1e-6;
            return cmd_construct(input, fiber_theta, fiber_chart, fiber_m, tol, literal, out);
        }
        if (app.got_subcommand(classify_cmd))
            return cmd_classify(file, preset, n, m, steady, expanding, shrinking,
                                fiber_scalar, a_sign, ricci_w, growth, no_decay, out);
        if (app.got_subcommand(estimate_cmd))
            return cmd_estimate(input, R, x0, p, grid_n, sweep_R, as_json, out);
        if (app.got_subcommand(export_cmd))
            return cmd_export(input, grid_flag, literal, out);
        if (app.got_subcommand(list_cmd)) return cmd_list(as_json, out);
    } catch (const BlowUp& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBlowUp;
    } catch (const FiberMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFiberMismatch;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
} catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
}
