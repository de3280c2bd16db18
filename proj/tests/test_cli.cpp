#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "einwarp/serialize.hpp"

#ifndef EINWARP_CLI_PATH
#error "EINWARP_CLI_PATH must point at the einwarp binary"
#endif

namespace {

using namespace einwarp;

struct RunResult {
    int exit_code;
    std::string out;
};

std::filesystem::path tmp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "einwarp-cli-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args) {
    const auto out_path = tmp_dir() / "stdout.txt";
    const std::string cmd =
        std::string(EINWARP_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

std::string write_file(const std::string& name, const std::string& content) {
    const auto path = tmp_dir() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

std::string exponential_warp_spec_json(double dh0) {
    ConstructionSpec s;
    s.base = {3, 1.0, Profile::constant(1.0)};
    s.f = Profile::exponential(1.0, 1.0);
    s.params = {1.0, std::sqrt(2.0), 1.0, -1.0};
    s.m = 2;
    s.initial = {0.0, 0.0, dh0};
    s.grid = {-2.0, 2.0, 401};
    json j = construction_to_json(s);
    j["fiber"] = fiber_to_json({2, 0.0, FiberChart::Euclidean});
    return j.dump();
}

}  // namespace

TEST(Cli, VerifyCatalogEntryPasses) {
    const RunResult r = run_cli("verify ex1");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("verdict"), "pass");
    EXPECT_LT(j.at("per_equation").at("ode1").at("sup_abs_residual").get<double>(), 1e-9);
}

TEST(Cli, VerifyLiteralConventionAgreesForZeroTheta) {
    EXPECT_EQ(run_cli("verify ex5 --literal-prop2").exit_code, 0);
}

TEST(Cli, VerifyRejectsMalformedJson) {
    const std::string bad = write_file("bad.json", "{ this is not json");
    EXPECT_EQ(run_cli("verify " + bad).exit_code, 1);
}

TEST(Cli, VerifyUnknownIdFails) {
    EXPECT_EQ(run_cli("verify no-such-entry").exit_code, 1);
}

TEST(Cli, VerifyFailsAPerturbedFile) {
    WarpedAnsatz a = make_ex1(3, 2);
    a.lambda = Profile::constant(-5.0);
    json j = ansatz_to_json(a);
    j["grid"] = grid_to_json({-2.0, 2.0, 101});
    const std::string path = write_file("shifted.json", json(j).dump());
    EXPECT_EQ(run_cli("verify " + path).exit_code, 2);
}

TEST(Cli, ConstructRoundTripsThroughVerify) {
    const std::string spec = write_file("spec.json", exponential_warp_spec_json(std::sqrt(2.0)));
    const auto out = tmp_dir() / "constructed.json";
    const RunResult r = run_cli("construct " + spec + " --out " + out.string());
    EXPECT_EQ(r.exit_code, 0) << r.out;

    // feed the produced ansatz back into verify
    std::ifstream in(out);
    std::ostringstream ss;
    ss << in.rdbuf();
    const json produced = json::parse(ss.str());
    json verifiable = produced.at("ansatz");
    verifiable["grid"] = grid_to_json({-2.0, 2.0, 401});
    const std::string path = write_file("constructed-ansatz.json", verifiable.dump());
    EXPECT_EQ(run_cli("verify " + path + " --tol 1e-6").exit_code, 0);
}

TEST(Cli, ConstructDetectsFiberMismatch) {
    const std::string spec = write_file("spec-theta.json", exponential_warp_spec_json(std::sqrt(2.0)));
    const RunResult r = run_cli("construct " + spec + " --fiber-theta 1 --fiber-chart none");
    EXPECT_EQ(r.exit_code, 4);
}

TEST(Cli, ConstructReportsRiccatiEscape) {
    ConstructionSpec s;
    s.base = {3, 1.0, Profile::constant(1.0)};
    s.f = Profile::exponential(1.0, 1.0);
    s.params = {1.0, std::sqrt(2.0), -1.0, -1.0};  // mu < 0: tangent escape
    s.m = 2;
    s.initial = {0.0, 0.0, 0.0};
    s.grid = {0.0, 2.0, 101};
    const std::string spec = write_file("blowup.json", construction_to_json(s).dump());
    const RunResult r = run_cli("construct " + spec);
    EXPECT_EQ(r.exit_code, 3);
}

TEST(Cli, ClassifySteadySolitonCannotExist) {
    const RunResult r = run_cli("classify --preset ricci --steady --fiber-scalar 1");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("verdict"), "Nonexistent");
}

TEST(Cli, ClassifyExpandingSolitonIsRigid) {
    const RunResult r =
        run_cli("classify --preset ricci --expanding --fiber-scalar -1 --ricci-w-nonneg");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("verdict"), "Rigid");
    EXPECT_EQ(j.at("clause"), "rigidity (a)");
}

TEST(Cli, ClassifyMissingFiberScalarIsIncomplete) {
    EXPECT_EQ(run_cli("classify --preset ricci --steady").exit_code, 1);
}

TEST(Cli, ClassifyFromHypothesesFile) {
    const json h = {{"sign_sigma", "-"},       {"sign_A", "+"},
                    {"sign_BF", "+"},          {"ricci_w_nonneg", true},
                    {"growth_ok", "asserted"}, {"gradient_decay", true}};
    const std::string path = write_file("hyp.json", h.dump());
    const RunResult r = run_cli("classify --file " + path);
    EXPECT_EQ(r.exit_code, 0) << r.out;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("verdict"), "Rigid");
    EXPECT_EQ(j.at("clause"), "rigidity (b)");

    json incomplete = h;
    incomplete.erase("sign_BF");
    const std::string bad = write_file("hyp-bad.json", incomplete.dump());
    EXPECT_EQ(run_cli("classify --file " + bad).exit_code, 1);
}

TEST(Cli, EstimateEmitsFiniteConstants) {
    const RunResult r = run_cli("estimate ex1-lich --R 4");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    std::istringstream lines(r.out);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    EXPECT_EQ(header, "xi,u,grad_ln_u,bracket,local_C");
    double xi, u, g, b, c;
    ASSERT_EQ(std::sscanf(first.c_str(), "%lf,%lf,%lf,%lf,%lf", &xi, &u, &g, &b, &c), 5);
    EXPECT_TRUE(std::isfinite(c));
    EXPECT_GT(c, 0.0);
    EXPECT_NEAR(g, 1.6, 1e-12);
}

TEST(Cli, EstimateRefusesCurvedBases) {
    EXPECT_EQ(run_cli("estimate ex2 --R 4").exit_code, 1);
}

TEST(Cli, EstimateSweepTableOverRadii) {
    const RunResult r = run_cli("estimate ex1 --sweep-R 2 --sweep-R 4 --sweep-R 8");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header, "R,lhs_sup,bracket_sup,empirical_C");
    int rows = 0;
    for (std::string line; std::getline(lines, line) && !line.empty(); ++rows) {
        double R, lhs, br, c;
        ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &R, &lhs, &br, &c), 4);
        EXPECT_NEAR(lhs, 1.6, 1e-12);
        EXPECT_TRUE(std::isfinite(c));
    }
    EXPECT_EQ(rows, 3);
}

TEST(Cli, EstimateInteriorBallOnTheHalfSpaceEntry) {
    // u = xi^3 with a nonzero nonlinear coefficient; the ball must stay
    // inside the domain
    const RunResult r = run_cli("estimate incomplete1 --R 2 --x0 2.5");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    std::istringstream lines(r.out);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    double xi, u, g, b, c;
    ASSERT_EQ(std::sscanf(first.c_str(), "%lf,%lf,%lf,%lf,%lf", &xi, &u, &g, &b, &c), 5);
    EXPECT_DOUBLE_EQ(g, 2.0);  // |grad ln xi^3| = 3/xi at xi = 1.5
    // default center puts the ball outside the half space
    EXPECT_EQ(run_cli("estimate incomplete1 --R 2").exit_code, 1);
}

TEST(Cli, EstimateJsonCarriesTheConfig) {
    const RunResult r = run_cli("estimate ex1 --R 4 --json");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    const json j = json::parse(r.out);
    EXPECT_NEAR(j.at("lhs_sup").get<double>(), 1.6, 1e-12);
    EXPECT_EQ(j.at("config").at("R").get<double>(), 4.0);
    EXPECT_GT(j.at("rows").size(), 100u);
}

TEST(Cli, ExportRowCountMatchesTheGrid) {
    const RunResult r = run_cli("export ex2 --grid 0.1:10:400");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 401);  // header + 400 rows
}

TEST(Cli, ListShowsTheCatalog) {
    const RunResult r = run_cli("list");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("ex1"), std::string::npos);
    EXPECT_NE(r.out.find("ex5"), std::string::npos);
    const RunResult rj = run_cli("list --json");
    const json j = json::parse(rj.out);
    EXPECT_GE(j.size(), 7u);
}
