#include "einwarp/catalog.hpp"

#include <cmath>

namespace einwarp {

WarpedAnsatz make_ex1(int n, int m) {
    WarpedAnsatz a;
    a.base = {n, 1.0, Profile::constant(1.0)};
    a.fiber = {m, 0.0, FiberChart::Euclidean};
    a.f = Profile::exponential(1.0, 1.0);
    a.h = Profile::linear(0.0, std::sqrt(static_cast<double>(m)));
    a.lambda = Profile::constant(static_cast<double>(-m * m - m));
    a.params = {1.0, std::sqrt(static_cast<double>(m)), 1.0, -1.0};
    return a;
}

WarpedAnsatz make_ex2(int n, int m, double alpha, double beta, double mu, double rho) {
    const int d = n + m;
    WarpedAnsatz a;
    a.base = {n, 1.0, Profile::linear(0.0, 1.0).restricted(0.0, 1e308)};
    a.fiber = {m, 0.0, FiberChart::Euclidean};
    a.f = Profile::power(1.0, 0.0, 1.0, -1.0);  // 1/x on x > 0
    a.h = Profile::log_affine({1.0, 1.0, 1.0, -1.0, 0.0, 1.0});  // ln(x+1) - ln(x)
    // 1 - alpha (d-1) - x/(x+1) + rho d (d-1), with -x/(x+1) = -1 + 1/(x+1)
    a.lambda = Profile::sum({1.0, 1.0},
                            {Profile::constant(-alpha * (d - 1) + rho * d * (d - 1)),
                             Profile::power(1.0, 1.0, 1.0, -1.0)});
    a.params = {alpha, beta, mu, rho};
    return a;
}

WarpedAnsatz make_ex4(int n, int m, double alpha, double beta, double rho) {
    if (rho != 0.0)
        throw BadCoefficients(
            "the catalog form of this entry carries the rho = 0 closed-form soliton function");
    const int d = n + m;
    WarpedAnsatz a;
    a.base = {n, 1.0, Profile::tanh(1.0, 1.0).restricted(0.0, 1e308)};
    a.fiber = {m, 0.0, FiberChart::Euclidean};
    a.f = Profile::coth(1.0, 1.0);
    a.h = Profile::sum({2.0 * alpha * (d - 2) / (3.0 * beta)},
                       {Profile::log_of(Profile::cosh(1.0, 1.0))});
    // -(alpha/3) sech^4 [2(d-2) + (d+1) cosh(2x)]
    a.lambda = Profile::sum(
        {-alpha * 2.0 * (d - 2) / 3.0, -alpha * (d + 1) / 3.0},
        {Profile::pow_of(Profile::sech(1.0, 1.0), 4.0),
         Profile::product(1.0, {Profile::pow_of(Profile::sech(1.0, 1.0), 4.0),
                                Profile::cosh(1.0, 2.0)})});
    a.params = {alpha, beta, 0.0, rho};
    return a;
}

WarpedAnsatz make_ex5(int n, int m, double alpha, double beta, double rho) {
    if (rho != 0.0)
        throw BadCoefficients(
            "the catalog form of this entry carries the rho = 0 closed-form soliton function");
    const int d = n + m;
    WarpedAnsatz a;
    a.base = {n, 1.0, Profile::sech(1.0, 1.0)};
    a.fiber = {m, 0.0, FiberChart::Euclidean};
    a.f = Profile::cosh(1.0, 1.0);
    a.h = Profile::sum({alpha * (d - 2) / beta}, {Profile::log_of(Profile::cosh(1.0, 1.0))});
    a.lambda = Profile::sum({-alpha}, {Profile::pow_of(Profile::sech(1.0, 1.0), 4.0)});
    a.params = {alpha, beta, beta * beta / (alpha * (d - 2)), rho};
    return a;
}

WarpedAnsatz make_incomplete1(int n, int m) {
    if (m <= 2) throw BadCoefficients("this entry needs fiber dimension m > 2");
    WarpedAnsatz a;
    a.base = {n, 1.0, Profile::constant(1.0)};
    a.fiber = {m, static_cast<double>(m - 2), FiberChart::None};
    a.f = Profile::linear(0.0, 1.0).restricted(0.0, 1e308);
    a.h = Profile::log_affine({-1.0, 0.0, 1.0});  // -ln(xi)
    a.lambda = Profile::constant(0.0);
    a.params = {1.0, -1.0, 1.0, 0.0};
    return a;
}

WarpedAnsatz make_exp_conformal(int n, int m) {
    const int d = n + m;
    WarpedAnsatz a;
    a.base = {n, 1.0, Profile::exponential(1.0, -1.0)};
    a.fiber = {m, 0.0, FiberChart::Euclidean};
    a.f = Profile::exponential(1.0, 1.0);
    a.h = Profile::linear(0.0, 0.5 * (d - 2));  // -((2-d)/2) xi
    a.lambda = Profile::sum({0.5 * (2.0 - d)}, {Profile::exponential(1.0, -2.0)});
    a.params = {1.0, 1.0, 0.0, 0.0};
    return a;
}

WarpedAnsatz make_flat_product(int n, int m) {
    WarpedAnsatz a;
    a.base = {n, 1.0, Profile::constant(1.0)};
    a.fiber = {m, 0.0, FiberChart::Euclidean};
    a.f = Profile::constant(1.0);
    a.h = Profile::constant(0.0);
    a.lambda = Profile::constant(0.0);
    a.params = {1.0, 1.0, 0.0, 0.0};
    return a;
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        v.push_back({"ex1",
                     "exponential warp over the flat base, Ricci-flat fiber",
                     "complete (both factors complete)",
                     make_ex1(3, 2),
                     {-2.0, 2.0, 401},
                     DegeneracyClass::Nondegenerate,
                     true});
        v.push_back({"ex2",
                     "hyperbolic base, f = 1/x on the half space, Ricci-flat fiber",
                     "complete (both factors complete)",
                     make_ex2(3, 2),
                     {0.1, 10.0, 401},
                     DegeneracyClass::Nondegenerate,
                     true});
        v.push_back({"ex4",
                     "coth warp over the tanh-conformal half space, mu = 0",
                     "complete (divergent-curve criterion)",
                     make_ex4(3, 2),
                     {0.1, 3.0, 401},
                     DegeneracyClass::Nondegenerate,
                     true});
        v.push_back({"ex5",
                     "cosh warp over the sech-conformal space, conformally Einstein",
                     "complete (distance dominates the euclidean one)",
                     make_ex5(3, 2),
                     {-3.0, 3.0, 401},
                     DegeneracyClass::Degenerate,
                     true});
        v.push_back({"incomplete1",
                     "linear warp on the half space, Einstein fiber with theta = m-2",
                     "not complete (a divergent curve has finite length)",
                     make_incomplete1(3, 3),
                     {0.5, 5.0, 401},
                     DegeneracyClass::Nondegenerate,
                     true});
        v.push_back({"exp-conformal",
                     "e^{2 xi}-conformal base recovered from the literature",
                     "not complete",
                     make_exp_conformal(3, 2),
                     {-2.0, 2.0, 401},
                     DegeneracyClass::Nondegenerate,
                     true});
        v.push_back({"flat",
                     "standard flat product, trivial data",
                     "complete",
                     make_flat_product(3, 2),
                     {-5.0, 5.0, 401},
                     DegeneracyClass::Nondegenerate,
                     true});
        return v;
    }();
    return entries;
}

const CatalogEntry& catalog_find(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    throw UnknownId("no catalog entry named '" + id + "'");
}

}  // namespace einwarp
