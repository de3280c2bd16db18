#include "einwarp/fdtensor.hpp"

#include <cmath>

namespace einwarp::fd {

Eigen::MatrixXd metric_partial(const MetricField& g, const Eigen::VectorXd& x, int k,
                               double step) {
    Eigen::VectorXd xp = x, xm = x;
    xp[k] += step;
    xm[k] -= step;
    return (g(xp) - g(xm)) / (2.0 * step);
}

std::vector<Eigen::MatrixXd> christoffel(const MetricField& g, const Eigen::VectorXd& x,
                                         double step) {
    const int d = static_cast<int>(x.size());
    std::vector<Eigen::MatrixXd> dg(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) dg[static_cast<std::size_t>(k)] = metric_partial(g, x, k, step);
    const Eigen::MatrixXd ginv = g(x).inverse();

    std::vector<Eigen::MatrixXd> gamma(static_cast<std::size_t>(d),
                                       Eigen::MatrixXd::Zero(d, d));
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                double s = 0.0;
                for (int l = 0; l < d; ++l)
                    s += ginv(k, l) * (dg[static_cast<std::size_t>(i)](j, l) +
                                       dg[static_cast<std::size_t>(j)](i, l) -
                                       dg[static_cast<std::size_t>(l)](i, j));
                gamma[static_cast<std::size_t>(k)](i, j) = 0.5 * s;
                gamma[static_cast<std::size_t>(k)](j, i) = 0.5 * s;
            }
    return gamma;
}

Eigen::MatrixXd ricci(const MetricField& g, const Eigen::VectorXd& x, double step) {
    const int d = static_cast<int>(x.size());
    // dgamma[c][k](i,j) = d_c Gamma^k_ij
    std::vector<std::vector<Eigen::MatrixXd>> dgamma(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
        Eigen::VectorXd xp = x, xm = x;
        xp[c] += step;
        xm[c] -= step;
        const auto gp = christoffel(g, xp, step);
        const auto gm = christoffel(g, xm, step);
        auto& row = dgamma[static_cast<std::size_t>(c)];
        row.resize(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k)
            row[static_cast<std::size_t>(k)] =
                (gp[static_cast<std::size_t>(k)] - gm[static_cast<std::size_t>(k)]) /
                (2.0 * step);
    }
    const auto gamma = christoffel(g, x, step);

    Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double r = 0.0;
            for (int k = 0; k < d; ++k) {
                r += dgamma[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)](i, j);
                r -= dgamma[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)](i, k);
                for (int l = 0; l < d; ++l) {
                    r += gamma[static_cast<std::size_t>(k)](k, l) *
                         gamma[static_cast<std::size_t>(l)](i, j);
                    r -= gamma[static_cast<std::size_t>(k)](j, l) *
                         gamma[static_cast<std::size_t>(l)](i, k);
                }
            }
            ric(i, j) = r;
        }
    return 0.5 * (ric + ric.transpose());
}

double scalar_curvature(const MetricField& g, const Eigen::VectorXd& x, double step) {
    const Eigen::MatrixXd ric = ricci(g, x, step);
    return (g(x).inverse() * ric).trace();
}

Eigen::VectorXd gradient_coords(const ScalarField& f, const Eigen::VectorXd& x, double step) {
    const int d = static_cast<int>(x.size());
    Eigen::VectorXd grad(d);
    for (int k = 0; k < d; ++k) {
        Eigen::VectorXd xp = x, xm = x;
        xp[k] += step;
        xm[k] -= step;
        grad[k] = (f(xp) - f(xm)) / (2.0 * step);
    }
    return grad;
}

Eigen::MatrixXd hessian(const MetricField& g, const ScalarField& f, const Eigen::VectorXd& x,
                        double step) {
    const int d = static_cast<int>(x.size());
    const double f0 = f(x);
    Eigen::MatrixXd hess(d, d);
    for (int i = 0; i < d; ++i) {
        Eigen::VectorXd xp = x, xm = x;
        xp[i] += step;
        xm[i] -= step;
        hess(i, i) = (f(xp) - 2.0 * f0 + f(xm)) / (step * step);
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Eigen::VectorXd xpp = x, xpm = x, xmp = x, xmm = x;
            xpp[i] += step; xpp[j] += step;
            xpm[i] += step; xpm[j] -= step;
            xmp[i] -= step; xmp[j] += step;
            xmm[i] -= step; xmm[j] -= step;
            const double v = (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4.0 * step * step);
            hess(i, j) = v;
            hess(j, i) = v;
        }
    const auto gamma = christoffel(g, x, step);
    const Eigen::VectorXd grad = gradient_coords(f, x, step);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                hess(i, j) -= gamma[static_cast<std::size_t>(k)](i, j) * grad[k];
    return hess;
}

double laplace_beltrami(const MetricField& g, const ScalarField& f, const Eigen::VectorXd& x,
                        double step) {
    return (g(x).inverse() * hessian(g, f, x, step)).trace();
}

Eigen::MatrixXd fiber_chart_metric(const FiberData& fiber, const Eigen::VectorXd& y) {
    const int m = fiber.m;
    switch (fiber.chart) {
        case FiberChart::Euclidean:
            return Eigen::MatrixXd::Identity(m, m);
        case FiberChart::Sphere: {
            const double r2 = y.squaredNorm();
            const double c = 2.0 / (1.0 + r2);
            return (c * c) * Eigen::MatrixXd::Identity(m, m);
        }
        case FiberChart::Hyperbolic: {
            const double ym = y[m - 1];
            if (!(ym > 0.0)) throw OutOfDomain("hyperbolic chart needs y_m > 0");
            return (1.0 / (ym * ym)) * Eigen::MatrixXd::Identity(m, m);
        }
        case FiberChart::None:
            break;
    }
    throw ChartUnavailable("no coordinate chart attached to the fiber");
}

double xi_of_point(const BaseAnsatz& base, const Eigen::VectorXd& x) {
    return std::sqrt(base.alpha_norm_sq) * x[base.n - 1];
}

MetricField base_metric_field(const BaseAnsatz& base) {
    return [base](const Eigen::VectorXd& x) {
        const double xi = xi_of_point(base, x);
        const double psi = base.psi.value(xi);
        if (!(psi > 0.0)) throw NonpositiveWarp("psi is not positive");
        return Eigen::MatrixXd(Eigen::MatrixXd::Identity(base.n, base.n) / (psi * psi));
    };
}

MetricField warped_metric_field(const WarpedAnsatz& a) {
    return [a](const Eigen::VectorXd& p) {
        const int n = a.base.n, m = a.fiber.m;
        const Eigen::VectorXd x = p.head(n);
        const Eigen::VectorXd y = p.tail(m);
        const double xi = xi_of_point(a.base, x);
        const double psi = a.base.psi.value(xi);
        const double f = a.f.value(xi);
        if (!(psi > 0.0)) throw NonpositiveWarp("psi is not positive");
        if (!(f > 0.0)) throw NonpositiveWarp("warping function is not positive");
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n + m, n + m);
        g.topLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n) / (psi * psi);
        g.bottomRightCorner(m, m) = (f * f) * fiber_chart_metric(a.fiber, y);
        return g;
    };
}

}  // namespace einwarp::fd
