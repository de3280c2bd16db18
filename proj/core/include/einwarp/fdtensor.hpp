#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "einwarp/ansatz.hpp"

namespace einwarp::fd {

using ScalarField = std::function<double(const Eigen::VectorXd&)>;
using MetricField = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

/// Central difference of the metric along coordinate k.
Eigen::MatrixXd metric_partial(const MetricField& g, const Eigen::VectorXd& x, int k,
                               double step);

/// Christoffel symbols from metric derivatives; result[k](i,j) = Gamma^k_ij.
std::vector<Eigen::MatrixXd> christoffel(const MetricField& g, const Eigen::VectorXd& x,
                                         double step);

/// Ricci tensor assembled from differenced Christoffel symbols.
Eigen::MatrixXd ricci(const MetricField& g, const Eigen::VectorXd& x, double step);

double scalar_curvature(const MetricField& g, const Eigen::VectorXd& x, double step);

Eigen::VectorXd gradient_coords(const ScalarField& f, const Eigen::VectorXd& x, double step);

/// Covariant Hessian: Hess_ij = d_i d_j f - Gamma^k_ij d_k f.
Eigen::MatrixXd hessian(const MetricField& g, const ScalarField& f, const Eigen::VectorXd& x,
                        double step);

double laplace_beltrami(const MetricField& g, const ScalarField& f, const Eigen::VectorXd& x,
                        double step);

/// Coordinate metric of the model fiber chart at y: identity (euclidean),
/// stereographic round sphere 4/(1+|y|^2)^2 (theta = m-1), or upper half
/// space 1/y_m^2 (theta = -(m-1)). Throws ChartUnavailable / OutOfDomain.
Eigen::MatrixXd fiber_chart_metric(const FiberData& fiber, const Eigen::VectorXd& y);

/// Full (n+m)-dimensional coordinate metric of the warped ansatz at the
/// point (x, y), with the direction covector realized as (0,...,0,sqrt(a)).
MetricField warped_metric_field(const WarpedAnsatz& a);

/// Base coordinate metric psi^-2 delta on R^n as a field.
MetricField base_metric_field(const BaseAnsatz& base);

/// xi(x) for the concrete covector (0,...,0,sqrt(a)) used by the fields.
double xi_of_point(const BaseAnsatz& base, const Eigen::VectorXd& x);

}  // namespace einwarp::fd
