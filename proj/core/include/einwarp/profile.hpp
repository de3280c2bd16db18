#pragma once

#include <limits>
#include <string>
#include <vector>

#include "einwarp/errors.hpp"
#include "einwarp/jet.hpp"

namespace einwarp {

/// One-variable function families used by the ansatz.
enum class ProfileKind {
    Constant,
    Linear,
    Exp,
    LogAffine,
    Cosh,
    Sech,
    Tanh,
    Coth,
    Power,
    Spline,
    Composite,
};

/// Node operation for composite profiles (small expression trees).
enum class CompositeOp { None, Sum, Product, Pow, Log, Exp };

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool open_lo = false;
    bool open_hi = false;

    static Interval all() { return {}; }
    bool contains(double x) const {
        if (open_lo ? !(x > lo) : !(x >= lo)) return false;
        if (open_hi ? !(x < hi) : !(x <= hi)) return false;
        return true;
    }
    bool empty() const { return lo > hi || (lo == hi && (open_lo || open_hi)); }
    bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
    Interval intersect(const Interval& o) const;
};

/// A smooth function of the ansatz coordinate evaluated as a second-order jet.
///
/// Builtin kinds carry closed-form derivatives; splines return their own
/// analytic derivatives; composite profiles propagate jets through the
/// expression tree. Profiles are immutable after construction and safe to
/// share across threads.
class Profile {
  public:
    // -- builtin factories ---------------------------------------------------
    static Profile constant(double c);
    static Profile linear(double a, double b);        ///< a + b*xi
    static Profile exponential(double c, double k);   ///< c * exp(k*xi)
    /// sum_i c_i * ln(a_i + b_i*xi); coefficients packed as triples (c,a,b)
    static Profile log_affine(const std::vector<double>& triples);
    static Profile cosh(double c, double k);  ///< c * cosh(k*xi)
    static Profile sech(double c, double k);
    static Profile tanh(double c, double k);
    static Profile coth(double c, double k);
    static Profile power(double c, double a, double b, double p);  ///< c*(a+b*xi)^p

    // -- splines -------------------------------------------------------------
    /// Natural cubic spline through (xs, ys); exact at the knots.
    static Profile spline(std::vector<double> xs, std::vector<double> ys);
    /// Quintic Hermite spline matching value, first and second derivative at
    /// every knot. Used for solver output, where the ODE supplies the
    /// derivatives exactly.
    static Profile hermite_spline(std::vector<double> xs, std::vector<double> ys,
                                  std::vector<double> d1, std::vector<double> d2);

    // -- combinators ---------------------------------------------------------
    static Profile sum(std::vector<double> weights, std::vector<Profile> children);
    static Profile product(double scale, std::vector<Profile> children);
    static Profile pow_of(Profile child, double p);
    static Profile log_of(Profile child);
    static Profile exp_of(Profile child);

    /// (p(xi), p'(xi), p''(xi)); throws OutOfDomain outside the domain.
    Jet2 eval_jet2(double xi) const;
    double value(double xi) const { return eval_jet2(xi).v; }

    const Interval& domain() const { return domain_; }
    /// Copy with the domain intersected with [lo, hi].
    Profile restricted(double lo, double hi) const;

    ProfileKind kind() const { return kind_; }
    CompositeOp op() const { return op_; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    const std::vector<Profile>& children() const { return children_; }
    const std::vector<double>& knots_x() const { return xs_; }
    const std::vector<double>& knots_y() const { return ys_; }
    const std::vector<double>& knots_d1() const { return k1_; }
    const std::vector<double>& knots_d2() const { return k2_; }
    /// True when the spline interpolates prescribed derivatives (quintic).
    bool is_hermite() const { return kind_ == ProfileKind::Spline && !k1_.empty(); }

  private:
    Profile() = default;
    Jet2 eval_unchecked(double xi) const;
    Jet2 eval_spline(double xi) const;

    ProfileKind kind_ = ProfileKind::Constant;
    std::vector<double> coeffs_;
    Interval domain_ = Interval::all();
    std::vector<double> xs_, ys_, k1_, k2_;  // spline knots and derivative data
    CompositeOp op_ = CompositeOp::None;
    std::vector<Profile> children_;
};

/// Construct a builtin profile from a kind tag and packed coefficients,
/// validating the coefficient layout. Spline and composite kinds are built
/// through their dedicated factories instead.
Profile builtin(ProfileKind kind, const std::vector<double>& coeffs);

/// Natural cubic interpolant of at least four samples with strictly
/// increasing abscissae.
Profile from_samples(const std::vector<double>& xs, const std::vector<double>& ys);

/// Screening certificate that a profile stays positive on [lo, hi]: grid
/// samples plus a first-derivative bound per cell. A certificate is evidence
/// at the stated resolution, not a proof.
struct PositivityCertificate {
    bool certified = false;
    double min_sampled = 0.0;
    double argmin_xi = 0.0;
    int grid_points = 0;
    double lo = 0.0, hi = 0.0;
};

PositivityCertificate certify_positive(const Profile& p, double lo, double hi,
                                       int grid_points = 257);

const char* to_string(ProfileKind k);
const char* to_string(CompositeOp op);
ProfileKind profile_kind_from_string(const std::string& s);
CompositeOp composite_op_from_string(const std::string& s);

}  // namespace einwarp
