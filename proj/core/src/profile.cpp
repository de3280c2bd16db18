#include "einwarp/profile.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace einwarp {

Interval Interval::intersect(const Interval& o) const {
    Interval r;
    if (lo > o.lo) {
        r.lo = lo;
        r.open_lo = open_lo;
    } else if (o.lo > lo) {
        r.lo = o.lo;
        r.open_lo = o.open_lo;
    } else {
        r.lo = lo;
        r.open_lo = open_lo || o.open_lo;
    }
    if (hi < o.hi) {
        r.hi = hi;
        r.open_hi = open_hi;
    } else if (o.hi < hi) {
        r.hi = o.hi;
        r.open_hi = o.open_hi;
    } else {
        r.hi = hi;
        r.open_hi = open_hi || o.open_hi;
    }
    return r;
}

namespace {

bool is_nonneg_integer(double p) { return p >= 0.0 && p == std::floor(p); }

/// Natural domain of the affine argument a + b*xi > 0.
Interval positive_affine_domain(double a, double b) {
    Interval d = Interval::all();
    if (b > 0.0) {
        d.lo = -a / b;
        d.open_lo = true;
    } else if (b < 0.0) {
        d.hi = -a / b;
        d.open_hi = true;
    } else if (a <= 0.0) {
        d.lo = 1.0;
        d.hi = 0.0;  // empty
    }
    return d;
}

}  // namespace

Profile Profile::constant(double c) {
    Profile p;
    p.kind_ = ProfileKind::Constant;
    p.coeffs_ = {c};
    return p;
}

Profile Profile::linear(double a, double b) {
    Profile p;
    p.kind_ = ProfileKind::Linear;
    p.coeffs_ = {a, b};
    return p;
}

Profile Profile::exponential(double c, double k) {
    Profile p;
    p.kind_ = ProfileKind::Exp;
    p.coeffs_ = {c, k};
    return p;
}

Profile Profile::log_affine(const std::vector<double>& triples) {
    if (triples.empty() || triples.size() % 3 != 0)
        throw BadCoefficients("log-affine expects coefficient triples (c, a, b)");
    Profile p;
    p.kind_ = ProfileKind::LogAffine;
    p.coeffs_ = triples;
    Interval d = Interval::all();
    for (std::size_t i = 0; i < triples.size(); i += 3)
        d = d.intersect(positive_affine_domain(triples[i + 1], triples[i + 2]));
    if (d.empty()) throw BadCoefficients("log-affine has no region with positive arguments");
    p.domain_ = d;
    return p;
}

Profile Profile::cosh(double c, double k) {
    Profile p;
    p.kind_ = ProfileKind::Cosh;
    p.coeffs_ = {c, k};
    return p;
}

Profile Profile::sech(double c, double k) {
    Profile p;
    p.kind_ = ProfileKind::Sech;
    p.coeffs_ = {c, k};
    return p;
}

Profile Profile::tanh(double c, double k) {
    Profile p;
    p.kind_ = ProfileKind::Tanh;
    p.coeffs_ = {c, k};
    return p;
}

Profile Profile::coth(double c, double k) {
    if (k == 0.0) throw BadCoefficients("coth requires a nonzero frequency");
    Profile p;
    p.kind_ = ProfileKind::Coth;
    p.coeffs_ = {c, k};
    // singular at xi = 0; keep the branch on the positive side of the pole
    if (k > 0.0) {
        p.domain_.lo = 0.0;
        p.domain_.open_lo = true;
    } else {
        p.domain_.hi = 0.0;
        p.domain_.open_hi = true;
    }
    return p;
}

Profile Profile::power(double c, double a, double b, double p_exp) {
    Profile p;
    p.kind_ = ProfileKind::Power;
    p.coeffs_ = {c, a, b, p_exp};
    if (!is_nonneg_integer(p_exp)) {
        Interval d = positive_affine_domain(a, b);
        if (d.empty())
            throw BadCoefficients("power profile needs a region with positive argument");
        p.domain_ = d;
    }
    return p;
}

Profile Profile::spline(std::vector<double> xs, std::vector<double> ys) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw NonMonotoneAbscissae("spline abscissae must be strictly increasing");
    if (xs.size() < 4) throw TooFewPoints("spline needs at least 4 samples");
    if (xs.size() != ys.size()) throw BadCoefficients("spline: xs and ys sizes differ");

    const std::size_t n = xs.size();
    // natural boundary: second derivative zero at both ends
    std::vector<double> m(n, 0.0), diag(n, 0.0), off(n, 0.0), rhs(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hl = xs[i] - xs[i - 1];
        const double hr = xs[i + 1] - xs[i];
        diag[i] = (hl + hr) / 3.0;
        off[i] = hr / 6.0;
        rhs[i] = (ys[i + 1] - ys[i]) / hr - (ys[i] - ys[i - 1]) / hl;
    }
    // Thomas solve on the interior unknowns
    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double hl = xs[i] - xs[i - 1];
        const double w = (hl / 6.0) / diag[i - 1];
        diag[i] -= w * off[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m[i] = (rhs[i] - off[i] * m[i + 1]) / diag[i];
        if (i == 1) break;
    }

    Profile p;
    p.kind_ = ProfileKind::Spline;
    p.domain_ = {xs.front(), xs.back(), false, false};
    p.xs_ = std::move(xs);
    p.ys_ = std::move(ys);
    p.k2_ = std::move(m);
    return p;
}

Profile Profile::hermite_spline(std::vector<double> xs, std::vector<double> ys,
                                std::vector<double> d1, std::vector<double> d2) {
    if (xs.size() < 2) throw TooFewPoints("hermite spline needs at least 2 knots");
    if (xs.size() != ys.size() || xs.size() != d1.size() || xs.size() != d2.size())
        throw BadCoefficients("hermite spline: array sizes differ");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw NonMonotoneAbscissae("spline abscissae must be strictly increasing");
    Profile p;
    p.kind_ = ProfileKind::Spline;
    p.domain_ = {xs.front(), xs.back(), false, false};
    p.xs_ = std::move(xs);
    p.ys_ = std::move(ys);
    p.k1_ = std::move(d1);
    p.k2_ = std::move(d2);
    return p;
}

Profile Profile::sum(std::vector<double> weights, std::vector<Profile> children) {
    if (children.empty() || weights.size() != children.size())
        throw BadCoefficients("sum: one weight per child required");
    Profile p;
    p.kind_ = ProfileKind::Composite;
    p.op_ = CompositeOp::Sum;
    p.coeffs_ = std::move(weights);
    Interval d = Interval::all();
    for (const auto& c : children) d = d.intersect(c.domain());
    if (d.empty()) throw BadCoefficients("sum: children domains do not intersect");
    p.domain_ = d;
    p.children_ = std::move(children);
    return p;
}

Profile Profile::product(double scale, std::vector<Profile> children) {
    if (children.empty()) throw BadCoefficients("product needs at least one child");
    Profile p;
    p.kind_ = ProfileKind::Composite;
    p.op_ = CompositeOp::Product;
    p.coeffs_ = {scale};
    Interval d = Interval::all();
    for (const auto& c : children) d = d.intersect(c.domain());
    if (d.empty()) throw BadCoefficients("product: children domains do not intersect");
    p.domain_ = d;
    p.children_ = std::move(children);
    return p;
}

Profile Profile::pow_of(Profile child, double p_exp) {
    Profile p;
    p.kind_ = ProfileKind::Composite;
    p.op_ = CompositeOp::Pow;
    p.coeffs_ = {p_exp};
    p.domain_ = child.domain();
    p.children_.push_back(std::move(child));
    return p;
}

Profile Profile::log_of(Profile child) {
    Profile p;
    p.kind_ = ProfileKind::Composite;
    p.op_ = CompositeOp::Log;
    p.domain_ = child.domain();
    p.children_.push_back(std::move(child));
    return p;
}

Profile Profile::exp_of(Profile child) {
    Profile p;
    p.kind_ = ProfileKind::Composite;
    p.op_ = CompositeOp::Exp;
    p.domain_ = child.domain();
    p.children_.push_back(std::move(child));
    return p;
}

Profile Profile::restricted(double lo, double hi) const {
    Profile p = *this;
    p.domain_ = p.domain_.intersect({lo, hi, false, false});
    if (p.domain_.empty()) throw BadCoefficients("restricted: empty domain");
    return p;
}

Jet2 Profile::eval_jet2(double xi) const {
    if (!domain_.contains(xi))
        throw OutOfDomain("xi = " + std::to_string(xi) + " outside profile domain");
    return eval_unchecked(xi);
}

Jet2 Profile::eval_unchecked(double xi) const {
    const Jet2 x = Jet2::variable(xi);
    switch (kind_) {
        case ProfileKind::Constant:
            return Jet2::constant(coeffs_[0]);
        case ProfileKind::Linear:
            return {coeffs_[0] + coeffs_[1] * xi, coeffs_[1], 0.0};
        case ProfileKind::Exp:
            return coeffs_[0] * exp(coeffs_[1] * x);
        case ProfileKind::LogAffine: {
            Jet2 r = Jet2::constant(0.0);
            for (std::size_t i = 0; i < coeffs_.size(); i += 3) {
                const double c = coeffs_[i], a = coeffs_[i + 1], b = coeffs_[i + 2];
                const double t = a + b * xi;
                const double w = 1.0 / t;
                r = r + Jet2{c * std::log(t), c * b * w, -c * b * b * w * w};
            }
            return r;
        }
        case ProfileKind::Cosh:
            return coeffs_[0] * einwarp::cosh(coeffs_[1] * x);
        case ProfileKind::Sech:
            return coeffs_[0] * einwarp::sech(coeffs_[1] * x);
        case ProfileKind::Tanh:
            return coeffs_[0] * einwarp::tanh(coeffs_[1] * x);
        case ProfileKind::Coth:
            return coeffs_[0] * einwarp::coth(coeffs_[1] * x);
        case ProfileKind::Power: {
            const double c = coeffs_[0], a = coeffs_[1], b = coeffs_[2], pe = coeffs_[3];
            const Jet2 t = {a + b * xi, b, 0.0};
            return c * pow(t, pe);
        }
        case ProfileKind::Spline:
            return eval_spline(xi);
        case ProfileKind::Composite:
            switch (op_) {
                case CompositeOp::Sum: {
                    Jet2 r = Jet2::constant(0.0);
                    for (std::size_t i = 0; i < children_.size(); ++i)
                        r = r + coeffs_[i] * children_[i].eval_unchecked(xi);
                    return r;
                }
                case CompositeOp::Product: {
                    Jet2 r = Jet2::constant(coeffs_[0]);
                    for (const auto& c : children_) r = r * c.eval_unchecked(xi);
                    return r;
                }
                case CompositeOp::Pow: {
                    const Jet2 u = children_[0].eval_unchecked(xi);
                    if (u.v <= 0.0 && !is_nonneg_integer(coeffs_[0]))
                        throw OutOfDomain("pow of nonpositive value");
                    return pow(u, coeffs_[0]);
                }
                case CompositeOp::Log: {
                    const Jet2 u = children_[0].eval_unchecked(xi);
                    if (u.v <= 0.0) throw OutOfDomain("log of nonpositive value");
                    return log(u);
                }
                case CompositeOp::Exp:
                    return exp(children_[0].eval_unchecked(xi));
                case CompositeOp::None:
                    break;
            }
            throw Error("corrupt composite profile");
    }
    throw Error("unreachable profile kind");
}

Jet2 Profile::eval_spline(double xi) const {
    const std::size_t n = xs_.size();
    std::size_t i = std::upper_bound(xs_.begin(), xs_.end(), xi) - xs_.begin();
    if (i == 0) i = 1;
    if (i >= n) i = n - 1;
    const std::size_t l = i - 1;
    const double h = xs_[i] - xs_[l];

    if (k1_.empty()) {
        // natural cubic segment
        const double A = (xs_[i] - xi) / h;
        const double B = (xi - xs_[l]) / h;
        const double ml = k2_[l], mr = k2_[i];
        const double v = A * ys_[l] + B * ys_[i] +
                         ((A * A * A - A) * ml + (B * B * B - B) * mr) * h * h / 6.0;
        const double d1 = (ys_[i] - ys_[l]) / h - (3.0 * A * A - 1.0) * h * ml / 6.0 +
                          (3.0 * B * B - 1.0) * h * mr / 6.0;
        const double d2 = A * ml + B * mr;
        return {v, d1, d2};
    }

    // quintic Hermite segment matching (y, y', y'') at both knots
    const double t = (xi - xs_[l]) / h;
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    const double H0 = 1.0 - 10.0 * t3 + 15.0 * t4 - 6.0 * t5;
    const double H1 = t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5;
    const double H2 = 0.5 * t2 - 1.5 * t3 + 1.5 * t4 - 0.5 * t5;
    const double H3 = 10.0 * t3 - 15.0 * t4 + 6.0 * t5;
    const double H4 = -4.0 * t3 + 7.0 * t4 - 3.0 * t5;
    const double H5 = 0.5 * t3 - t4 + 0.5 * t5;

    const double dH0 = -30.0 * t2 + 60.0 * t3 - 30.0 * t4;
    const double dH1 = 1.0 - 18.0 * t2 + 32.0 * t3 - 15.0 * t4;
    const double dH2 = t - 4.5 * t2 + 6.0 * t3 - 2.5 * t4;
    const double dH3 = 30.0 * t2 - 60.0 * t3 + 30.0 * t4;
    const double dH4 = -12.0 * t2 + 28.0 * t3 - 15.0 * t4;
    const double dH5 = 1.5 * t2 - 4.0 * t3 + 2.5 * t4;

    const double cH0 = -60.0 * t + 180.0 * t2 - 120.0 * t3;
    const double cH1 = -36.0 * t + 96.0 * t2 - 60.0 * t3;
    const double cH2 = 1.0 - 9.0 * t + 18.0 * t2 - 10.0 * t3;
    const double cH3 = 60.0 * t - 180.0 * t2 + 120.0 * t3;
    const double cH4 = -24.0 * t + 84.0 * t2 - 60.0 * t3;
    const double cH5 = 3.0 * t - 12.0 * t2 + 10.0 * t3;

    const double y0 = ys_[l], y1 = ys_[i];
    const double p0 = k1_[l], p1 = k1_[i];
    const double s0 = k2_[l], s1 = k2_[i];

    const double v = y0 * H0 + h * p0 * H1 + h * h * s0 * H2 + y1 * H3 + h * p1 * H4 +
                     h * h * s1 * H5;
    const double d1 = (y0 * dH0 + h * p0 * dH1 + h * h * s0 * dH2 + y1 * dH3 +
                       h * p1 * dH4 + h * h * s1 * dH5) / h;
    const double d2 = (y0 * cH0 + h * p0 * cH1 + h * h * s0 * cH2 + y1 * cH3 +
                       h * p1 * cH4 + h * h * s1 * cH5) / (h * h);
    return {v, d1, d2};
}

Profile builtin(ProfileKind kind, const std::vector<double>& c) {
    const auto expect = [&](std::size_t want) {
        if (c.size() != want)
            throw BadCoefficients(std::string(to_string(kind)) + ": expected " +
                                  std::to_string(want) + " coefficients, got " +
                                  std::to_string(c.size()));
    };
    switch (kind) {
        case ProfileKind::Constant:
            expect(1);
            return Profile::constant(c[0]);
        case ProfileKind::Linear:
            expect(2);
            return Profile::linear(c[0], c[1]);
        case ProfileKind::Exp:
            expect(2);
            return Profile::exponential(c[0], c[1]);
        case ProfileKind::LogAffine:
            return Profile::log_affine(c);
        case ProfileKind::Cosh:
            expect(2);
            return Profile::cosh(c[0], c[1]);
        case ProfileKind::Sech:
            expect(2);
            return Profile::sech(c[0], c[1]);
        case ProfileKind::Tanh:
            expect(2);
            return Profile::tanh(c[0], c[1]);
        case ProfileKind::Coth:
            expect(2);
            return Profile::coth(c[0], c[1]);
        case ProfileKind::Power:
            expect(4);
            return Profile::power(c[0], c[1], c[2], c[3]);
        case ProfileKind::Spline:
        case ProfileKind::Composite:
            throw BadCoefficients("spline/composite profiles are built from their factories");
    }
    throw BadCoefficients("unknown profile kind");
}

Profile from_samples(const std::vector<double>& xs, const std::vector<double>& ys) {
    return Profile::spline(xs, ys);
}

PositivityCertificate certify_positive(const Profile& p, double lo, double hi,
                                       int grid_points) {
    if (grid_points < 2) grid_points = 2;
    PositivityCertificate cert;
    cert.grid_points = grid_points;
    cert.lo = lo;
    cert.hi = hi;
    cert.min_sampled = std::numeric_limits<double>::infinity();
    cert.certified = true;

    const double dx = (hi - lo) / (grid_points - 1);
    std::vector<Jet2> j(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i) {
        const double x = (i == grid_points - 1) ? hi : lo + i * dx;
        j[static_cast<std::size_t>(i)] = p.eval_jet2(x);
        if (j[static_cast<std::size_t>(i)].v < cert.min_sampled) {
            cert.min_sampled = j[static_cast<std::size_t>(i)].v;
            cert.argmin_xi = x;
        }
    }
    if (!(cert.min_sampled > 0.0)) {
        cert.certified = false;
        return cert;
    }
    // per-cell screen: value can drop at most max|p'| * dx/2 below the
    // smaller endpoint (derivative bound sampled at endpoints and midpoint)
    for (int i = 0; i + 1 < grid_points; ++i) {
        const Jet2& a = j[static_cast<std::size_t>(i)];
        const Jet2& b = j[static_cast<std::size_t>(i) + 1];
        const Jet2 mid = p.eval_jet2(lo + (i + 0.5) * dx);
        const double dbound =
            std::max({std::abs(a.d1), std::abs(mid.d1), std::abs(b.d1)}) * 1.5;
        const double floor_est = std::min(a.v, b.v) - 0.5 * dx * dbound;
        if (!(floor_est > 0.0)) {
            cert.certified = false;
            break;
        }
    }
    return cert;
}

const char* to_string(ProfileKind k) {
    switch (k) {
        case ProfileKind::Constant: return "constant";
        case ProfileKind::Linear: return "linear";
        case ProfileKind::Exp: return "exp";
        case ProfileKind::LogAffine: return "log-affine";
        case ProfileKind::Cosh: return "cosh";
        case ProfileKind::Sech: return "sech";
        case ProfileKind::Tanh: return "tanh";
        case ProfileKind::Coth: return "coth";
        case ProfileKind::Power: return "power";
        case ProfileKind::Spline: return "spline";
        case ProfileKind::Composite: return "composite";
    }
    return "?";
}

const char* to_string(CompositeOp op) {
    switch (op) {
        case CompositeOp::None: return "none";
        case CompositeOp::Sum: return "sum";
        case CompositeOp::Product: return "product";
        case CompositeOp::Pow: return "pow";
        case CompositeOp::Log: return "log";
        case CompositeOp::Exp: return "exp";
    }
    return "?";
}

ProfileKind profile_kind_from_string(const std::string& s) {
    for (ProfileKind k : {ProfileKind::Constant, ProfileKind::Linear, ProfileKind::Exp,
                          ProfileKind::LogAffine, ProfileKind::Cosh, ProfileKind::Sech,
                          ProfileKind::Tanh, ProfileKind::Coth, ProfileKind::Power,
                          ProfileKind::Spline, ProfileKind::Composite})
        if (s == to_string(k)) return k;
    throw ParseError("unknown profile kind: " + s);
}

CompositeOp composite_op_from_string(const std::string& s) {
    for (CompositeOp op : {CompositeOp::Sum, CompositeOp::Product, CompositeOp::Pow,
                           CompositeOp::Log, CompositeOp::Exp})
        if (s == to_string(op)) return op;
    throw ParseError("unknown composite op: " + s);
}

}  // namespace einwarp
