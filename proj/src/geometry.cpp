#include "asymreg/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace asymreg {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Angle beyond which a sphere pair counts as antipodal and is rejected.
constexpr double kAntipodalCutoff = kPi - 1e-6;

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Lorentz form with timelike last coordinate: <x,y> = x0 y0 + x1 y1 - x2 y2.
double lorentz(std::span<const double> a, std::span<const double> b) {
    return a[0] * b[0] + a[1] * b[1] - a[2] * b[2];
}

double clamp(double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); }

}  // namespace

ConvexityCertificate cat_kappa_params(double kappa, double mu) {
    if (!(kappa > 0.0)) throw invalid_input_error("cat_kappa_params: kappa must be > 0");
    if (!(mu > 0.0) || mu > 1.0)
        throw invalid_input_error("cat_kappa_params: mu must lie in (0,1]");
    const double d_kappa = kPi / std::sqrt(kappa);
    return {mu * d_kappa / 2.0, 1.0 - std::cos(mu * kPi / 2.0)};
}

SpaceModel SpaceModel::euclidean(int dim) {
    if (dim < 1) throw invalid_input_error("euclidean: dim must be >= 1");
    return SpaceModel(SpaceKind::Euclidean, dim, 0.0, 0.0, {kInf, 0.0});
}

SpaceModel SpaceModel::supnorm(int dim) {
    if (dim < 1) throw invalid_input_error("supnorm: dim must be >= 1");
    return SpaceModel(SpaceKind::SupNorm, dim, 0.0, 0.0, {kInf, 0.0});
}

SpaceModel SpaceModel::hyperbolic2() {
    return SpaceModel(SpaceKind::Hyperbolic2, 3, 0.0, 0.0, {kInf, 0.0});
}

SpaceModel SpaceModel::sphere(double kappa, double mu) {
    return SpaceModel(SpaceKind::Sphere, 3, kappa, mu, cat_kappa_params(kappa, mu));
}

std::string SpaceModel::name() const {
    switch (kind_) {
        case SpaceKind::Euclidean: return "euclidean(" + std::to_string(dim_) + ")";
        case SpaceKind::SupNorm: return "supnorm(" + std::to_string(dim_) + ")";
        case SpaceKind::Hyperbolic2: return "hyperbolic2";
        case SpaceKind::Sphere:
            return "sphere(kappa=" + std::to_string(kappa_) + ",mu=" + std::to_string(mu_) + ")";
    }
    return "?";
}

void SpaceModel::require_dim(std::span<const double> p, const char* who) const {
    if (static_cast<int>(p.size()) != dim_)
        throw invalid_input_error(std::string(who) + ": dimension mismatch, expected " +
                                  std::to_string(dim_) + " got " + std::to_string(p.size()));
}

double SpaceModel::distance(std::span<const double> x, std::span<const double> y) const {
    require_dim(x, "distance");
    require_dim(y, "distance");
    switch (kind_) {
        case SpaceKind::Euclidean: {
            double s = 0.0;
            for (int i = 0; i < dim_; ++i) {
                const double d = x[i] - y[i];
                s += d * d;
            }
            return std::sqrt(s);
        }
        case SpaceKind::SupNorm: {
            double m = 0.0;
            for (int i = 0; i < dim_; ++i) m = std::max(m, std::abs(x[i] - y[i]));
            return m;
        }
        case SpaceKind::Sphere: {
            const double angle = std::acos(clamp(dot(x, y), -1.0, 1.0));
            return angle / std::sqrt(kappa_);
        }
        case SpaceKind::Hyperbolic2: {
            // d = arccosh(-<x,y>_L); the product is <= -1 up to rounding.
            const double c = std::max(1.0, -lorentz(x, y));
            return std::acosh(c);
        }
    }
    return 0.0;
}

void SpaceModel::combine_into(std::span<const double> x, std::span<const double> y, double t,
                              std::span<double> out) const {
    require_dim(x, "combine");
    require_dim(y, "combine");
    if (!(t >= 0.0 && t <= 1.0))
        throw invalid_input_error("combine: t must lie in [0,1]");
    if (t == 0.0) {
        std::copy(x.begin(), x.end(), out.begin());
        return;
    }
    if (t == 1.0) {
        std::copy(y.begin(), y.end(), out.begin());
        return;
    }
    switch (kind_) {
        case SpaceKind::Euclidean:
        case SpaceKind::SupNorm: {
            for (int i = 0; i < dim_; ++i) out[i] = x[i] + t * (y[i] - x[i]);
            return;
        }
        case SpaceKind::Sphere: {
            const double omega = std::acos(clamp(dot(x, y), -1.0, 1.0));
            if (omega > kAntipodalCutoff)
                throw geodesic_range_error("combine: sphere points are (near-)antipodal");
            if (omega / std::sqrt(kappa_) > cert_.r + kIneqTol)
                throw geodesic_range_error(
                    "combine: sphere points beyond certificate radius");
            if (omega < 1e-12) {
                for (int i = 0; i < 3; ++i) out[i] = x[i] + t * (y[i] - x[i]);
            } else {
                const double s = std::sin(omega);
                const double wx = std::sin((1.0 - t) * omega) / s;
                const double wy = std::sin(t * omega) / s;
                for (int i = 0; i < 3; ++i) out[i] = wx * x[i] + wy * y[i];
            }
            const double n = std::sqrt(out[0] * out[0] + out[1] * out[1] + out[2] * out[2]);
            for (int i = 0; i < 3; ++i) out[i] /= n;
            return;
        }
        case SpaceKind::Hyperbolic2: {
            const double d = std::acosh(std::max(1.0, -lorentz(x, y)));
            if (d < 1e-12) {
                for (int i = 0; i < 3; ++i) out[i] = x[i] + t * (y[i] - x[i]);
            } else {
                const double s = std::sinh(d);
                const double wx = std::sinh((1.0 - t) * d) / s;
                const double wy = std::sinh(t * d) / s;
                for (int i = 0; i < 3; ++i) out[i] = wx * x[i] + wy * y[i];
            }
            // Project back onto the sheet <p,p>_L = -1, p2 > 0.
            const double q = -lorentz(out, out);
            const double n = std::sqrt(std::max(q, 1e-300));
            for (int i = 0; i < 3; ++i) out[i] /= n;
            return;
        }
    }
}

Point SpaceModel::combine(const Point& x, const Point& y, double t) const {
    Point out;
    out.c.resize(dim_);
    combine_into(x.view(), y.view(), t, {out.c.data(), out.c.size()});
    return out;
}

Point SpaceModel::normalized(Point p) const {
    require_dim(p.view(), "normalized");
    switch (kind_) {
        case SpaceKind::Euclidean:
        case SpaceKind::SupNorm:
            return p;
        case SpaceKind::Sphere: {
            const double n = norm2(p.view());
            if (!(n > 0.5))
                throw invalid_input_error("normalized: sphere point too far from unit norm");
            for (auto& v : p.c) v /= n;
            return p;
        }
        case SpaceKind::Hyperbolic2: {
            const double q = -lorentz(p.view(), p.view());
            if (!(q > 0.0))
                throw invalid_input_error("normalized: not a timelike vector");
            if (!(p.c[2] > 0.0))
                throw invalid_input_error("normalized: hyperboloid point must have last coordinate > 0");
            const double n = std::sqrt(q);
            for (auto& v : p.c) v /= n;
            return p;
        }
    }
    return p;
}

Point SpaceModel::base_point() const {
    switch (kind_) {
        case SpaceKind::Euclidean:
        case SpaceKind::SupNorm:
            return Point(std::vector<double>(dim_, 0.0));
        case SpaceKind::Sphere:
        case SpaceKind::Hyperbolic2:
            return Point{0.0, 0.0, 1.0};
    }
    return Point{};
}

double SpaceModel::sampling_radius() const {
    return std::isfinite(cert_.r) ? cert_.r / 2.0 : 1.0;
}

Point SpaceModel::sample_in_ball(const Point& center, double radius,
                                 std::mt19937_64& rng) const {
    require_dim(center.view(), "sample_in_ball");
    if (!(radius > 0.0)) throw invalid_input_error("sample_in_ball: radius must be > 0");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    switch (kind_) {
        case SpaceKind::Euclidean: {
            // Rejection-sample from the bounding cube.
            Point p;
            p.c.resize(dim_);
            while (true) {
                double s = 0.0;
                for (int i = 0; i < dim_; ++i) {
                    const double d = sym(rng) * radius;
                    p.c[i] = center[i] + d;
                    s += d * d;
                }
                if (s <= radius * radius) return p;
            }
        }
        case SpaceKind::SupNorm: {
            Point p;
            p.c.resize(dim_);
            for (int i = 0; i < dim_; ++i) p.c[i] = center[i] + sym(rng) * radius;
            return p;
        }
        case SpaceKind::Sphere: {
            // Tangent-plane direction at center, exponential map.
            const auto c = center.view();
            int k = 0;
            for (int i = 1; i < 3; ++i)
                if (std::abs(c[i]) < std::abs(c[k])) k = i;
            double e1[3] = {0.0, 0.0, 0.0};
            e1[k] = 1.0;
            const double proj = dot({e1, 3}, c);
            for (int i = 0; i < 3; ++i) e1[i] -= proj * c[i];
            const double n1 = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
            for (int i = 0; i < 3; ++i) e1[i] /= n1;
            const double e2[3] = {c[1] * e1[2] - c[2] * e1[1], c[2] * e1[0] - c[0] * e1[2],
                                  c[0] * e1[1] - c[1] * e1[0]};
            const double phi = 2.0 * kPi * unit(rng);
            const double s = radius * std::sqrt(unit(rng));
            const double omega = s * std::sqrt(kappa_);  // metric length -> angle
            Point p;
            p.c.resize(3);
            for (int i = 0; i < 3; ++i)
                p.c[i] = std::cos(omega) * c[i] +
                         std::sin(omega) * (std::cos(phi) * e1[i] + std::sin(phi) * e2[i]);
            return normalized(std::move(p));
        }
        case SpaceKind::Hyperbolic2: {
            const auto c = center.view();
            // Lorentz-orthonormal tangent basis at c.
            double b[2][3] = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
            for (int j = 0; j < 2; ++j) {
                const double lp = lorentz({b[j], 3}, c);
                for (int i = 0; i < 3; ++i) b[j][i] += lp * c[i];
                if (j == 1) {
                    const double lq = lorentz({b[1], 3}, {b[0], 3});
                    for (int i = 0; i < 3; ++i) b[1][i] -= lq * b[0][i];
                }
                const double nn = std::sqrt(lorentz({b[j], 3}, {b[j], 3}));
                for (int i = 0; i < 3; ++i) b[j][i] /= nn;
            }
            const double phi = 2.0 * kPi * unit(rng);
            const double s = radius * std::sqrt(unit(rng));
            Point p;
            p.c.resize(3);
            for (int i = 0; i < 3; ++i)
                p.c[i] = std::cosh(s) * c[i] +
                         std::sinh(s) * (std::cos(phi) * b[0][i] + std::sin(phi) * b[1][i]);
            return normalized(std::move(p));
        }
    }
    return center;
}

}  // namespace asymreg
