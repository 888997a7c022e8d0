#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "asymreg/util.hpp"

namespace asymreg {

// Coordinates of a point. Interpretation depends on the owning space:
// Cartesian for Euclidean/sup-norm, unit vector in R^3 for the sphere,
// hyperboloid-sheet vector in R^3 for the hyperbolic plane.
struct Point {
    std::vector<double> c;

    Point() = default;
    explicit Point(std::vector<double> coords) : c(std::move(coords)) {}
    Point(std::initializer_list<double> coords) : c(coords) {}

    std::size_t dim() const { return c.size(); }
    double operator[](std::size_t i) const { return c[i]; }
    double& operator[](std::size_t i) { return c[i]; }
    std::span<const double> view() const { return {c.data(), c.size()}; }
};

// Radius of validity r of the geodesic bicombing and the convexity defect
// delta: d((1-t)x+ty, (1-t)x+tz) <= (t + delta(1-t)) d(y,z) for points
// within pairwise distance r.
struct ConvexityCertificate {
    double r = kInf;
    double delta = 0.0;
};

// Certificate of a CAT(kappa) space on the region of diameter mu*D_kappa/2,
// D_kappa = pi/sqrt(kappa):  (r, delta) = (mu*pi/(2 sqrt(kappa)), 1 - cos(mu*pi/2)).
ConvexityCertificate cat_kappa_params(double kappa, double mu);

enum class SpaceKind { Euclidean, SupNorm, Hyperbolic2, Sphere };

// A metric with a chosen geodesic bicombing and its convexity certificate.
// Euclidean/SupNorm use the linear bicombing, the sphere uses slerp below the
// antipodal cutoff, the hyperbolic plane uses hyperboloid-model geodesics.
class SpaceModel {
public:
    static SpaceModel euclidean(int dim);
    static SpaceModel supnorm(int dim);
    static SpaceModel hyperbolic2();
    static SpaceModel sphere(double kappa, double mu);

    SpaceKind kind() const { return kind_; }
    int dim() const { return dim_; }  // coordinate dimension (3 for sphere/hyperbolic)
    double kappa() const { return kappa_; }
    double mu() const { return mu_; }
    const ConvexityCertificate& certificate() const { return cert_; }
    std::string name() const;

    double distance(std::span<const double> x, std::span<const double> y) const;
    double distance(const Point& x, const Point& y) const {
        return distance(x.view(), y.view());
    }

    // gamma_{x,y}(t): the point at parameter t from x toward y on the bicombing.
    void combine_into(std::span<const double> x, std::span<const double> y, double t,
                      std::span<double> out) const;
    Point combine(const Point& x, const Point& y, double t) const;

    // Enforces the point invariants (renormalizes sphere/hyperboloid coords).
    Point normalized(Point p) const;

    // Deterministic reference point: origin, or (0,0,1) on the curved models.
    Point base_point() const;

    // Uniform-ish sample in the metric ball B(center, radius).
    Point sample_in_ball(const Point& center, double radius, std::mt19937_64& rng) const;

    // r/2 when r is finite, else 1; triples drawn in a ball of this radius
    // have pairwise distances <= r.
    double sampling_radius() const;

private:
    SpaceModel(SpaceKind k, int dim, double kappa, double mu, ConvexityCertificate cert)
        : kind_(k), dim_(dim), kappa_(kappa), mu_(mu), cert_(cert) {}

    void require_dim(std::span<const double> p, const char* who) const;

    SpaceKind kind_;
    int dim_;
    double kappa_ = 0.0;
    double mu_ = 0.0;
    ConvexityCertificate cert_;
};

}  // namespace asymreg
