#pragma once

#include <vector>

#include "asymreg/geometry.hpp"

namespace asymreg {

// Outcome of a sampled inequality check. worst_excess is the largest observed
// lhs - rhs over all checks; a value <= 0 means every inequality held with margin.
struct CheckReport {
    long long checks = 0;
    long long violations = 0;
    double worst_excess = -kInf;

    bool pass() const { return violations == 0; }
    void absorb(double excess) {
        ++checks;
        if (excess > kIneqTol) ++violations;
        if (excess > worst_excess) worst_excess = excess;
    }
    void merge(const CheckReport& o) {
        checks += o.checks;
        violations += o.violations;
        if (o.worst_excess > worst_excess) worst_excess = o.worst_excess;
    }
};

// Batch of sampled triples (x,y,z,t) with pairwise distances <= r, generated
// serially from the seed so the parallel kernels stay bit-deterministic.
struct TripleBatch {
    int dim = 0;
    long long count = 0;
    std::vector<double> x, y, z;  // count*dim each
    std::vector<double> t, t2;    // count; t2 is the second geodesic parameter
};

TripleBatch sample_triples(const SpaceModel& space, long long samples, unsigned long long seed);

// d(combine(x,y,t), combine(x,z,t)) <= (t + delta(1-t)) d(y,z), with the
// space's certified delta.
CheckReport rdelta_kernel_serial(const SpaceModel& space, const TripleBatch& batch);
CheckReport rdelta_kernel_parallel(const SpaceModel& space, const TripleBatch& batch, int threads);

// Sharper spherical comparison: d(combine(x,y,t), combine(x,z,t)) <=
// sin(t*mu*pi/2)/sin(mu*pi/2) * d(y,z) on the sphere built from (kappa, mu).
CheckReport sine_kernel_serial(const SpaceModel& sphere, const TripleBatch& batch);
CheckReport sine_kernel_parallel(const SpaceModel& sphere, const TripleBatch& batch, int threads);

// |d(combine(x,y,s), combine(x,y,t)) - |s-t| d(x,y)| <= tol on sampled pairs.
CheckReport geodesic_kernel_serial(const SpaceModel& space, const TripleBatch& batch);
CheckReport geodesic_kernel_parallel(const SpaceModel& space, const TripleBatch& batch, int threads);

CheckReport check_rdelta_convexity(const SpaceModel& space, long long samples,
                                   unsigned long long seed, int threads = 1);

struct SphericalComparisonReport {
    CheckReport triples;  // sampled sine comparison bound
    CheckReport scalar;   // sin(t mu pi/2)/sin(mu pi/2) <= t + (1-cos(mu pi/2))(1-t) on a t-grid
    bool pass() const { return triples.pass() && scalar.pass(); }
};

SphericalComparisonReport check_spherical_comparison(double kappa, double mu, long long samples,
                                                     unsigned long long seed, int threads = 1);

CheckReport check_geodesic_property(const SpaceModel& space, long long samples,
                                    unsigned long long seed, int threads = 1);

}  // namespace asymreg
