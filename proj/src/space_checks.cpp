#include "asymreg/space_checks.hpp"

#include <cmath>

namespace asymreg {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::span<const double> row(const std::vector<double>& buf, int dim, long long i) {
    return {buf.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
}

// Per-sample excesses; shared verbatim by the serial and OpenMP paths so both
// produce identical arithmetic.

double rdelta_excess(const SpaceModel& space, const TripleBatch& b, long long i) {
    const int d = b.dim;
    std::vector<double> my(d), mz(d);
    const auto x = row(b.x, d, i);
    const auto y = row(b.y, d, i);
    const auto z = row(b.z, d, i);
    const double t = b.t[i];
    space.combine_into(x, y, t, my);
    space.combine_into(x, z, t, mz);
    const double lhs = space.distance(my, mz);
    const double delta = space.certificate().delta;
    const double rhs = (t + delta * (1.0 - t)) * space.distance(y, z);
    return lhs - rhs;
}

double sine_excess(const SpaceModel& sphere, const TripleBatch& b, long long i) {
    const int d = b.dim;
    std::vector<double> my(d), mz(d);
    const auto x = row(b.x, d, i);
    const auto y = row(b.y, d, i);
    const auto z = row(b.z, d, i);
    const double t = b.t[i];
    sphere.combine_into(x, y, t, my);
    sphere.combine_into(x, z, t, mz);
    const double lhs = sphere.distance(my, mz);
    const double mu = sphere.mu();
    const double rhs =
        std::sin(t * mu * kPi / 2.0) / std::sin(mu * kPi / 2.0) * sphere.distance(y, z);
    return lhs - rhs;
}

double geodesic_excess(const SpaceModel& space, const TripleBatch& b, long long i) {
    const int d = b.dim;
    std::vector<double> ps(d), pt(d);
    const auto x = row(b.x, d, i);
    const auto y = row(b.y, d, i);
    const double s = b.t[i];
    const double t = b.t2[i];
    space.combine_into(x, y, s, ps);
    space.combine_into(x, y, t, pt);
    return std::abs(space.distance(ps, pt) - std::abs(s - t) * space.distance(x, y));
}

template <typename Excess>
CheckReport run_serial(long long count, Excess&& excess) {
    CheckReport rep;
    for (long long i = 0; i < count; ++i) rep.absorb(excess(i));
    return rep;
}

template <typename Excess>
CheckReport run_parallel(long long count, int threads, Excess&& excess) {
    long long violations = 0;
    double worst = -kInf;
#pragma omp parallel for num_threads(threads) schedule(static) \
    reduction(+ : violations) reduction(max : worst)
    for (long long i = 0; i < count; ++i) {
        const double e = excess(i);
        if (e > kIneqTol) ++violations;
        if (e > worst) worst = e;
    }
    CheckReport rep;
    rep.checks = count;
    rep.violations = violations;
    rep.worst_excess = worst;
    return rep;
}

}  // namespace

TripleBatch sample_triples(const SpaceModel& space, long long samples, unsigned long long seed) {
    if (samples < 1) throw invalid_input_error("sample_triples: samples must be >= 1");
    TripleBatch b;
    b.dim = space.dim();
    b.count = samples;
    b.x.resize(samples * b.dim);
    b.y.resize(samples * b.dim);
    b.z.resize(samples * b.dim);
    b.t.resize(samples);
    b.t2.resize(samples);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double radius = space.sampling_radius();
    const Point base = space.sample_in_ball(space.base_point(), radius, rng);
    for (long long i = 0; i < samples; ++i) {
        const Point x = space.sample_in_ball(base, radius, rng);
        const Point y = space.sample_in_ball(base, radius, rng);
        const Point z = space.sample_in_ball(base, radius, rng);
        std::copy(x.c.begin(), x.c.end(), b.x.begin() + i * b.dim);
        std::copy(y.c.begin(), y.c.end(), b.y.begin() + i * b.dim);
        std::copy(z.c.begin(), z.c.end(), b.z.begin() + i * b.dim);
        b.t[i] = unit(rng);
        b.t2[i] = unit(rng);
    }
    return b;
}

CheckReport rdelta_kernel_serial(const SpaceModel& space, const TripleBatch& batch) {
    return run_serial(batch.count, [&](long long i) { return rdelta_excess(space, batch, i); });
}

CheckReport rdelta_kernel_parallel(const SpaceModel& space, const TripleBatch& batch,
                                   int threads) {
    return run_parallel(batch.count, threads,
                        [&](long long i) { return rdelta_excess(space, batch, i); });
}

CheckReport sine_kernel_serial(const SpaceModel& sphere, const TripleBatch& batch) {
    return run_serial(batch.count, [&](long long i) { return sine_excess(sphere, batch, i); });
}

CheckReport sine_kernel_parallel(const SpaceModel& sphere, const TripleBatch& batch,
                                 int threads) {
    return run_parallel(batch.count, threads,
                        [&](long long i) { return sine_excess(sphere, batch, i); });
}

CheckReport geodesic_kernel_serial(const SpaceModel& space, const TripleBatch& batch) {
    return run_serial(batch.count, [&](long long i) { return geodesic_excess(space, batch, i); });
}

CheckReport geodesic_kernel_parallel(const SpaceModel& space, const TripleBatch& batch,
                                     int threads) {
    return run_parallel(batch.count, threads,
                        [&](long long i) { return geodesic_excess(space, batch, i); });
}

CheckReport check_rdelta_convexity(const SpaceModel& space, long long samples,
                                   unsigned long long seed, int threads) {
    const TripleBatch batch = sample_triples(space, samples, seed);
    return threads > 1 ? rdelta_kernel_parallel(space, batch, threads)
                       : rdelta_kernel_serial(space, batch);
}

SphericalComparisonReport check_spherical_comparison(double kappa, double mu, long long samples,
                                                     unsigned long long seed, int threads) {
    if (!(mu > 0.0 && mu < 1.0))
        throw invalid_input_error("check_spherical_comparison: mu must lie in (0,1)");
    const SpaceModel sphere = SpaceModel::sphere(kappa, mu);
    SphericalComparisonReport rep;
    const TripleBatch batch = sample_triples(sphere, samples, seed);
    rep.triples = threads > 1 ? sine_kernel_parallel(sphere, batch, threads)
                              : sine_kernel_serial(sphere, batch);
    // Scalar bound from which delta is read off: equality at t = 1, value
    // delta = 1 - cos(mu pi/2) at t = 0.
    const double denom = std::sin(mu * kPi / 2.0);
    const double delta = 1.0 - std::cos(mu * kPi / 2.0);
    const int grid = 1000;
    for (int k = 0; k < grid; ++k) {
        const double t = static_cast<double>(k) / (grid - 1);
        const double lhs = std::sin(t * mu * kPi / 2.0) / denom;
        const double rhs = t + delta * (1.0 - t);
        rep.scalar.absorb(lhs - rhs);
    }
    return rep;
}

CheckReport check_geodesic_property(const SpaceModel& space, long long samples,
                                    unsigned long long seed, int threads) {
    const TripleBatch batch = sample_triples(space, samples, seed);
    return threads > 1 ? geodesic_kernel_parallel(space, batch, threads)
                       : geodesic_kernel_serial(space, batch);
}

}  // namespace asymreg
