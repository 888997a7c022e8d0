#pragma once

#include <functional>
#include <vector>

#include "asymreg/geometry.hpp"
#include "asymreg/space_checks.hpp"

namespace asymreg {

// One nonexpansive self-map. Which kinds are admissible depends on the space:
// projections are Euclidean-only, rotations act on the first two coordinates
// (about the base axis on the sphere/hyperboloid), identity and geodesic
// contractions work everywhere.
struct MapSpec {
    enum class Kind { Identity, ProjBall, ProjHalfspace, Rotation, Contraction };

    Kind kind = Kind::Identity;
    std::vector<double> center;  // ProjBall
    double radius = 0.0;         // ProjBall
    std::vector<double> normal;  // ProjHalfspace: {x : <normal,x> <= offset}
    double offset = 0.0;         // ProjHalfspace
    double angle = 0.0;          // Rotation
    std::vector<double> anchor;  // Contraction
    double factor = 0.0;         // Contraction: x -> combine(anchor, x, factor)

    static MapSpec identity();
    static MapSpec proj_ball(std::vector<double> center, double radius);
    static MapSpec proj_halfspace(std::vector<double> normal, double offset);
    static MapSpec rotation(double angle);
    static MapSpec contraction(std::vector<double> anchor, double factor);

    const char* name() const;
};

// The mod-N function valued in 1..N: ((n-1) mod N) + 1 for n >= 1.
long long cyclic_index(long long n, long long N);

// An ordered family T_1..T_N of self-maps of one space, with cyclic indexing
// T_n = T_{n mod N} and the composition window T_{n,N} = T_{n+N} ... T_{n+1}.
class MappingFamily {
public:
    MappingFamily(SpaceModel space, std::vector<MapSpec> maps);

    const SpaceModel& space() const { return space_; }
    long long size() const { return static_cast<long long>(maps_.size()); }
    const MapSpec& map(long long i) const { return maps_[i - 1]; }  // i in 1..N

    void apply_into(long long n, std::span<const double> x, std::span<double> out) const;
    Point apply(long long n, const Point& x) const;

    // T_{n+N}(T_{n+N-1}(...T_{n+1}(x)...)), exactly N applications; n >= 0.
    Point compose_window(long long n, const Point& x) const;
    void compose_window_into(long long n, std::span<const double> x, std::span<double> out,
                             std::span<double> scratch) const;

private:
    SpaceModel space_;
    std::vector<MapSpec> maps_;
};

// Sampled nonexpansiveness: d(Tx,Ty) <= d(x,y) + tol on seeded pairs drawn in
// B(ball_center, ball_radius). Requires ball_radius <= r/2.
using PointMap = std::function<void(std::span<const double>, std::span<double>)>;

CheckReport check_nonexpansive(const SpaceModel& space, const PointMap& map,
                               const Point& ball_center, double ball_radius,
                               long long samples, unsigned long long seed, int threads = 1);

CheckReport check_nonexpansive(const SpaceModel& space, const MapSpec& map,
                               const Point& ball_center, double ball_radius,
                               long long samples, unsigned long long seed, int threads = 1);

// Kernel split for the pair-sampling check, mirroring the triple kernels.
struct PairBatch {
    int dim = 0;
    long long count = 0;
    std::vector<double> x, y;
};

PairBatch sample_pairs(const SpaceModel& space, const Point& center, double radius,
                       long long samples, unsigned long long seed);

CheckReport nonexpansive_kernel_serial(const SpaceModel& space, const PointMap& map,
                                       const PairBatch& batch);
CheckReport nonexpansive_kernel_parallel(const SpaceModel& space, const PointMap& map,
                                         const PairBatch& batch, int threads);

}  // namespace asymreg
