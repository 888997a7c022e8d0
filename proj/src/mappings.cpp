#include "asymreg/mappings.hpp"

#include <algorithm>
#include <cmath>

namespace asymreg {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void apply_one(const SpaceModel& space, const MapSpec& m, std::span<const double> x,
               std::span<double> out) {
    const int d = space.dim();
    switch (m.kind) {
        case MapSpec::Kind::Identity:
            std::copy(x.begin(), x.end(), out.begin());
            return;
        case MapSpec::Kind::ProjBall: {
            double s = 0.0;
            for (int i = 0; i < d; ++i) {
                const double v = x[i] - m.center[i];
                s += v * v;
            }
            const double n = std::sqrt(s);
            if (n <= m.radius) {
                std::copy(x.begin(), x.end(), out.begin());
            } else {
                const double w = m.radius / n;
                for (int i = 0; i < d; ++i) out[i] = m.center[i] + w * (x[i] - m.center[i]);
            }
            return;
        }
        case MapSpec::Kind::ProjHalfspace: {
            const double s = dot({m.normal.data(), m.normal.size()}, x) - m.offset;
            if (s <= 0.0) {
                std::copy(x.begin(), x.end(), out.begin());
            } else {
                const double n2 = dot({m.normal.data(), m.normal.size()},
                                      {m.normal.data(), m.normal.size()});
                const double w = s / n2;
                for (int i = 0; i < d; ++i) out[i] = x[i] - w * m.normal[i];
            }
            return;
        }
        case MapSpec::Kind::Rotation: {
            const double ca = std::cos(m.angle), sa = std::sin(m.angle);
            const double x0 = x[0], x1 = x[1];
            std::copy(x.begin(), x.end(), out.begin());
            out[0] = ca * x0 - sa * x1;
            out[1] = sa * x0 + ca * x1;
            return;
        }
        case MapSpec::Kind::Contraction: {
            space.combine_into({m.anchor.data(), m.anchor.size()}, x, m.factor, out);
            return;
        }
    }
}

void validate_map(const SpaceModel& space, const MapSpec& m) {
    const std::size_t d = static_cast<std::size_t>(space.dim());
    switch (m.kind) {
        case MapSpec::Kind::Identity:
            return;
        case MapSpec::Kind::ProjBall:
            if (space.kind() != SpaceKind::Euclidean)
                throw invalid_input_error("proj_ball only acts on Euclidean spaces");
            if (m.center.size() != d) throw invalid_input_error("proj_ball: center dimension");
            if (!(m.radius > 0.0)) throw invalid_input_error("proj_ball: radius must be > 0");
            return;
        case MapSpec::Kind::ProjHalfspace: {
            if (space.kind() != SpaceKind::Euclidean)
                throw invalid_input_error("proj_halfspace only acts on Euclidean spaces");
            if (m.normal.size() != d) throw invalid_input_error("proj_halfspace: normal dimension");
            double n2 = 0.0;
            for (double v : m.normal) n2 += v * v;
            if (!(n2 > 0.0)) throw invalid_input_error("proj_halfspace: zero normal");
            return;
        }
        case MapSpec::Kind::Rotation:
            if (space.kind() == SpaceKind::SupNorm)
                throw invalid_input_error("rotation is not nonexpansive in the sup norm");
            if (space.dim() < 2) throw invalid_input_error("rotation needs dimension >= 2");
            return;
        case MapSpec::Kind::Contraction:
            if (m.anchor.size() != d) throw invalid_input_error("contraction: anchor dimension");
            if (!(m.factor >= 0.0 && m.factor <= 1.0))
                throw invalid_input_error("contraction: factor must lie in [0,1]");
            return;
    }
}

}  // namespace

MapSpec MapSpec::identity() { return MapSpec{}; }

MapSpec MapSpec::proj_ball(std::vector<double> center, double radius) {
    MapSpec m;
    m.kind = Kind::ProjBall;
    m.center = std::move(center);
    m.radius = radius;
    return m;
}

MapSpec MapSpec::proj_halfspace(std::vector<double> normal, double offset) {
    MapSpec m;
    m.kind = Kind::ProjHalfspace;
    m.normal = std::move(normal);
    m.offset = offset;
    return m;
}

MapSpec MapSpec::rotation(double angle) {
    MapSpec m;
    m.kind = Kind::Rotation;
    m.angle = angle;
    return m;
}

MapSpec MapSpec::contraction(std::vector<double> anchor, double factor) {
    MapSpec m;
    m.kind = Kind::Contraction;
    m.anchor = std::move(anchor);
    m.factor = factor;
    return m;
}

const char* MapSpec::name() const {
    switch (kind) {
        case Kind::Identity: return "identity";
        case Kind::ProjBall: return "proj_ball";
        case Kind::ProjHalfspace: return "proj_halfspace";
        case Kind::Rotation: return "rotation";
        case Kind::Contraction: return "contraction";
    }
    return "?";
}

long long cyclic_index(long long n, long long N) {
    if (n < 1) throw invalid_input_error("cyclic_index: n must be >= 1");
    if (N < 1) throw invalid_input_error("cyclic_index: N must be >= 1");
    return (n - 1) % N + 1;
}

MappingFamily::MappingFamily(SpaceModel space, std::vector<MapSpec> maps)
    : space_(std::move(space)), maps_(std::move(maps)) {
    if (maps_.empty()) throw invalid_input_error("MappingFamily: needs at least one map");
    for (auto& m : maps_) {
        validate_map(space_, m);
        if (m.kind == MapSpec::Kind::Contraction)
            m.anchor = space_.normalized(Point(m.anchor)).c;
    }
}

void MappingFamily::apply_into(long long n, std::span<const double> x,
                               std::span<double> out) const {
    apply_one(space_, maps_[cyclic_index(n, size()) - 1], x, out);
}

Point MappingFamily::apply(long long n, const Point& x) const {
    Point out;
    out.c.resize(space_.dim());
    apply_into(n, x.view(), {out.c.data(), out.c.size()});
    return out;
}

void MappingFamily::compose_window_into(long long n, std::span<const double> x,
                                        std::span<double> out,
                                        std::span<double> scratch) const {
    if (n < 0) throw invalid_input_error("compose_window: n must be >= 0");
    const long long N = size();
    std::copy(x.begin(), x.end(), out.begin());
    for (long long i = 1; i <= N; ++i) {
        apply_into(n + i, out, scratch);
        std::copy(scratch.begin(), scratch.end(), out.begin());
    }
}

Point MappingFamily::compose_window(long long n, const Point& x) const {
    Point out;
    out.c.resize(space_.dim());
    std::vector<double> scratch(space_.dim());
    compose_window_into(n, x.view(), {out.c.data(), out.c.size()},
                        {scratch.data(), scratch.size()});
    return out;
}

PairBatch sample_pairs(const SpaceModel& space, const Point& center, double radius,
                       long long samples, unsigned long long seed) {
    if (samples < 1) throw invalid_input_error("sample_pairs: samples must be >= 1");
    if (radius > space.certificate().r / 2.0 + kIneqTol)
        throw invalid_input_error("sample_pairs: ball radius exceeds r/2");
    PairBatch b;
    b.dim = space.dim();
    b.count = samples;
    b.x.resize(samples * b.dim);
    b.y.resize(samples * b.dim);
    std::mt19937_64 rng(seed);
    for (long long i = 0; i < samples; ++i) {
        const Point x = space.sample_in_ball(center, radius, rng);
        const Point y = space.sample_in_ball(center, radius, rng);
        std::copy(x.c.begin(), x.c.end(), b.x.begin() + i * b.dim);
        std::copy(y.c.begin(), y.c.end(), b.y.begin() + i * b.dim);
    }
    return b;
}

namespace {

double nonexpansive_excess(const SpaceModel& space, const PointMap& map, const PairBatch& b,
                           long long i) {
    const int d = b.dim;
    std::span<const double> x{b.x.data() + i * d, static_cast<std::size_t>(d)};
    std::span<const double> y{b.y.data() + i * d, static_cast<std::size_t>(d)};
    std::vector<double> tx(d), ty(d);
    map(x, tx);
    map(y, ty);
    return space.distance(tx, ty) - space.distance(x, y);
}

}  // namespace

CheckReport nonexpansive_kernel_serial(const SpaceModel& space, const PointMap& map,
                                       const PairBatch& batch) {
    CheckReport rep;
    for (long long i = 0; i < batch.count; ++i)
        rep.absorb(nonexpansive_excess(space, map, batch, i));
    return rep;
}

CheckReport nonexpansive_kernel_parallel(const SpaceModel& space, const PointMap& map,
                                         const PairBatch& batch, int threads) {
    long long violations = 0;
    double worst = -kInf;
#pragma omp parallel for num_threads(threads) schedule(static) \
    reduction(+ : violations) reduction(max : worst)
    for (long long i = 0; i < batch.count; ++i) {
        const double e = nonexpansive_excess(space, map, batch, i);
        if (e > kIneqTol) ++violations;
        if (e > worst) worst = e;
    }
    CheckReport rep;
    rep.checks = batch.count;
    rep.violations = violations;
    rep.worst_excess = worst;
    return rep;
}

CheckReport check_nonexpansive(const SpaceModel& space, const PointMap& map,
                               const Point& ball_center, double ball_radius,
                               long long samples, unsigned long long seed, int threads) {
    const PairBatch batch = sample_pairs(space, ball_center, ball_radius, samples, seed);
    return threads > 1 ? nonexpansive_kernel_parallel(space, map, batch, threads)
                       : nonexpansive_kernel_serial(space, map, batch);
}

CheckReport check_nonexpansive(const SpaceModel& space, const MapSpec& map,
                               const Point& ball_center, double ball_radius,
                               long long samples, unsigned long long seed, int threads) {
    PointMap fn = [&space, &map](std::span<const double> in, std::span<double> out) {
        apply_one(space, map, in, out);
    };
    return check_nonexpansive(space, fn, ball_center, ball_radius, samples, seed, threads);
}

}  // namespace asymreg
