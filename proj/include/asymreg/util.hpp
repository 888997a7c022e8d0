#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace asymreg {

// Certified rate values (theta outputs, Phi, Psi) overflow 64 bits quickly.
using BigInt = boost::multiprecision::cpp_int;

// Absolute slack applied to every metric inequality check.
inline constexpr double kIneqTol = 1e-9;
// Points closer than this are treated as coincident.
inline constexpr double kCoincideTol = 1e-12;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct invalid_input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct geodesic_range_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct budget_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct modulus_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by run() when a trace hypothesis fails; index is the first bad n.
struct bound_violation_error : std::runtime_error {
    long long index;
    bound_violation_error(const std::string& what, long long n)
        : std::runtime_error(what), index(n) {}
};

// Ceiling with a directed-rounding guard: values within 1e-12 of an integer
// round to that integer instead of up. Rate values are certificates, so an
// off-by-one from floating point matters.
inline long long guarded_ceil(double x) {
    if (!std::isfinite(x) || std::abs(x) > 9.0e18)
        throw invalid_input_error("guarded_ceil: value out of integer range");
    const double r = std::nearbyint(x);
    if (std::abs(x - r) <= 1e-12) return static_cast<long long>(r);
    return static_cast<long long>(std::ceil(x));
}

inline long long guarded_ceil_log(double x) {
    if (!(x > 0.0)) throw invalid_input_error("guarded_ceil_log: nonpositive argument");
    return guarded_ceil(std::log(x));
}

// Worker count for the parallel kernels; default 1 (serial reference path).
inline int env_worker_count() {
    const char* s = std::getenv("ASYMREG_WORKERS");
    if (s == nullptr) return 1;
    const int v = std::atoi(s);
    return v >= 1 ? v : 1;
}

}  // namespace asymreg
