#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "asymreg/util.hpp"

namespace asymreg {

// Step-size sequence (lambda_n) in [0,1] with its three proof-mining moduli:
//   theta  — rate of divergence:  sum_{n=1}^{theta(m)} lambda_n >= m for all m >= 1;
//   gamma  — Cauchy modulus of sum |lambda_{n+N} - lambda_n|, parametrized by N:
//            sum_{n=gamma(eps)+1}^{gamma(eps)+p} |lambda_{n+N} - lambda_n| <= eps for all p;
//   alpha  — rate of convergence of lambda_n -> 0:  lambda_{n+1} <= eps for n >= alpha(eps).
// Schedules are closed-form families, so the moduli are total functions and
// monotone by construction (theta nondecreasing, gamma/alpha nonincreasing in eps).
class StepSchedule {
public:
    enum class Family { Harmonic, Power, Constant };

    // lambda_n = 1/(n+1); theta(m) = 4^m, gamma(eps) = ceil(N/eps), alpha(eps) = ceil(1/eps).
    static StepSchedule harmonic();
    // lambda_n = 1/(n+1)^q, q in (0,1]; q = 1 falls back to the harmonic moduli.
    static StepSchedule power(double q);
    // lambda_n = c, c in (0,1]; diverges with theta(m) = ceil(m/c); no vanishing rate.
    static StepSchedule constant(double c);

    Family family() const { return family_; }
    double exponent() const { return q_; }
    double value() const { return c_; }
    std::string name() const;

    double lambda(long long n) const;       // n >= 1
    BigInt theta(long long m) const;        // m >= 1
    long long gamma(long long N, double eps) const;
    bool has_vanishing_rate() const { return family_ != Family::Constant; }
    long long alpha(double eps) const;      // throws for constant schedules

private:
    StepSchedule(Family f, double q, double c) : family_(f), q_(q), c_(c) {}
    Family family_;
    double q_ = 1.0;
    double c_ = 0.0;
};

// Moduli with N bound, in the shape the rate calculators consume.
struct BoundModuli {
    std::function<long long(double)> gamma;
    std::function<BigInt(long long)> theta;
    std::function<long long(double)> alpha;  // empty when no vanishing rate exists
};

BoundModuli bind_moduli(const StepSchedule& s, long long N);

struct ValidationReport {
    long long checks = 0;
    long long violations = 0;
    double worst_excess = -kInf;  // max of (required - achieved) resp. (achieved - allowed)

    bool pass() const { return violations == 0; }
    void absorb(double excess) {
        ++checks;
        if (excess > kIneqTol) ++violations;
        if (excess > worst_excess) worst_excess = excess;
    }
};

// Checks sum_{n=1}^{theta(m)} lambda_n >= m for every m <= m_max. Throws
// budget_exceeded_error when theta(m_max) does not fit the index budget.
ValidationReport validate_divergence_modulus(const StepSchedule& s, long long m_max,
                                             long long budget = 100'000'000);

// Checks the gamma(eps) tail blocks of sum |lambda_{n+N} - lambda_n| up to
// tail_horizon terms for each eps in the grid.
ValidationReport validate_cauchy_modulus(const StepSchedule& s, long long N,
                                         std::span<const double> eps_grid,
                                         long long tail_horizon);

// Checks lambda_{n+1} <= eps for alpha(eps) <= n <= horizon for each eps.
ValidationReport validate_vanishing_modulus(const StepSchedule& s,
                                            std::span<const double> eps_grid,
                                            long long horizon);

}  // namespace asymreg
