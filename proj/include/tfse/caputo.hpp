#pragma once

#include <vector>

#include "tfse/field.hpp"

namespace tfse {

/// L1 quadrature data for the Caputo derivative of order alpha on uniform step tau:
///   D u^n = (1/mu) * (a[0] u^n - sum_{i=1}^{n-1} (a[n-i-1]-a[n-i]) u^i - a[n-1] u^0)
/// with mu = tau^alpha * Gamma(2-alpha) and a[i] = (i+1)^(1-alpha) - i^(1-alpha).
struct L1Kernel {
    double alpha;
    double tau;
    double mu;
    std::vector<double> a;  ///< a[0..N-1], a[0] == 1, strictly decreasing
};

/// Build the kernel; throws DomainError for alpha outside (0,1) or tau <= 0.
/// Gamma(2-alpha) is evaluated by std::tgamma (verified to 1e-14 relative on (1,3)
/// in the test suite).
L1Kernel l1_weights(double alpha, double tau, int N);

/// Apply the L1 operator to a scalar time sequence u^0..u^n (history.size() == n+1 >= 2).
cplx caputo_l1_apply(const L1Kernel& kernel, const std::vector<cplx>& history);

/// Same, nodewise on fields.
ComplexField caputo_l1_apply(const L1Kernel& kernel, const std::vector<ComplexField>& history);

/// Complementary multipliers: theta[0] = mu/a[0],
/// theta[n] = (1/a[0]) * sum_{i=1}^{n} (a[i-1]-a[i]) theta[n-i].
/// Positive, monotonically decreasing, theta[n] <= Gamma(2-alpha) tau^alpha (n+1)^(alpha-1).
struct ThetaKernel {
    double alpha;
    double tau;
    std::vector<double> theta;  ///< theta[0..N-1]
};

ThetaKernel theta_multipliers(const L1Kernel& kernel, int N);

/// E v^n = sum_{i=1}^{n} theta[n-i] v^i for the sequence v^1..v^n
/// (history[0] is v^1); the empty sequence (n = 0) gives 0.
cplx e_alpha_apply(const ThetaKernel& th, const std::vector<cplx>& history);

/// |D_tau^alpha t^gamma - D_t^alpha t^gamma| at t = T on N uniform steps,
/// using the closed form D_t^alpha t^gamma = Gamma(gamma+1)/Gamma(gamma+1-alpha) t^(gamma-alpha).
double truncation_probe(double alpha, double gamma, double T, int N);

/// Least-squares decay exponent: -slope of log2(err) against log2(N).
double fit_slope(const std::vector<int>& Ns, const std::vector<double>& errs);

} // namespace tfse
