#pragma once

#include <limits>
#include <utility>

#include "tfse/stepper.hpp"

namespace tfse {

inline constexpr double blank = std::numeric_limits<double>::quiet_NaN();  ///< empty CSV cell

/// Errors of a run against the known solution of example problem 1.
/// E_l is the final-time discrete L2 error, E_g the max over levels 1..N.
struct ErrorReport {
    double alpha;
    int N;
    int M;
    double E_l;
    double E_g;
    double rate_l = blank;  ///< log2-ratio to the previous row of the same alpha ladder
    double rate_g = blank;
};

struct GridRatioRow {
    double alpha;
    double tau;
    double h;
    int N;
    int M;
    double E_l;
};

/// Two-mesh difference: the N-step run against the companion N/2-step run on
/// the same spatial mesh, compared at the final time.
struct TwoMeshReport {
    double alpha;
    int N;
    int M;
    double e_L;
    double rate = blank;
};

struct StabilityRow {
    double alpha;
    int N;
    int M;
    double epsilon;
    double amplification;
};

struct ProbeRow {
    double alpha;
    double gamma;
    int N;
    double error;
    double slope = blank;  ///< least-squares decay exponent, on each ladder's last row
};

struct ExperimentOptions {
    Backend backend = Backend::dst;
    std::uint64_t memory_cap_bytes = default_memory_cap;
};

/// u(x,y,t) = (t^alpha - 1)(1+i) sin(pi x) sin(pi y): vanishes on the
/// boundary, t-derivatives blow up like t^(alpha-1) near t = 0.
std::function<cplx(double, double, double)> manufactured_exact(double alpha);

/// Source term balancing the cubic focusing equation for the solution above:
/// g = Gamma(1+alpha)(i-1) S - 2 pi^2 (t^alpha-1)(1+i) S + 2 (t^alpha-1)^3 (1+i) S^3,
/// S = sin(pi x) sin(pi y).
ForcingFn manufactured_forcing(double alpha);

/// Benchmark problems on [0,1]^2 with T = 1:
///   1: forced problem with the known solution above, focusing cubic;
///   2: defocusing cubic, u0 = sin(pi x) sin(pi y), no forcing;
///   3: focusing cubic, ramp data u0 = x sin(pi y) for x <= 1/2 (else 0), no forcing.
SchrodingerProblem example_problem(int id, double alpha, int M, int N);

/// E_l / E_g of a stored history against the known solution of example 1.
ErrorReport measure_errors(const History& history, double alpha, double T);

/// Example-1 ladder with the coupling M = ceil(sqrt(N)); rows grouped by alpha,
/// consecutive-row rates filled within each ladder.
std::vector<ErrorReport> convergence_table(const std::vector<double>& alphas,
                                           const std::vector<int>& Ns,
                                           const ExperimentOptions& opts = {});

/// Example-1 local errors for explicit (tau, h) pairs; both must divide T and L.
std::vector<GridRatioRow> grid_ratio_study(double alpha,
                                           const std::vector<std::pair<double, double>>& pairs,
                                           const ExperimentOptions& opts = {});

/// Two-mesh error estimate for example 2 or 3 (no exact solution): runs N and
/// N/2 steps, e_L = L2 difference of the final levels. N must be even.
TwoMeshReport two_mesh(int example_id, double alpha, int N, int M,
                       const ExperimentOptions& opts = {});

/// Ladder of two_mesh rows with rates; caches runs shared between rows.
std::vector<TwoMeshReport> two_mesh_table(int example_id, const std::vector<double>& alphas,
                                          const std::vector<int>& Ns, int M,
                                          const ExperimentOptions& opts = {});

/// Runs example 2 unperturbed and with u0 scaled by (1+epsilon); returns
/// max over all stored levels (including level 0) of ||U^n - V^n|| / ||u0 - v0||.
/// epsilon = 0 returns 0 by convention.
double stability_experiment(double alpha, int N, int M, double epsilon,
                            const ExperimentOptions& opts = {});

std::vector<StabilityRow> stability_table(const std::vector<double>& alphas,
                                          const std::vector<int>& Ns, int M,
                                          const std::vector<double>& epsilons,
                                          const ExperimentOptions& opts = {});

/// Truncation-error ladder of the L1 kernel on t^alpha at t = 1.
std::vector<ProbeRow> probe_table(const std::vector<double>& alphas, const std::vector<int>& Ns);

} // namespace tfse
