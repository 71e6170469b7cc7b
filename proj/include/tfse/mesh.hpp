#pragma once

#include "tfse/errors.hpp"

namespace tfse {

/// Uniform space-time mesh on [0,L]^2 x [0,T].
/// Nodes: (x_j, y_k, t_n) = (j*h, k*h, n*tau) with 0 <= j,k <= M, 0 <= n <= N.
struct MeshSpec {
    double alpha;  ///< fractional order, 0 < alpha < 1
    double L;      ///< spatial edge length
    double T;      ///< final time
    int M;         ///< subdivisions per spatial axis (>= 2)
    int N;         ///< time steps (>= 1)
    double h;     ///< L / M
    double tau;   ///< T / N
};

/// Validated constructor; throws DomainError on bad parameters.
MeshSpec make_mesh(double alpha, double L, double T, int M, int N);

/// Smallest m with m*m >= n; exact in integer arithmetic.
int ceil_sqrt(int n);

} // namespace tfse
