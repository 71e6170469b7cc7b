#pragma once

#include <memory>
#include <vector>

#include "tfse/field.hpp"

namespace tfse {

/// The per-step operator sigma*I + Laplacian_h on the homogeneous interior.
/// Nonsingular whenever Im(sigma) != 0 or Re(sigma) > 0 (all eigenvalues of
/// Laplacian_h are real and negative).
struct ShiftedLaplacian {
    cplx sigma;
    MeshSpec mesh;
};

/// Eigenvalue of the five-point Laplacian for sine mode (p,q):
/// -(4/h^2) (sin^2(p pi / 2M) + sin^2(q pi / 2M)).
double laplacian_eigenvalue(int p, int q, int M, double h);

/// (sigma*I + Laplacian_h) u.
ComplexField apply_shifted(const ShiftedLaplacian& op, const ComplexField& u);

/// Type-I discrete sine transform of an interior block (size (M-1)^2, row-major):
/// out[p,q] = sum_{j,k} in[j,k] sin(j p pi / M) sin(k q pi / M).
std::vector<cplx> dst1_forward(const std::vector<cplx>& block, int M);

/// Inverse transform: forward scaled by (2/M)^2.
std::vector<cplx> dst1_inverse(const std::vector<cplx>& block, int M);

/// Backend-independent solve interface for (sigma*I + Laplacian_h) U = b.
class LinearSolver {
public:
    virtual ~LinearSolver() = default;
    virtual ComplexField solve(const ComplexField& b) const = 0;
};

/// Fast solver by sine diagonalization. The (M-1)x(M-1) sine matrix and the
/// eigenvalue table are built once at construction and reused for every solve
/// (two matrix passes per transform, O(M^3) per solve).
class DstSolver : public LinearSolver {
public:
    explicit DstSolver(const ShiftedLaplacian& op);
    ComplexField solve(const ComplexField& b) const override;

private:
    ShiftedLaplacian op_;
    std::vector<double> sine_;    ///< (M-1)^2 matrix entries sin(p j pi / M)
    std::vector<double> lambda_;  ///< 1d eigenvalues -(4/h^2) sin^2(p pi / 2M)
};

/// Dense reference oracle: assembles the (M-1)^2 x (M-1)^2 matrix and
/// factors it once (LU with partial pivoting). M <= 24.
class DenseSolver : public LinearSolver {
public:
    explicit DenseSolver(const ShiftedLaplacian& op);
    ComplexField solve(const ComplexField& b) const override;

private:
    ShiftedLaplacian op_;
    int dim_;
    std::vector<cplx> lu_;
    std::vector<int> piv_;
};

/// One-shot conveniences over the solver classes.
ComplexField solve_dst(const ShiftedLaplacian& op, const ComplexField& b);
ComplexField solve_dense_reference(const ShiftedLaplacian& op, const ComplexField& b);

} // namespace tfse
