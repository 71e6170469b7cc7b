#include "tfse/linsolve.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace tfse {

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> sine_matrix(int M) {
    const int m = M - 1;
    std::vector<double> S(std::size_t(m) * m);
    for (int p = 1; p <= m; ++p)
        for (int j = 1; j <= m; ++j)
            S[std::size_t(p - 1) * m + (j - 1)] = std::sin(p * j * pi / M);
    return S;
}

/// out = S * A * S for row-major m x m blocks (S symmetric, real).
std::vector<cplx> sine_congruence(const std::vector<double>& S, const std::vector<cplx>& A, int m) {
    std::vector<cplx> tmp(std::size_t(m) * m, cplx{0.0, 0.0});
    for (int p = 0; p < m; ++p) {
        cplx* out_row = &tmp[std::size_t(p) * m];
        for (int j = 0; j < m; ++j) {
            const double w = S[std::size_t(p) * m + j];
            const cplx* in_row = &A[std::size_t(j) * m];
            for (int k = 0; k < m; ++k) out_row[k] += w * in_row[k];
        }
    }
    std::vector<cplx> out(std::size_t(m) * m, cplx{0.0, 0.0});
    for (int p = 0; p < m; ++p) {
        const cplx* in_row = &tmp[std::size_t(p) * m];
        for (int k = 0; k < m; ++k) {
            const cplx w = in_row[k];
            const double* s_row = &S[std::size_t(k) * m];
            cplx* out_row = &out[std::size_t(p) * m];
            for (int q = 0; q < m; ++q) out_row[q] += w * s_row[q];
        }
    }
    return out;
}

void check_block(const std::vector<cplx>& block, int M) {
    if (M < 2) throw DomainError("transform needs M >= 2");
    const std::size_t want = std::size_t(M - 1) * (M - 1);
    if (block.size() != want)
        throw DomainError("interior block has " + std::to_string(block.size()) +
                          " entries, expected " + std::to_string(want));
}

} // namespace

double laplacian_eigenvalue(int p, int q, int M, double h) {
    const double sp = std::sin(p * pi / (2.0 * M));
    const double sq = std::sin(q * pi / (2.0 * M));
    return -(4.0 / (h * h)) * (sp * sp + sq * sq);
}

ComplexField apply_shifted(const ShiftedLaplacian& op, const ComplexField& u) {
    ComplexField out = laplacian_5pt(u, op.mesh.h);
    const int M = u.m();
    for (int j = 1; j < M; ++j)
        for (int k = 1; k < M; ++k) out.at(j, k) += op.sigma * u.at(j, k);
    return out;
}

std::vector<cplx> dst1_forward(const std::vector<cplx>& block, int M) {
    check_block(block, M);
    return sine_congruence(sine_matrix(M), block, M - 1);
}

std::vector<cplx> dst1_inverse(const std::vector<cplx>& block, int M) {
    std::vector<cplx> out = dst1_forward(block, M);
    const double scale = (2.0 / M) * (2.0 / M);
    for (cplx& z : out) z *= scale;
    return out;
}

DstSolver::DstSolver(const ShiftedLaplacian& op)
    : op_(op), sine_(sine_matrix(op.mesh.M)), lambda_(op.mesh.M - 1) {
    const int M = op.mesh.M;
    for (int p = 1; p < M; ++p) {
        const double s = std::sin(p * pi / (2.0 * M));
        lambda_[p - 1] = -(4.0 / (op.mesh.h * op.mesh.h)) * s * s;
    }
    double least = 1e300;
    for (int p = 0; p < M - 1; ++p)
        for (int q = 0; q < M - 1; ++q)
            least = std::min(least, std::abs(op.sigma + lambda_[p] + lambda_[q]));
    if (least < 1e-300)
        throw SingularShift("sigma + lambda has magnitude " + std::to_string(least));
}

ComplexField DstSolver::solve(const ComplexField& b) const {
    const int M = op_.mesh.M;
    if (b.m() != M) throw MeshMismatch("right side lives on a different mesh");
    const int m = M - 1;
    std::vector<cplx> hat = sine_congruence(sine_, b.interior(), m);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            hat[std::size_t(p) * m + q] /= op_.sigma + lambda_[p] + lambda_[q];
    std::vector<cplx> sol = sine_congruence(sine_, hat, m);
    const double scale = (2.0 / M) * (2.0 / M);
    for (cplx& z : sol) z *= scale;
    return field_from_interior(M, op_.mesh.h, sol.data());
}

DenseSolver::DenseSolver(const ShiftedLaplacian& op) : op_(op) {
    const int M = op.mesh.M;
    if (M > 24) throw TooLarge("dense reference solver supports M <= 24, got M = " + std::to_string(M));
    const int m = M - 1;
    dim_ = m * m;
    lu_.assign(std::size_t(dim_) * dim_, cplx{0.0, 0.0});
    const double inv_h2 = 1.0 / (op.mesh.h * op.mesh.h);
    auto row_of = [m](int j, int k) { return (j - 1) * m + (k - 1); };
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k) {
            const int r = row_of(j, k);
            lu_[std::size_t(r) * dim_ + r] = op.sigma - 4.0 * inv_h2;
            if (j > 1) lu_[std::size_t(r) * dim_ + row_of(j - 1, k)] = inv_h2;
            if (j < m) lu_[std::size_t(r) * dim_ + row_of(j + 1, k)] = inv_h2;
            if (k > 1) lu_[std::size_t(r) * dim_ + row_of(j, k - 1)] = inv_h2;
            if (k < m) lu_[std::size_t(r) * dim_ + row_of(j, k + 1)] = inv_h2;
        }
    piv_.resize(dim_);
    double amax = 0.0;
    for (const cplx& z : lu_) amax = std::max(amax, std::abs(z));
    for (int c = 0; c < dim_; ++c) {
        int pr = c;
        double best = std::abs(lu_[std::size_t(c) * dim_ + c]);
        for (int r = c + 1; r < dim_; ++r) {
            const double cand = std::abs(lu_[std::size_t(r) * dim_ + c]);
            if (cand > best) {
                best = cand;
                pr = r;
            }
        }
        // relative to the matrix scale so an exactly singular shift is caught
        // even after roundoff fills the pivot with noise
        if (best < 1e-13 * amax) throw NearSingular("pivot magnitude " + std::to_string(best));
        piv_[c] = pr;
        if (pr != c)
            for (int cc = 0; cc < dim_; ++cc)
                std::swap(lu_[std::size_t(c) * dim_ + cc], lu_[std::size_t(pr) * dim_ + cc]);
        const cplx d = lu_[std::size_t(c) * dim_ + c];
        for (int r = c + 1; r < dim_; ++r) {
            cplx& f = lu_[std::size_t(r) * dim_ + c];
            if (f == cplx{0.0, 0.0}) continue;
            f /= d;
            const cplx fr = f;
            for (int cc = c + 1; cc < dim_; ++cc)
                lu_[std::size_t(r) * dim_ + cc] -= fr * lu_[std::size_t(c) * dim_ + cc];
        }
    }
}

ComplexField DenseSolver::solve(const ComplexField& b) const {
    const int M = op_.mesh.M;
    if (b.m() != M) throw MeshMismatch("right side lives on a different mesh");
    std::vector<cplx> x = b.interior();
    for (int c = 0; c < dim_; ++c)
        if (piv_[c] != c) std::swap(x[c], x[piv_[c]]);
    for (int r = 1; r < dim_; ++r) {
        cplx acc = x[r];
        for (int c = 0; c < r; ++c) acc -= lu_[std::size_t(r) * dim_ + c] * x[c];
        x[r] = acc;
    }
    for (int r = dim_ - 1; r >= 0; --r) {
        cplx acc = x[r];
        for (int c = r + 1; c < dim_; ++c) acc -= lu_[std::size_t(r) * dim_ + c] * x[c];
        x[r] = acc / lu_[std::size_t(r) * dim_ + r];
    }
    return field_from_interior(M, op_.mesh.h, x.data());
}

ComplexField solve_dst(const ShiftedLaplacian& op, const ComplexField& b) {
    return DstSolver(op).solve(b);
}

ComplexField solve_dense_reference(const ShiftedLaplacian& op, const ComplexField& b) {
    return DenseSolver(op).solve(b);
}

} // namespace tfse
