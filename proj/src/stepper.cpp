#include "tfse/stepper.hpp"

#include <cmath>
#include <memory>
#include <string>

namespace tfse {

Nonlinearity Nonlinearity::cubic(double c) {
    return Nonlinearity{[c](double s) { return c * s; }};
}

Nonlinearity Nonlinearity::none() {
    return Nonlinearity{[](double) { return 0.0; }};
}

History::History(int m, double h, int capacity_levels) : m_(m), h_(h) {
    if (m < 2) throw DomainError("history needs M >= 2");
    data_.reserve(std::size_t(capacity_levels) * block_size());
}

const cplx* History::interior(int n) const {
    if (n < 0 || n >= levels_)
        throw HistoryIncomplete("level " + std::to_string(n) + " not stored (have " +
                                std::to_string(levels_) + ")");
    return data_.data() + std::size_t(n) * block_size();
}

ComplexField History::field(int n) const { return field_from_interior(m_, h_, interior(n)); }

void History::push(const ComplexField& level) {
    if (level.m() != m_) throw MeshMismatch("level has M = " + std::to_string(level.m()));
    const std::vector<cplx> block = level.interior();
    push_interior(block.data());
}

void History::push_interior(const cplx* block) {
    data_.insert(data_.end(), block, block + block_size());
    ++levels_;
}

namespace {

/// sum_{i=1}^{n-1} (a[n-i-1]-a[n-i]) U^i + a[n-1] U^0, most-recent-first.
std::vector<cplx> history_weighted_sum(const History& history, const L1Kernel& kernel, int n) {
    const std::size_t blk = history.block_size();
    std::vector<cplx> hsum(blk, cplx{0.0, 0.0});
    for (int i = n - 1; i >= 1; --i) {
        const double w = kernel.a[n - i - 1] - kernel.a[n - i];
        const cplx* ui = history.interior(i);
        for (std::size_t t = 0; t < blk; ++t) hsum[t] += w * ui[t];
    }
    const double w0 = kernel.a[n - 1];
    const cplx* u0 = history.interior(0);
    for (std::size_t t = 0; t < blk; ++t) hsum[t] += w0 * u0[t];
    return hsum;
}

ComplexField rhs_from_hsum(const std::vector<cplx>& hsum, int n, const History& history,
                           const L1Kernel& kernel, const Nonlinearity& nl,
                           const ForcingFn& forcing, const MeshSpec& mesh) {
    const int M = mesh.M;
    const cplx i_over_mu{0.0, 1.0 / kernel.mu};
    const cplx* prev = history.interior(n - 1);
    ComplexField rhs(M, mesh.h);
    const double tn = n * mesh.tau;
    std::size_t t = 0;
    for (int j = 1; j < M; ++j)
        for (int k = 1; k < M; ++k, ++t) {
            cplx v = i_over_mu * hsum[t] - nl.f(std::norm(prev[t])) * prev[t];
            if (forcing) v += forcing(j * mesh.h, k * mesh.h, tn);
            rhs.at(j, k) = v;
        }
    return rhs;
}

void check_step_preconditions(int n, const History& history, const L1Kernel& kernel,
                              const MeshSpec& mesh) {
    if (n < 1) throw DomainError("step index must be >= 1");
    if (history.levels() < n)
        throw HistoryIncomplete("level " + std::to_string(n) + " needs levels 0.." +
                                std::to_string(n - 1) + ", have " +
                                std::to_string(history.levels()));
    if (history.m() != mesh.M) throw MeshMismatch("history and mesh disagree on M");
    if (int(kernel.a.size()) < n) throw HistoryTooShort("kernel holds too few weights");
}

double block_l2(const cplx* block, std::size_t n, double h) {
    double acc = 0.0;
    for (std::size_t t = 0; t < n; ++t) acc += std::norm(block[t]);
    return h * std::sqrt(acc);
}

} // namespace

ComplexField assemble_rhs(int n, const History& history, const L1Kernel& kernel,
                          const Nonlinearity& nl, const ForcingFn& forcing,
                          const MeshSpec& mesh) {
    check_step_preconditions(n, history, kernel, mesh);
    return rhs_from_hsum(history_weighted_sum(history, kernel, n), n, history, kernel, nl,
                         forcing, mesh);
}

ComplexField step(int n, const History& history, const L1Kernel& kernel, const Nonlinearity& nl,
                  const ForcingFn& forcing, const LinearSolver& solver, const MeshSpec& mesh) {
    return solver.solve(assemble_rhs(n, history, kernel, nl, forcing, mesh));
}

History run(const SchrodingerProblem& problem, const RunOptions& opts) {
    const MeshSpec& mesh = problem.mesh;
    const int M = mesh.M;
    const int N = mesh.N;
    if (problem.u0.m() != M) throw MeshMismatch("u0 does not match the mesh");
    for (int j = 0; j <= M; ++j)
        if (problem.u0.at(j, 0) != cplx{0.0, 0.0} || problem.u0.at(j, M) != cplx{0.0, 0.0} ||
            problem.u0.at(0, j) != cplx{0.0, 0.0} || problem.u0.at(M, j) != cplx{0.0, 0.0})
            throw NonVanishingBoundary("u0 must vanish on the boundary");

    const std::uint64_t blk = std::uint64_t(M - 1) * (M - 1);
    const std::uint64_t bytes = std::uint64_t(N) * blk * sizeof(cplx);
    if (bytes > opts.memory_cap_bytes)
        throw MemoryBudgetExceeded("history needs " + std::to_string(bytes) +
                                   " bytes, cap is " + std::to_string(opts.memory_cap_bytes));

    const L1Kernel kernel = l1_weights(mesh.alpha, mesh.tau, N);
    const cplx sigma = cplx{0.0, kernel.a[0] / kernel.mu};
    const ShiftedLaplacian op{sigma, mesh};
    std::unique_ptr<LinearSolver> solver;
    if (opts.backend == Backend::dst)
        solver = std::make_unique<DstSolver>(op);
    else
        solver = std::make_unique<DenseSolver>(op);

    std::vector<std::vector<cplx>> forcing_rows;
    if (opts.precompute_forcing && problem.forcing) {
        forcing_rows.resize(N + 1);
        for (int n = 1; n <= N; ++n) {
            forcing_rows[n].resize(blk);
            std::size_t t = 0;
            for (int j = 1; j < M; ++j)
                for (int k = 1; k < M; ++k, ++t)
                    forcing_rows[n][t] = problem.forcing(j * mesh.h, k * mesh.h, n * mesh.tau);
        }
    }

    History history(M, mesh.h, N + 1);
    history.push(problem.u0);

    const double bound_factor = 2.0 * kernel.a[0] / kernel.mu;
    double max_norm = block_l2(history.interior(0), blk, mesh.h);

    for (int n = 1; n <= N; ++n) {
        const std::vector<cplx> hsum = history_weighted_sum(history, kernel, n);
        ComplexField rhs =
            forcing_rows.empty()
                ? rhs_from_hsum(hsum, n, history, kernel, problem.nonlinearity, problem.forcing,
                                mesh)
                : rhs_from_hsum(hsum, n, history, kernel, problem.nonlinearity, ForcingFn{},
                                mesh);
        if (!forcing_rows.empty()) {
            std::size_t t = 0;
            for (int j = 1; j < M; ++j)
                for (int k = 1; k < M; ++k, ++t) rhs.at(j, k) += forcing_rows[n][t];
        }
        const ComplexField un = solver->solve(rhs);
        const std::vector<cplx> un_int = un.interior();

        const double l2_un = block_l2(un_int.data(), blk, mesh.h);
        if (!std::isfinite(l2_un))
            throw NumericFailure("non-finite solution at level " + std::to_string(n));
        max_norm = std::max(max_norm, l2_un);

        double acc = 0.0;
        for (std::size_t t = 0; t < blk; ++t)
            acc += std::norm(kernel.a[0] * un_int[t] - hsum[t]);
        const double deriv_l2 = mesh.h * std::sqrt(acc) / kernel.mu;
        if (deriv_l2 > bound_factor * max_norm * (1.0 + 1e-9))
            throw NumericFailure("fractional-derivative bound violated at level " +
                                 std::to_string(n));

        history.push_interior(un_int.data());
    }
    return history;
}

} // namespace tfse
