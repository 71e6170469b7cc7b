#pragma once

#include <cstdint>
#include <functional>

#include "tfse/caputo.hpp"
#include "tfse/linsolve.hpp"

namespace tfse {

/// Real coefficient function applied to |u|^2; the scheme adds f(|u|^2) u.
struct Nonlinearity {
    std::function<double(double)> f;

    /// f(s) = c * s, the cubic term c |u|^2 u. Default coefficient +1.
    static Nonlinearity cubic(double c = 1.0);
    /// f identically zero (linear equation).
    static Nonlinearity none();
};

/// Optional source term g(x, y, t); an empty function means no forcing.
using ForcingFn = std::function<cplx(double, double, double)>;

struct SchrodingerProblem {
    MeshSpec mesh;
    ComplexField u0;            ///< initial data, homogeneous boundary
    Nonlinearity nonlinearity;
    ForcingFn forcing;          ///< empty -> none
};

/// Time levels U^0..U^n stored as contiguous interior blocks of (M-1)^2 entries.
class History {
public:
    History(int m, double h, int capacity_levels);

    int m() const { return m_; }
    double h() const { return h_; }
    int levels() const { return levels_; }
    std::size_t block_size() const { return std::size_t(m_ - 1) * (m_ - 1); }

    /// Interior block of level n; throws HistoryIncomplete when absent.
    const cplx* interior(int n) const;
    /// Level n as a full field with zero boundary.
    ComplexField field(int n) const;

    void push(const ComplexField& level);
    void push_interior(const cplx* block);

private:
    int m_;
    double h_;
    int levels_ = 0;
    std::vector<cplx> data_;
};

enum class Backend { dst, dense };

inline constexpr std::uint64_t default_memory_cap = std::uint64_t(4) << 30;  // 4 GiB

struct RunOptions {
    Backend backend = Backend::dst;
    std::uint64_t memory_cap_bytes = default_memory_cap;
    /// Sample the forcing for all steps up front (trades memory for calls).
    bool precompute_forcing = false;
};

/// Right side of the level-n linear system
///   (i a0/mu) U^n + Lap_h U^n = (i/mu) (sum_{i=1}^{n-1} (a[n-i-1]-a[n-i]) U^i
///                                       + a[n-1] U^0) - f(|U^{n-1}|^2) U^{n-1} + g^n.
/// The history sum runs most-recent-first; g is sampled at t_n.
ComplexField assemble_rhs(int n, const History& history, const L1Kernel& kernel,
                          const Nonlinearity& nl, const ForcingFn& forcing,
                          const MeshSpec& mesh);

/// One level advance: solve (sigma I + Lap_h) U^n = rhs with sigma = i a0/mu.
/// The caller owns the history; nothing is appended.
ComplexField step(int n, const History& history, const L1Kernel& kernel, const Nonlinearity& nl,
                  const ForcingFn& forcing, const LinearSolver& solver, const MeshSpec& mesh);

/// March the full scheme: returns N+1 levels, level 0 = u0.
/// After every step an L2 bound on the discrete fractional derivative is
/// enforced (||D U^n|| <= 2/(tau^alpha Gamma(2-alpha)) * max_{s<=n} ||U^s||);
/// violations or non-finite values throw NumericFailure.
History run(const SchrodingerProblem& problem, const RunOptions& opts = {});

} // namespace tfse
