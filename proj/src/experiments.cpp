#include "tfse/experiments.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace tfse {

namespace {

constexpr double pi = std::numbers::pi;

RunOptions to_run_options(const ExperimentOptions& opts) {
    RunOptions r;
    r.backend = opts.backend;
    r.memory_cap_bytes = opts.memory_cap_bytes;
    return r;
}

/// Interior block of sin(pi x_j) sin(pi y_k).
std::vector<cplx> sine_block(int M, double h) {
    std::vector<cplx> S(std::size_t(M - 1) * (M - 1));
    std::size_t t = 0;
    for (int j = 1; j < M; ++j)
        for (int k = 1; k < M; ++k, ++t) S[t] = std::sin(pi * j * h) * std::sin(pi * k * h);
    return S;
}

double rate_between(double err_prev, double err_cur, int n_prev, int n_cur) {
    return std::log2(err_prev / err_cur) / std::log2(double(n_cur) / n_prev);
}

} // namespace

std::function<cplx(double, double, double)> manufactured_exact(double alpha) {
    return [alpha](double x, double y, double t) {
        return (std::pow(t, alpha) - 1.0) * cplx{1.0, 1.0} * std::sin(pi * x) * std::sin(pi * y);
    };
}

ForcingFn manufactured_forcing(double alpha) {
    const double g1a = std::tgamma(1.0 + alpha);
    return [alpha, g1a](double x, double y, double t) {
        const double S = std::sin(pi * x) * std::sin(pi * y);
        const double phi = std::pow(t, alpha) - 1.0;
        return g1a * cplx{-1.0, 1.0} * S - 2.0 * pi * pi * phi * cplx{1.0, 1.0} * S +
               2.0 * phi * phi * phi * cplx{1.0, 1.0} * S * S * S;
    };
}

SchrodingerProblem example_problem(int id, double alpha, int M, int N) {
    const MeshSpec mesh = make_mesh(alpha, 1.0, 1.0, M, N);
    switch (id) {
    case 1: {
        const auto u = manufactured_exact(alpha);
        return SchrodingerProblem{mesh, sample([&](double x, double y) { return u(x, y, 0.0); }, mesh),
                                  Nonlinearity::cubic(1.0), manufactured_forcing(alpha)};
    }
    case 2:
        return SchrodingerProblem{
            mesh,
            sample([](double x, double y) { return cplx(std::sin(pi * x) * std::sin(pi * y)); },
                   mesh),
            Nonlinearity::cubic(-1.0), ForcingFn{}};
    case 3:
        return SchrodingerProblem{
            mesh,
            sample([](double x, double y) {
                       return x <= 0.5 ? cplx(x * std::sin(pi * y)) : cplx{0.0, 0.0};
                   },
                   mesh),
            Nonlinearity::cubic(1.0), ForcingFn{}};
    default:
        throw DomainError("example id must be 1, 2 or 3, got " + std::to_string(id));
    }
}

ErrorReport measure_errors(const History& history, double alpha, double T) {
    const int M = history.m();
    const int N = history.levels() - 1;
    const double h = history.h();
    const double tau = T / N;
    const std::vector<cplx> S = sine_block(M, h);
    const std::size_t blk = history.block_size();
    double e_final = 0.0, e_max = 0.0;
    for (int n = 1; n <= N; ++n) {
        const cplx factor = (std::pow(n * tau, alpha) - 1.0) * cplx{1.0, 1.0};
        const cplx* u = history.interior(n);
        double acc = 0.0;
        for (std::size_t t = 0; t < blk; ++t) acc += std::norm(u[t] - factor * S[t]);
        const double err = h * std::sqrt(acc);
        e_max = std::max(e_max, err);
        if (n == N) e_final = err;
    }
    return ErrorReport{alpha, N, M, e_final, e_max};
}

std::vector<ErrorReport> convergence_table(const std::vector<double>& alphas,
                                           const std::vector<int>& Ns,
                                           const ExperimentOptions& opts) {
    std::vector<ErrorReport> rows;
    rows.reserve(alphas.size() * Ns.size());
    for (double alpha : alphas) {
        const std::size_t first = rows.size();
        for (int N : Ns) {
            const int M = ceil_sqrt(N);
            const History hist = run(example_problem(1, alpha, M, N), to_run_options(opts));
            rows.push_back(measure_errors(hist, alpha, 1.0));
        }
        for (std::size_t i = first + 1; i < rows.size(); ++i) {
            rows[i].rate_l = rate_between(rows[i - 1].E_l, rows[i].E_l, rows[i - 1].N, rows[i].N);
            rows[i].rate_g = rate_between(rows[i - 1].E_g, rows[i].E_g, rows[i - 1].N, rows[i].N);
        }
    }
    return rows;
}

std::vector<GridRatioRow> grid_ratio_study(double alpha,
                                           const std::vector<std::pair<double, double>>& pairs,
                                           const ExperimentOptions& opts) {
    std::vector<GridRatioRow> rows;
    rows.reserve(pairs.size());
    for (const auto& [tau, h] : pairs) {
        if (!(tau > 0.0) || !(h > 0.0)) throw DomainError("tau and h must be positive");
        const double nd = 1.0 / tau;
        const double md = 1.0 / h;
        const int N = int(std::lround(nd));
        const int M = int(std::lround(md));
        if (std::abs(N * tau - 1.0) > 1e-9)
            throw DomainError("tau = " + std::to_string(tau) + " does not divide T = 1");
        if (std::abs(M * h - 1.0) > 1e-9)
            throw DomainError("h = " + std::to_string(h) + " does not divide L = 1");
        const History hist = run(example_problem(1, alpha, M, N), to_run_options(opts));
        const ErrorReport err = measure_errors(hist, alpha, 1.0);
        rows.push_back(GridRatioRow{alpha, tau, h, N, M, err.E_l});
    }
    return rows;
}

namespace {

std::vector<cplx> final_level(int example_id, double alpha, int N, int M,
                              const ExperimentOptions& opts) {
    const History hist = run(example_problem(example_id, alpha, M, N), to_run_options(opts));
    const cplx* last = hist.interior(N);
    return std::vector<cplx>(last, last + hist.block_size());
}

double block_diff_l2(const std::vector<cplx>& a, const std::vector<cplx>& b, double h) {
    double acc = 0.0;
    for (std::size_t t = 0; t < a.size(); ++t) acc += std::norm(a[t] - b[t]);
    return h * std::sqrt(acc);
}

} // namespace

TwoMeshReport two_mesh(int example_id, double alpha, int N, int M,
                       const ExperimentOptions& opts) {
    if (example_id != 2 && example_id != 3)
        throw DomainError("two-mesh estimation applies to example 2 or 3");
    if (N < 2 || N % 2 != 0) throw DomainError("N must be even and >= 2, got " + std::to_string(N));
    const std::vector<cplx> fine = final_level(example_id, alpha, N, M, opts);
    const std::vector<cplx> coarse = final_level(example_id, alpha, N / 2, M, opts);
    return TwoMeshReport{alpha, N, M, block_diff_l2(fine, coarse, 1.0 / M)};
}

std::vector<TwoMeshReport> two_mesh_table(int example_id, const std::vector<double>& alphas,
                                          const std::vector<int>& Ns, int M,
                                          const ExperimentOptions& opts) {
    if (example_id != 2 && example_id != 3)
        throw DomainError("two-mesh estimation applies to example 2 or 3");
    std::vector<TwoMeshReport> rows;
    rows.reserve(alphas.size() * Ns.size());
    for (double alpha : alphas) {
        std::map<int, std::vector<cplx>> finals;
        auto get = [&](int n) -> const std::vector<cplx>& {
            auto it = finals.find(n);
            if (it == finals.end())
                it = finals.emplace(n, final_level(example_id, alpha, n, M, opts)).first;
            return it->second;
        };
        const std::size_t first = rows.size();
        for (int N : Ns) {
            if (N < 2 || N % 2 != 0)
                throw DomainError("N must be even and >= 2, got " + std::to_string(N));
            rows.push_back(TwoMeshReport{alpha, N, M, block_diff_l2(get(N), get(N / 2), 1.0 / M)});
        }
        for (std::size_t i = first + 1; i < rows.size(); ++i)
            rows[i].rate = rate_between(rows[i - 1].e_L, rows[i].e_L, rows[i - 1].N, rows[i].N);
    }
    return rows;
}

double stability_experiment(double alpha, int N, int M, double epsilon,
                            const ExperimentOptions& opts) {
    if (epsilon < 0.0) throw DomainError("epsilon must be >= 0");
    if (epsilon == 0.0) return 0.0;
    const SchrodingerProblem base = example_problem(2, alpha, M, N);
    SchrodingerProblem perturbed = base;
    for (cplx& z : perturbed.u0.values()) z *= 1.0 + epsilon;
    const History hu = run(base, to_run_options(opts));
    const History hp = run(perturbed, to_run_options(opts));
    const std::size_t blk = hu.block_size();
    const double h = hu.h();
    auto level_diff = [&](int n) {
        double acc = 0.0;
        const cplx* a = hu.interior(n);
        const cplx* b = hp.interior(n);
        for (std::size_t t = 0; t < blk; ++t) acc += std::norm(a[t] - b[t]);
        return h * std::sqrt(acc);
    };
    const double d0 = level_diff(0);
    if (d0 == 0.0) return 0.0;
    double worst = 0.0;
    for (int n = 0; n <= N; ++n) worst = std::max(worst, level_diff(n));
    return worst / d0;
}

std::vector<StabilityRow> stability_table(const std::vector<double>& alphas,
                                          const std::vector<int>& Ns, int M,
                                          const std::vector<double>& epsilons,
                                          const ExperimentOptions& opts) {
    std::vector<StabilityRow> rows;
    rows.reserve(alphas.size() * Ns.size() * epsilons.size());
    for (double alpha : alphas)
        for (int N : Ns)
            for (double eps : epsilons)
                rows.push_back(
                    StabilityRow{alpha, N, M, eps, stability_experiment(alpha, N, M, eps, opts)});
    return rows;
}

std::vector<ProbeRow> probe_table(const std::vector<double>& alphas, const std::vector<int>& Ns) {
    std::vector<ProbeRow> rows;
    rows.reserve(alphas.size() * Ns.size());
    for (double alpha : alphas) {
        std::vector<double> errs;
        errs.reserve(Ns.size());
        for (int N : Ns) {
            const double err = truncation_probe(alpha, alpha, 1.0, N);
            errs.push_back(err);
            rows.push_back(ProbeRow{alpha, alpha, N, err});
        }
        if (Ns.size() >= 2) rows.back().slope = fit_slope(Ns, errs);
    }
    return rows;
}

} // namespace tfse
