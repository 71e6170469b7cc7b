#include "tfse/caputo.hpp"

#include <cmath>
#include <string>

namespace tfse {

L1Kernel l1_weights(double alpha, double tau, int N) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw DomainError("alpha must lie in (0,1), got " + std::to_string(alpha));
    if (!(tau > 0.0)) throw DomainError("tau must be positive");
    if (N < 1) throw DomainError("N must be >= 1");
    L1Kernel k;
    k.alpha = alpha;
    k.tau = tau;
    k.mu = std::pow(tau, alpha) * std::tgamma(2.0 - alpha);
    k.a.resize(N);
    const double e = 1.0 - alpha;
    for (int i = 0; i < N; ++i) k.a[i] = std::pow(i + 1.0, e) - std::pow(double(i), e);
    return k;
}

cplx caputo_l1_apply(const L1Kernel& kernel, const std::vector<cplx>& history) {
    const int n = int(history.size()) - 1;
    if (n < 1) throw HistoryTooShort("need at least levels u^0 and u^1");
    if (n > int(kernel.a.size()))
        throw HistoryTooShort("kernel holds " + std::to_string(kernel.a.size()) +
                              " weights, history needs " + std::to_string(n));
    cplx acc = kernel.a[0] * history[n];
    for (int i = n - 1; i >= 1; --i) acc -= (kernel.a[n - i - 1] - kernel.a[n - i]) * history[i];
    acc -= kernel.a[n - 1] * history[0];
    return acc / kernel.mu;
}

ComplexField caputo_l1_apply(const L1Kernel& kernel, const std::vector<ComplexField>& history) {
    const int n = int(history.size()) - 1;
    if (n < 1) throw HistoryTooShort("need at least levels u^0 and u^1");
    if (n > int(kernel.a.size())) throw HistoryTooShort("kernel too short for this history");
    const int M = history[0].m();
    ComplexField out(M, history[0].h());
    std::vector<cplx> seq(n + 1);
    for (int j = 1; j < M; ++j)
        for (int k = 1; k < M; ++k) {
            for (int i = 0; i <= n; ++i) seq[i] = history[i].at(j, k);
            out.at(j, k) = caputo_l1_apply(kernel, seq);
        }
    return out;
}

ThetaKernel theta_multipliers(const L1Kernel& kernel, int N) {
    if (N < 1) throw DomainError("N must be >= 1");
    if (int(kernel.a.size()) < N)
        throw DomainError("kernel holds too few weights for N = " + std::to_string(N));
    ThetaKernel th;
    th.alpha = kernel.alpha;
    th.tau = kernel.tau;
    th.theta.resize(N);
    th.theta[0] = kernel.mu / kernel.a[0];
    for (int n = 1; n < N; ++n) {
        double s = 0.0;
        for (int i = 1; i <= n; ++i)
            s += (kernel.a[i - 1] - kernel.a[i]) * th.theta[n - i];
        th.theta[n] = s / kernel.a[0];
    }
    return th;
}

cplx e_alpha_apply(const ThetaKernel& th, const std::vector<cplx>& history) {
    const int n = int(history.size());
    if (n > int(th.theta.size())) throw HistoryTooShort("theta kernel too short for this history");
    cplx acc{0.0, 0.0};
    for (int i = 1; i <= n; ++i) acc += th.theta[n - i] * history[i - 1];
    return acc;
}

double truncation_probe(double alpha, double gamma, double T, int N) {
    if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
    if (!(T > 0.0)) throw DomainError("T must be positive");
    const double tau = T / N;
    const L1Kernel k = l1_weights(alpha, tau, N);
    std::vector<cplx> hist(N + 1);
    for (int i = 0; i <= N; ++i) hist[i] = std::pow(i * tau, gamma);
    const cplx discrete = caputo_l1_apply(k, hist);
    const double exact =
        std::tgamma(gamma + 1.0) / std::tgamma(gamma + 1.0 - alpha) * std::pow(T, gamma - alpha);
    return std::abs(discrete - cplx(exact));
}

double fit_slope(const std::vector<int>& Ns, const std::vector<double>& errs) {
    if (Ns.size() != errs.size() || Ns.size() < 2)
        throw DomainError("slope fit needs matching lists with >= 2 entries");
    const int n = int(Ns.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double x = std::log2(double(Ns[i]));
        const double y = std::log2(errs[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return -(n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace tfse
