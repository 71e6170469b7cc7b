#include "tfse/mesh.hpp"

#include <string>

namespace tfse {

MeshSpec make_mesh(double alpha, double L, double T, int M, int N) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw DomainError("alpha must lie in (0,1), got " + std::to_string(alpha));
    if (!(L > 0.0)) throw DomainError("L must be positive");
    if (!(T > 0.0)) throw DomainError("T must be positive");
    if (M < 2) throw DomainError("M must be >= 2, got " + std::to_string(M));
    if (N < 1) throw DomainError("N must be >= 1, got " + std::to_string(N));
    return MeshSpec{alpha, L, T, M, N, L / M, T / N};
}

int ceil_sqrt(int n) {
    if (n <= 0) throw DomainError("ceil_sqrt needs a positive argument");
    int m = 1;
    while (m * m < n) ++m;
    return m;
}

} // namespace tfse
