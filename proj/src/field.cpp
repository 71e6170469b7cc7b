#include "tfse/field.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace tfse {

ComplexField::ComplexField(int m, double h)
    : m_(m), h_(h), v_(std::size_t(m + 1) * (m + 1), cplx{0.0, 0.0}) {
    if (m < 2) throw DomainError("field needs M >= 2");
}

ComplexField::ComplexField(const MeshSpec& mesh) : ComplexField(mesh.M, mesh.h) {}

std::vector<cplx> ComplexField::interior() const {
    std::vector<cplx> block(std::size_t(m_ - 1) * (m_ - 1));
    std::size_t i = 0;
    for (int j = 1; j < m_; ++j)
        for (int k = 1; k < m_; ++k) block[i++] = at(j, k);
    return block;
}

ComplexField field_from_interior(int m, double h, const cplx* interior) {
    ComplexField u(m, h);
    std::size_t i = 0;
    for (int j = 1; j < m; ++j)
        for (int k = 1; k < m; ++k) u.at(j, k) = interior[i++];
    return u;
}

ComplexField sample(const std::function<cplx(double, double)>& f, const MeshSpec& mesh) {
    ComplexField u(mesh);
    const int M = mesh.M;
    for (int j = 0; j <= M; ++j) {
        for (int k = 0; k <= M; ++k) {
            const cplx val = f(j * mesh.h, k * mesh.h);
            const bool boundary = (j == 0 || j == M || k == 0 || k == M);
            if (boundary) {
                if (std::abs(val) > 1e-14)
                    throw NonVanishingBoundary(
                        "|f| = " + std::to_string(std::abs(val)) + " at boundary node (" +
                        std::to_string(j) + "," + std::to_string(k) + ")");
                // snapped to the exact zero the constructor provides
            } else {
                u.at(j, k) = val;
            }
        }
    }
    return u;
}

ComplexField laplacian_5pt(const ComplexField& u, double h) {
    const int M = u.m();
    ComplexField out(M, u.h());
    const double inv_h2 = 1.0 / (h * h);
    for (int j = 1; j < M; ++j)
        for (int k = 1; k < M; ++k)
            out.at(j, k) = (u.at(j - 1, k) + u.at(j + 1, k) + u.at(j, k - 1) +
                            u.at(j, k + 1) - 4.0 * u.at(j, k)) *
                           inv_h2;
    return out;
}

namespace {

void require_same_mesh(const ComplexField& u, const ComplexField& v) {
    if (u.m() != v.m() || u.h() != v.h())
        throw MeshMismatch("fields live on different meshes (M " + std::to_string(u.m()) +
                           " vs " + std::to_string(v.m()) + ")");
}

} // namespace

cplx inner_product(const ComplexField& u, const ComplexField& v) {
    require_same_mesh(u, v);
    const int M = u.m();
    cplx acc{0.0, 0.0};
    for (int j = 1; j < M; ++j)
        for (int k = 1; k < M; ++k) acc += u.at(j, k) * std::conj(v.at(j, k));
    return acc * (u.h() * u.h());
}

double l2_norm(const ComplexField& u) {
    const int M = u.m();
    double acc = 0.0;
    for (int j = 1; j < M; ++j)
        for (int k = 1; k < M; ++k) acc += std::norm(u.at(j, k));
    return u.h() * std::sqrt(acc);
}

double linf_norm(const ComplexField& u) {
    const int M = u.m();
    double best = 0.0;
    for (int j = 1; j < M; ++j)
        for (int k = 1; k < M; ++k) best = std::max(best, std::abs(u.at(j, k)));
    return best;
}

double seminorm_h2(const ComplexField& u, double h) { return l2_norm(laplacian_5pt(u, h)); }

} // namespace tfse
