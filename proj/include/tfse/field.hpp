#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "tfse/mesh.hpp"

namespace tfse {

using cplx = std::complex<double>;

/// Complex grid function on the full (M+1)^2 lattice, stored row-major:
/// value (j,k) lives at flat index j*(M+1)+k and corresponds to (x,y) = (j*h, k*h).
/// Fields in the homogeneous space carry exact zeros on the boundary
/// (j in {0,M} or k in {0,M}); all constructors start from the zero field.
class ComplexField {
public:
    ComplexField() = default;
    ComplexField(int m, double h);
    explicit ComplexField(const MeshSpec& mesh);

    int m() const { return m_; }
    double h() const { return h_; }

    cplx& at(int j, int k) { return v_[std::size_t(j) * (m_ + 1) + k]; }
    const cplx& at(int j, int k) const { return v_[std::size_t(j) * (m_ + 1) + k]; }

    std::vector<cplx>& values() { return v_; }
    const std::vector<cplx>& values() const { return v_; }

    /// Copy of the interior nodes as a contiguous (M-1)^2 block, row-major.
    std::vector<cplx> interior() const;

private:
    int m_ = 0;
    double h_ = 0.0;
    std::vector<cplx> v_;
};

/// Build a full field (zero boundary) from a contiguous interior block.
ComplexField field_from_interior(int m, double h, const cplx* interior);

/// Sample f at the mesh nodes onto a homogeneous-boundary field.
/// Boundary values with |f| < 1e-14 are snapped to exact zero; larger
/// boundary values throw NonVanishingBoundary.
ComplexField sample(const std::function<cplx(double, double)>& f, const MeshSpec& mesh);

/// Five-point discrete Laplacian; interior stencil
/// (u[j-1,k] + u[j+1,k] + u[j,k-1] + u[j,k+1] - 4 u[j,k]) / h^2, zero boundary.
ComplexField laplacian_5pt(const ComplexField& u, double h);

/// Discrete inner product h^2 * sum over interior nodes of u * conj(v).
cplx inner_product(const ComplexField& u, const ComplexField& v);

/// Discrete L2 norm h * sqrt(sum over interior of |u|^2).
double l2_norm(const ComplexField& u);

/// Max interior modulus.
double linf_norm(const ComplexField& u);

/// |u|_2 = l2_norm(laplacian_5pt(u, h)).
double seminorm_h2(const ComplexField& u, double h);

} // namespace tfse
