#include <doctest.h>

#include <cmath>
#include <random>

#include "tfse/linsolve.hpp"

using namespace tfse;

namespace {

const double pi = std::acos(-1.0);

ComplexField random_rhs(const MeshSpec& mesh, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto unit = [&] { return double(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
    ComplexField b(mesh);
    for (int j = 1; j < mesh.M; ++j)
        for (int k = 1; k < mesh.M; ++k) b.at(j, k) = {unit(), unit()};
    return b;
}

ComplexField sine_mode(const MeshSpec& mesh, int p, int q) {
    return sample(
        [&](double x, double y) {
            return cplx(std::sin(p * pi * x) * std::sin(q * pi * y), 0.0);
        },
        mesh);
}

double field_dist(const ComplexField& u, const ComplexField& v) {
    double worst = 0.0;
    for (int j = 0; j <= u.m(); ++j)
        for (int k = 0; k <= u.m(); ++k) worst = std::max(worst, std::abs(u.at(j, k) - v.at(j, k)));
    return worst;
}

} // namespace

TEST_CASE("eigenvalue table matches the stencil on every mode") {
    for (int M : {2, 3, 4, 8, 17, 32}) {
        const MeshSpec mesh = make_mesh(0.5, 1.0, 1.0, M, 1);
        for (int p = 1; p < M; ++p)
            for (int q = 1; q < M; ++q) {
                // nodal values sin(jp pi/M) sin(kq pi/M) with an exactly zero boundary
                ComplexField s(mesh);
                for (int j = 1; j < M; ++j)
                    for (int k = 1; k < M; ++k)
                        s.at(j, k) = std::sin(j * p * pi / M) * std::sin(k * q * pi / M);
                const ComplexField lap = laplacian_5pt(s, mesh.h);
                const double lambda = laplacian_eigenvalue(p, q, M, mesh.h);
                for (int j = 1; j < M; ++j)
                    for (int k = 1; k < M; ++k)
                        CHECK(std::abs(lap.at(j, k) - lambda * s.at(j, k)) <=
                              1e-12 * std::abs(lambda));
            }
    }
}

TEST_CASE("sine transform pair: coefficient extraction and left inverse") {
    const int M = 4;
    const MeshSpec mesh = make_mesh(0.5, 1.0, 1.0, M, 1);
    SUBCASE("sampled mode concentrates on one coefficient") {
        const std::vector<cplx> hat = dst1_forward(sine_mode(mesh, 2, 1).interior(), M);
        for (int p = 1; p < M; ++p)
            for (int q = 1; q < M; ++q) {
                const cplx c = hat[(p - 1) * (M - 1) + (q - 1)];
                if (p == 2 && q == 1)
                    CHECK(std::abs(c - cplx(4.0, 0.0)) < 1e-12);  // (M/2)^2
                else
                    CHECK(std::abs(c) < 1e-12);
            }
    }
    SUBCASE("inverse after forward is the identity") {
        for (std::uint64_t seed : {7u, 8u, 9u}) {
            const std::vector<cplx> x = random_rhs(mesh, seed).interior();
            const std::vector<cplx> back = dst1_inverse(dst1_forward(x, M), M);
            for (std::size_t t = 0; t < x.size(); ++t) CHECK(std::abs(back[t] - x[t]) < 1e-13);
        }
    }
}

TEST_CASE("solve then apply recovers the right side") {
    const MeshSpec mesh = make_mesh(0.5, 1.0, 1.0, 9, 1);
    const ShiftedLaplacian op{cplx{0.0, 37.5}, mesh};
    const ComplexField b = random_rhs(mesh, 21);
    for (const ComplexField& u : {solve_dst(op, b), solve_dense_reference(op, b)}) {
        const ComplexField back = apply_shifted(op, u);
        CHECK(field_dist(back, b) < 1e-11);
    }
}

TEST_CASE("solving with an eigenmode right side divides by the eigenvalue") {
    const MeshSpec mesh = make_mesh(0.5, 1.0, 1.0, 8, 1);
    const cplx sigma{2.5, 4.0};
    const ShiftedLaplacian op{sigma, mesh};
    const ComplexField b = sine_mode(mesh, 3, 2);
    const cplx factor = 1.0 / (sigma + laplacian_eigenvalue(3, 2, 8, mesh.h));
    const ComplexField u = solve_dst(op, b);
    for (int j = 1; j < 8; ++j)
        for (int k = 1; k < 8; ++k)
            CHECK(std::abs(u.at(j, k) - factor * b.at(j, k)) < 1e-13);
}

TEST_CASE("zero right side gives the zero solution") {
    const MeshSpec mesh = make_mesh(0.5, 1.0, 1.0, 6, 1);
    const ShiftedLaplacian op{cplx{0.0, 1.0}, mesh};
    const ComplexField u = solve_dst(op, ComplexField(mesh));
    CHECK(l2_norm(u) == 0.0);
}

TEST_CASE("one-interior-node mesh solves in closed form") {
    // M = 2: the interior operator is the scalar sigma - 4/h^2
    const MeshSpec mesh = make_mesh(0.5, 1.0, 1.0, 2, 1);
    const cplx sigma{0.0, 3.0};
    ComplexField b(mesh);
    b.at(1, 1) = {1.0, 2.0};
    const cplx expected = b.at(1, 1) / (sigma - 4.0 / (mesh.h * mesh.h));
    CHECK(std::abs(solve_dst({sigma, mesh}, b).at(1, 1) - expected) < 1e-15);
    CHECK(std::abs(solve_dense_reference({sigma, mesh}, b).at(1, 1) - expected) < 1e-15);
}

TEST_CASE("fast and dense backends agree") {
    const MeshSpec mesh = make_mesh(0.5, 1.0, 1.0, 12, 1);
    const ShiftedLaplacian op{cplx{0.0, 10.0}, mesh};
    const DstSolver fast(op);
    const DenseSolver dense(op);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ComplexField b = random_rhs(mesh, 500 + seed);
        CHECK(field_dist(fast.solve(b), dense.solve(b)) < 1e-11);
    }
}

TEST_CASE("dense backend rejects large meshes") {
    const MeshSpec mesh = make_mesh(0.5, 1.0, 1.0, 25, 1);
    CHECK_THROWS_AS(DenseSolver({cplx{0.0, 1.0}, mesh}), TooLarge);
}

TEST_CASE("a shift cancelling an eigenvalue is reported as singular") {
    const MeshSpec mesh = make_mesh(0.5, 1.0, 1.0, 4, 1);
    const cplx sigma{-laplacian_eigenvalue(1, 1, 4, mesh.h), 0.0};
    CHECK_THROWS_AS(DstSolver({sigma, mesh}), SingularShift);
    CHECK_THROWS_AS(DenseSolver({sigma, mesh}), NearSingular);
}
