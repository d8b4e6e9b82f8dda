#include <cmath>
#include <cstddef>
#include <vector>

#include "doctest.h"
#include "symtrig/generators.hpp"
#include "symtrig/symplectic.hpp"
#include "symtrig/trig.hpp"

using namespace symtrig;

namespace {

// One rotation-by-quarter-turn step: [[0, I], [-I, 0]].
BlockSymplectic j_step(std::size_t n) {
    Matrix id = Matrix::identity(n);
    return BlockSymplectic::checked(Matrix::zero(n, n), id, -id, Matrix::zero(n, n));
}

std::vector<BlockSymplectic> constant_angle_blocks(const std::vector<double>& angles) {
    TrigCoefficients c;
    for (double phi : angles) {
        c.p.push_back(Matrix(1, 1, {std::cos(phi)}));
        c.q.push_back(Matrix(1, 1, {std::sin(phi)}));
    }
    return assemble_trig(c);
}

}  // namespace

TEST_CASE("checked factory and symplecticity residual") {
    CHECK(symplecticity_residual(j_step(2)) == 0.0);

    // Diagonal stretch: a = 2I, d = I/2 is symplectic for n = 1.
    BlockSymplectic stretch = BlockSymplectic::checked(
        Matrix(1, 1, {2.0}), Matrix::zero(1, 1), Matrix::zero(1, 1), Matrix(1, 1, {0.5}));
    CHECK(is_symplectic(stretch));

    CHECK_THROWS_AS(BlockSymplectic::checked(Matrix(1, 1, {2.0}), Matrix::zero(1, 1),
                                             Matrix::zero(1, 1), Matrix(1, 1, {1.0})),
                    DomainError);
    // unchecked stores anything with consistent shapes.
    BlockSymplectic bad = BlockSymplectic::unchecked(
        Matrix(1, 1, {2.0}), Matrix::zero(1, 1), Matrix::zero(1, 1), Matrix(1, 1, {1.0}));
    CHECK_FALSE(is_symplectic(bad));

    CHECK_THROWS_AS(BlockSymplectic::unchecked(Matrix(2, 2), Matrix(1, 1), Matrix(2, 2),
                                               Matrix(2, 2)),
                    ShapeError);
}

TEST_CASE("inverse of a step") {
    TrigCoefficients c;
    c.p.push_back(Matrix(1, 1, {std::cos(0.7)}));
    c.q.push_back(Matrix(1, 1, {std::sin(0.7)}));
    BlockSymplectic s = assemble_trig(c).front();
    BlockSymplectic si = s.inverse();

    Matrix top_left = s.a() * si.a() + s.b() * si.c();
    Matrix top_right = s.a() * si.b() + s.b() * si.d();
    Matrix bot_left = s.c() * si.a() + s.d() * si.c();
    Matrix bot_right = s.c() * si.b() + s.d() * si.d();
    CHECK(residual_norm(top_left, Matrix::identity(1)) <= 1e-15);
    CHECK(max_abs_entry(top_right) <= 1e-15);
    CHECK(max_abs_entry(bot_left) <= 1e-15);
    CHECK(residual_norm(bot_right, Matrix::identity(1)) <= 1e-15);
}

TEST_CASE("propagation through quarter-turn steps has period four") {
    std::vector<BlockSymplectic> steps(5, j_step(2));
    Matrix id = Matrix::identity(2);
    Trajectory z = propagate(steps, Matrix::zero(2, 2), id);
    REQUIRE(z.length() == 6);

    // X: 0, I, 0, -I, ...   U: I, 0, -I, 0, ...
    for (std::size_t k = 0; k < z.length(); ++k) {
        switch (k % 4) {
            case 0:
                CHECK(max_abs_entry(z.x[k]) == 0.0);
                CHECK(max_abs_entry(z.u[k] - id) == 0.0);
                break;
            case 1:
                CHECK(max_abs_entry(z.x[k] - id) == 0.0);
                CHECK(max_abs_entry(z.u[k]) == 0.0);
                break;
            case 2:
                CHECK(max_abs_entry(z.x[k]) == 0.0);
                CHECK(max_abs_entry(z.u[k] + id) == 0.0);
                break;
            default:
                CHECK(max_abs_entry(z.x[k] + id) == 0.0);
                CHECK(max_abs_entry(z.u[k]) == 0.0);
                break;
        }
    }

    CHECK_THROWS_AS(propagate(steps, Matrix::zero(3, 3), Matrix::identity(3)), ShapeError);
}

TEST_CASE("propagation reproduces the one-step recurrence bitwise") {
    TrigCoefficients c = gen_trig(3, 16, 1.0, 42);
    std::vector<BlockSymplectic> steps = assemble_trig(c);
    Matrix x0 = random_orthogonal(3, 7);
    Matrix u0 = random_symmetric(3, 1.0, 8);
    Trajectory z = propagate(steps, x0, u0);
    REQUIRE(z.length() == steps.size() + 1);
    CHECK(max_abs_entry(z.x[0] - x0) == 0.0);
    for (std::size_t k = 0; k < steps.size(); ++k) {
        Matrix xn = steps[k].a() * z.x[k] + steps[k].b() * z.u[k];
        Matrix un = steps[k].c() * z.x[k] + steps[k].d() * z.u[k];
        CHECK(max_abs_entry(z.x[k + 1] - xn) == 0.0);
        CHECK(max_abs_entry(z.u[k + 1] - un) == 0.0);
    }
}

TEST_CASE("principal solution at the left endpoint") {
    std::vector<BlockSymplectic> steps = constant_angle_blocks({0.3, -0.4, 0.25});
    Trajectory z = principal_solution(steps, 0);
    CHECK(max_abs_entry(z.x[0]) == 0.0);
    CHECK(max_abs_entry(z.u[0] - Matrix::identity(1)) == 0.0);

    // Identity steps leave the principal solution at (0, I) forever.
    std::vector<BlockSymplectic> trivial(
        4, BlockSymplectic::checked(Matrix::identity(2), Matrix::zero(2, 2), Matrix::zero(2, 2),
                                    Matrix::identity(2)));
    Trajectory zt = principal_solution(trivial, 3);
    for (std::size_t k = 0; k < zt.length(); ++k) {
        CHECK(max_abs_entry(zt.x[k]) == 0.0);
        CHECK(max_abs_entry(zt.u[k] - Matrix::identity(2)) == 0.0);
    }

    CHECK_THROWS_AS(principal_solution(steps, 5), DomainError);
}

TEST_CASE("principal solution at an interior point matches the scalar oracle") {
    const std::vector<double> angles = {0.3, -0.4, 0.25, 0.7, -0.2, 0.55};
    std::vector<BlockSymplectic> steps = constant_angle_blocks(angles);
    const std::size_t k0 = 2;
    Trajectory z = principal_solution(steps, k0);
    REQUIRE(z.length() == angles.size() + 1);

    // sigma_k = sum of angles below k; X_k = sin(sigma_k - sigma_k0).
    std::vector<double> sigma(angles.size() + 1, 0.0);
    for (std::size_t k = 0; k < angles.size(); ++k) {
        sigma[k + 1] = sigma[k] + angles[k];
    }
    for (std::size_t k = 0; k < z.length(); ++k) {
        CHECK(std::abs(z.x[k](0, 0) - std::sin(sigma[k] - sigma[k0])) <= 1e-12);
        CHECK(std::abs(z.u[k](0, 0) - std::cos(sigma[k] - sigma[k0])) <= 1e-12);
    }

    // The forward half is bitwise identical to propagating the truncated system.
    std::vector<BlockSymplectic> tail(steps.begin() + k0, steps.end());
    Trajectory fwd = propagate(tail, Matrix::zero(1, 1), Matrix::identity(1));
    for (std::size_t k = k0; k < z.length(); ++k) {
        CHECK(max_abs_entry(z.x[k] - fwd.x[k - k0]) == 0.0);
        CHECK(max_abs_entry(z.u[k] - fwd.u[k - k0]) == 0.0);
    }

    // The backward half still satisfies the forward recurrence.
    for (std::size_t k = 0; k < k0; ++k) {
        Matrix xn = steps[k].a() * z.x[k] + steps[k].b() * z.u[k];
        Matrix un = steps[k].c() * z.x[k] + steps[k].d() * z.u[k];
        CHECK(max_abs_entry(z.x[k + 1] - xn) <= 1e-14);
        CHECK(max_abs_entry(z.u[k + 1] - un) <= 1e-14);
    }
}

TEST_CASE("wronskian is the constant of the pair") {
    TrigCoefficients c = gen_trig(2, 20, 1.0, 5);
    std::vector<BlockSymplectic> steps = assemble_trig(c);
    Trajectory z1 = propagate(steps, Matrix::identity(2), Matrix::zero(2, 2));
    Trajectory z2 = principal_solution(steps, 0);

    // W(z1, z2)(0) = I exactly; W(z2, z1)(0) = -I exactly.
    CHECK(max_abs_entry(wronskian(z1, z2, 0) - Matrix::identity(2)) == 0.0);
    CHECK(max_abs_entry(wronskian(z2, z1, 0) + Matrix::identity(2)) == 0.0);

    for (std::size_t k = 0; k < z1.length(); ++k) {
        CHECK(residual_norm(wronskian(z1, z2, k), wronskian(z1, z2, 0)) <= 1e-12);
        CHECK(frobenius_norm(wronskian(z1, z1, k)) <= 1e-13);
    }

    CHECK_THROWS_AS(wronskian(z1, z2, z1.length()), DomainError);
}

TEST_CASE("normalized conjoined pair check") {
    TrigCoefficients c = gen_trig(2, 12, 1.0, 17);
    std::vector<BlockSymplectic> steps = assemble_trig(c);
    Trajectory z1 = propagate(steps, Matrix::identity(2), Matrix::zero(2, 2));
    Trajectory z2 = principal_solution(steps, 0);

    ResidualReport ok = check_normalized_conjoined(z1, z2, 1e-10);
    CHECK(ok.all_pass());
    // Orientation is canonicalized: the swapped order passes too.
    CHECK(check_normalized_conjoined(z2, z1, 1e-10).all_pass());

    ResidualReport degenerate = check_normalized_conjoined(z2, z2, 1e-10);
    CHECK_FALSE(degenerate.all_pass());
    REQUIRE(degenerate.find("eq4") != nullptr);
    CHECK(degenerate.find("eq4")->max_residual > 0.5);
}

TEST_CASE("block recovery from a normalized pair") {
    TrigCoefficients c = gen_trig(2, 6, 1.0, 23);
    std::vector<BlockSymplectic> steps = assemble_trig(c);
    Trajectory z1 = propagate(steps, Matrix::identity(2), Matrix::zero(2, 2));
    Trajectory z2 = principal_solution(steps, 0);

    for (std::size_t k = 0; k < steps.size(); ++k) {
        BlockSymplectic rec = recover_blocks(z1, z2, k);
        CHECK(residual_norm(rec.a(), steps[k].a()) <= 1e-12);
        CHECK(residual_norm(rec.b(), steps[k].b()) <= 1e-12);
        CHECK(residual_norm(rec.c(), steps[k].c()) <= 1e-12);
        CHECK(residual_norm(rec.d(), steps[k].d()) <= 1e-12);
    }

    CHECK_THROWS_AS(recover_blocks(z1, z2, steps.size()), DomainError);
}
