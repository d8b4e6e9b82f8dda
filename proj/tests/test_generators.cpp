#include <cmath>
#include <cstddef>
#include <cstdint>

#include "doctest.h"
#include "symtrig/generators.hpp"
#include "symtrig/hyperbolic.hpp"
#include "symtrig/trig.hpp"

using namespace symtrig;

TEST_CASE("rng reproduces the splitmix64 reference stream") {
    Rng r0(0);
    CHECK(r0.next_u64() == 0xE220A8397B1DCDAFULL);
    CHECK(r0.next_u64() == 0x6E789E6AA1B965F4ULL);
    CHECK(r0.next_u64() == 0x06C45D188009454FULL);

    Rng r42(42);
    CHECK(r42.next_u64() == 0xBDD732262FEB6E95ULL);

    // uniform() is the top 53 bits scaled into [0, 1).
    Rng u0(0);
    CHECK(u0.uniform() == doctest::Approx(0.8833108082136426).epsilon(1e-15));
    for (int i = 0; i < 1000; ++i) {
        double x = u0.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("gaussian draws have sane moments and are deterministic") {
    Rng a(123);
    Rng b(123);
    double mean = 0.0;
    double second = 0.0;
    const int count = 20000;
    for (int i = 0; i < count; ++i) {
        double x = a.gaussian();
        CHECK(x == b.gaussian());
        mean += x;
        second += x * x;
    }
    mean /= count;
    second /= count;
    CHECK(std::abs(mean) < 0.05);
    CHECK(second > 0.9);
    CHECK(second < 1.1);
}

TEST_CASE("random symmetric matrices") {
    Matrix s = random_symmetric(4, 0.7, 99);
    CHECK(max_abs_entry(s - s.transposed()) == 0.0);
    CHECK(frobenius_norm(s) <= 0.7 * (1.0 + 1e-12));

    // Same seed, same matrix.
    CHECK(max_abs_entry(s - random_symmetric(4, 0.7, 99)) == 0.0);

    CHECK_THROWS_AS(random_symmetric(0, 1.0, 1), DomainError);
    CHECK_THROWS_AS(random_symmetric(2, 0.0, 1), DomainError);
    CHECK_THROWS_AS(random_symmetric(2, -1.0, 1), DomainError);
}

TEST_CASE("random orthogonal matrices") {
    for (std::size_t n = 1; n <= 6; ++n) {
        Matrix g = random_orthogonal(n, 7 + n);
        CHECK(residual_norm(g.transposed() * g, Matrix::identity(n)) <= 1e-13);
        CHECK(residual_norm(g * g.transposed(), Matrix::identity(n)) <= 1e-13);
    }
    CHECK_THROWS_AS(random_orthogonal(0, 1), DomainError);
}

TEST_CASE("trig pair from an angle matrix and a rotation") {
    Matrix a(1, 1, {0.4});
    auto [p, q] = trig_pair(a, Matrix::identity(1));
    CHECK(p(0, 0) == doctest::Approx(std::cos(0.4)).epsilon(1e-15));
    CHECK(q(0, 0) == doctest::Approx(std::sin(0.4)).epsilon(1e-15));

    CHECK_THROWS_AS(trig_pair(a, Matrix(1, 1, {2.0})), DomainError);
    CHECK_THROWS_AS(trig_pair(Matrix(2, 2, {0.0, 1.0, 0.0, 0.0}), Matrix::identity(2)),
                    DomainError);
}

TEST_CASE("hyp pair wants a true sign diagonal") {
    Matrix a(2, 2, {0.3, 0.1, 0.1, 0.2});
    Matrix d = Matrix::diagonal({1.0, -1.0});
    auto [p, q] = hyp_pair(a, d);
    // P^T P - Q^T Q = I regardless of the sign choices.
    CHECK(residual_norm(p.transposed() * p - q.transposed() * q, Matrix::identity(2)) <= 1e-13);

    CHECK_THROWS_AS(hyp_pair(a, Matrix::diagonal({2.0, 1.0})), DomainError);
    Matrix not_diag = Matrix(2, 2, {1.0, 0.5, 0.0, 1.0});
    CHECK_THROWS_AS(hyp_pair(a, not_diag), DomainError);
}

TEST_CASE("generated systems validate") {
    for (Seed seed : {1ULL, 9ULL, 77ULL}) {
        TrigCoefficients t = gen_trig(3, 10, 1.0, seed);
        CHECK(t.dim() == 3);
        CHECK(t.horizon() == 10);
        CHECK(validate_trig(t).all_pass());

        HypCoefficients h = gen_hyp(3, 10, 0.4, std::nullopt, seed);
        CHECK(h.dim() == 3);
        CHECK(h.horizon() == 10);
        CHECK(validate_hyp(h).all_pass());
    }

    // A sign diagonal other than the identity still yields a valid system.
    HypCoefficients hs = gen_hyp(2, 6, 0.4, Matrix::diagonal({-1.0, 1.0}), 5);
    CHECK(validate_hyp(hs).all_pass());
    // And it changes the system.
    HypCoefficients hi = gen_hyp(2, 6, 0.4, std::nullopt, 5);
    CHECK(max_abs_entry(hs.p[0] - hi.p[0]) > 0.1);

    // Determinism end to end.
    TrigCoefficients t1 = gen_trig(2, 5, 1.0, 31);
    TrigCoefficients t2 = gen_trig(2, 5, 1.0, 31);
    for (std::size_t k = 0; k <= 5; ++k) {
        CHECK(max_abs_entry(t1.p[k] - t2.p[k]) == 0.0);
        CHECK(max_abs_entry(t1.q[k] - t2.q[k]) == 0.0);
    }

    CHECK_THROWS_AS(gen_trig(0, 5, 1.0, 1), DomainError);
    CHECK_THROWS_AS(gen_hyp(2, 5, -0.5, std::nullopt, 1), DomainError);
    CHECK_THROWS_AS(gen_hyp(2, 5, 0.5, Matrix::diagonal({1.0, 1.0, 1.0}), 1), ShapeError);
}
