// Deterministic random coefficient generators. Everything is seeded
// explicitly and avoids the standard library distributions, so a given
// (seed, n, N, amplitude) always produces bit-identical output on every
// platform.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "symtrig/hyperbolic.hpp"
#include "symtrig/matrix.hpp"
#include "symtrig/trig.hpp"

namespace symtrig {

using Seed = std::uint64_t;

/// SplitMix64 with a Box-Muller gaussian on top. Small, fast, and more than
/// random enough for test-coefficient generation.
class Rng {
public:
    explicit Rng(Seed seed) : state_(seed) {}

    std::uint64_t next_u64();
    /// Uniform on [0, 1), 53-bit resolution.
    double uniform();
    /// Standard normal. Box-Muller; the second value of each pair is cached.
    double gaussian();

private:
    Seed state_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

/// Symmetric n x n matrix of gaussian entries, averaged with its transpose
/// and rescaled so the Frobenius norm is at most `amplitude`.
Matrix random_symmetric(std::size_t n, double amplitude, Rng& rng);
Matrix random_symmetric(std::size_t n, double amplitude, Seed seed);

/// Haar-ish orthogonal matrix: Householder QR of a gaussian matrix with the
/// column signs fixed so R has a positive diagonal.
Matrix random_orthogonal(std::size_t n, Rng& rng);
Matrix random_orthogonal(std::size_t n, Seed seed);

/// P = G cos(A), Q = G sin(A) for symmetric A and orthogonal G; the result
/// satisfies the trigonometric block identities exactly (up to roundoff).
std::pair<Matrix, Matrix> trig_pair(const Matrix& a, const Matrix& g);

/// P = D cosh(A), Q = D sinh(A) for symmetric A and a +-1 diagonal D.
std::pair<Matrix, Matrix> hyp_pair(const Matrix& a, const Matrix& d);

/// N+1 trigonometric step blocks, angles bounded by `amplitude`.
TrigCoefficients gen_trig(std::size_t n, std::size_t horizon, double amplitude, Seed seed);

/// N+1 hyperbolic step blocks. `sign_diag` is the +-1 diagonal applied to
/// every step (identity when absent).
HypCoefficients gen_hyp(std::size_t n, std::size_t horizon, double amplitude,
                        std::optional<Matrix> sign_diag, Seed seed);

}  // namespace symtrig
