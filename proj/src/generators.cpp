#include "symtrig/generators.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace symtrig {

namespace {

void require_dim(std::size_t n, const char* who) {
    if (n == 0) {
        throw DomainError(std::string(who) + ": dimension must be positive");
    }
}

void require_amplitude(double amplitude, const char* who) {
    if (!std::isfinite(amplitude) || amplitude <= 0.0) {
        throw DomainError(std::string(who) + ": amplitude must be positive and finite");
    }
}

}  // namespace

std::uint64_t Rng::next_u64() {
    state_ += 0x9E3779B97f4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // u1 on (0, 1] so the log is finite; u2 on [0, 1).
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

Matrix random_symmetric(std::size_t n, double amplitude, Rng& rng) {
    require_dim(n, "random_symmetric");
    require_amplitude(amplitude, "random_symmetric");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = rng.gaussian();
        }
    }
    Matrix sym(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            sym(i, j) = 0.5 * (m(i, j) + m(j, i));
        }
    }
    const double norm = frobenius_norm(sym);
    if (norm > amplitude) {
        sym *= amplitude / norm;
    }
    return sym;
}

Matrix random_symmetric(std::size_t n, double amplitude, Seed seed) {
    Rng rng(seed);
    return random_symmetric(n, amplitude, rng);
}

Matrix random_orthogonal(std::size_t n, Rng& rng) {
    require_dim(n, "random_orthogonal");
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            r(i, j) = rng.gaussian();
        }
    }
    Matrix q = Matrix::identity(n);
    std::vector<double> v(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double norm2 = 0.0;
        for (std::size_t i = j; i < n; ++i) {
            norm2 += r(i, j) * r(i, j);
        }
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) {
            continue;
        }
        const double alpha = r(j, j) > 0.0 ? -norm : norm;
        double vnorm2 = 0.0;
        v[j] = r(j, j) - alpha;
        vnorm2 += v[j] * v[j];
        for (std::size_t i = j + 1; i < n; ++i) {
            v[i] = r(i, j);
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0) {
            continue;
        }
        const double scale = 2.0 / vnorm2;
        // r <- H r with H = I - 2 v v^T / |v|^2
        for (std::size_t c = j; c < n; ++c) {
            double dot = 0.0;
            for (std::size_t i = j; i < n; ++i) {
                dot += v[i] * r(i, c);
            }
            dot *= scale;
            for (std::size_t i = j; i < n; ++i) {
                r(i, c) -= dot * v[i];
            }
        }
        // q <- q H accumulates Q = H_0 H_1 ... H_{n-1}
        for (std::size_t row = 0; row < n; ++row) {
            double dot = 0.0;
            for (std::size_t i = j; i < n; ++i) {
                dot += q(row, i) * v[i];
            }
            dot *= scale;
            for (std::size_t i = j; i < n; ++i) {
                q(row, i) -= dot * v[i];
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (r(j, j) < 0.0) {
            for (std::size_t i = 0; i < n; ++i) {
                q(i, j) = -q(i, j);
            }
        }
    }
    return q;
}

Matrix random_orthogonal(std::size_t n, Seed seed) {
    Rng rng(seed);
    return random_orthogonal(n, rng);
}

std::pair<Matrix, Matrix> trig_pair(const Matrix& a, const Matrix& g) {
    if (!a.square() || !g.square() || a.rows() != g.rows()) {
        throw ShapeError("trig_pair: A and G must be square with one dimension");
    }
    const Matrix gram = g.transposed() * g;
    if (residual_norm(gram, Matrix::identity(g.rows())) > 1e-10) {
        throw DomainError("trig_pair: G is not orthogonal");
    }
    return {g * sym_matrix_fn(a, SymFn::Cos), g * sym_matrix_fn(a, SymFn::Sin)};
}

std::pair<Matrix, Matrix> hyp_pair(const Matrix& a, const Matrix& d) {
    if (!a.square() || !d.square() || a.rows() != d.rows()) {
        throw ShapeError("hyp_pair: A and D must be square with one dimension");
    }
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j) {
            const double e = d(i, j);
            if (i == j ? (e != 1.0 && e != -1.0) : e != 0.0) {
                throw DomainError("hyp_pair: D must be diagonal with +-1 entries");
            }
        }
    }
    return {d * sym_matrix_fn(a, SymFn::Cosh), d * sym_matrix_fn(a, SymFn::Sinh)};
}

TrigCoefficients gen_trig(std::size_t n, std::size_t horizon, double amplitude, Seed seed) {
    require_dim(n, "gen_trig");
    require_amplitude(amplitude, "gen_trig");
    Rng rng(seed);
    TrigCoefficients coeffs;
    coeffs.p.reserve(horizon + 1);
    coeffs.q.reserve(horizon + 1);
    for (std::size_t k = 0; k <= horizon; ++k) {
        const Matrix a = random_symmetric(n, amplitude, rng);
        const Matrix g = random_orthogonal(n, rng);
        auto [p, q] = trig_pair(a, g);
        coeffs.p.push_back(std::move(p));
        coeffs.q.push_back(std::move(q));
    }
    return coeffs;
}

HypCoefficients gen_hyp(std::size_t n, std::size_t horizon, double amplitude,
                        std::optional<Matrix> sign_diag, Seed seed) {
    require_dim(n, "gen_hyp");
    require_amplitude(amplitude, "gen_hyp");
    const Matrix d = sign_diag ? *std::move(sign_diag) : Matrix::identity(n);
    if (!d.square() || d.rows() != n) {
        throw ShapeError("gen_hyp: sign diagonal has the wrong shape");
    }
    Rng rng(seed);
    HypCoefficients coeffs;
    coeffs.p.reserve(horizon + 1);
    coeffs.q.reserve(horizon + 1);
    for (std::size_t k = 0; k <= horizon; ++k) {
        const Matrix a = random_symmetric(n, amplitude, rng);
        auto [p, q] = hyp_pair(a, d);
        coeffs.p.push_back(std::move(p));
        coeffs.q.push_back(std::move(q));
    }
    return coeffs;
}

}  // namespace symtrig
