#include "symtrig/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace symtrig {

namespace {

void require_finite(const std::vector<double>& entries) {
    for (double v : entries) {
        if (!std::isfinite(v)) {
            throw DomainError("matrix entry is not finite");
        }
    }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw ShapeError("entry count " + std::to_string(data_.size()) + " does not fill " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    require_finite(data_);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix Matrix::diagonal(const std::vector<double>& diag) {
    require_finite(diag);
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "add");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += rhs.data_[i];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "subtract");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= rhs.data_[i];
    }
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& v : data_) {
        v *= s;
    }
    return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) {
    lhs += rhs;
    return lhs;
}

Matrix operator-(Matrix lhs, const Matrix& rhs) {
    lhs -= rhs;
    return lhs;
}

Matrix operator-(const Matrix& m) {
    Matrix r = m;
    r *= -1.0;
    return r;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) { return multiply(lhs, rhs); }

Matrix operator*(double s, Matrix m) {
    m *= s;
    return m;
}

Matrix operator*(Matrix m, double s) {
    m *= s;
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("multiply: inner dimensions " + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()));
    }
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                sum += a(i, k) * b(k, j);
            }
            c(i, j) = sum;
        }
    }
    return c;
}

double frobenius_norm(const Matrix& a) {
    double sum = 0.0;
    for (double v : a.entries()) {
        sum += v * v;
    }
    return std::sqrt(sum);
}

double max_abs_entry(const Matrix& a) {
    double m = 0.0;
    for (double v : a.entries()) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double residual_norm(const Matrix& lhs, const Matrix& rhs) {
    require_same_shape(lhs, rhs, "residual");
    return frobenius_norm(lhs - rhs);
}

double relative_residual(const Matrix& lhs, const Matrix& rhs) {
    return residual_norm(lhs, rhs) / std::max(1.0, frobenius_norm(lhs));
}

namespace {

// LU factorization with partial pivoting, applied in place to a row-major
// copy. Singularity is judged against threshold = pivot_tol * max|a_ij| of
// the input (a zero pivot is singular regardless, so the zero matrix is
// rejected even though its threshold is 0).
struct LuFactors {
    std::size_t n = 0;
    std::vector<double> lu;
    std::vector<std::size_t> perm;
    bool singular = false;
};

LuFactors lu_factor(const Matrix& a, double pivot_tol) {
    if (!a.square() || a.rows() == 0) {
        throw ShapeError("invert: matrix must be square and non-empty");
    }
    LuFactors f;
    f.n = a.rows();
    f.lu = a.entries();
    f.perm.resize(f.n);
    for (std::size_t i = 0; i < f.n; ++i) {
        f.perm[i] = i;
    }
    const double threshold = pivot_tol * max_abs_entry(a);
    const std::size_t n = f.n;
    auto at = [&f, n](std::size_t i, std::size_t j) -> double& { return f.lu[i * n + j]; };

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        double best = std::abs(at(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            double v = std::abs(at(r, col));
            if (v > best) {
                best = v;
                pivot_row = r;
            }
        }
        if (best < threshold || best == 0.0) {
            f.singular = true;
            return f;
        }
        if (pivot_row != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(at(col, j), at(pivot_row, j));
            }
            std::swap(f.perm[col], f.perm[pivot_row]);
        }
        const double pivot = at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double m = at(r, col) / pivot;
            at(r, col) = m;
            for (std::size_t j = col + 1; j < n; ++j) {
                at(r, j) -= m * at(col, j);
            }
        }
    }
    return f;
}

Matrix lu_inverse(const LuFactors& f) {
    const std::size_t n = f.n;
    Matrix inv(n, n);
    std::vector<double> col(n);
    auto at = [&f, n](std::size_t i, std::size_t j) { return f.lu[i * n + j]; };
    for (std::size_t e = 0; e < n; ++e) {
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = (f.perm[i] == e) ? 1.0 : 0.0;
        }
        for (std::size_t i = 1; i < n; ++i) {  // forward: L y = P e
            double sum = col[i];
            for (std::size_t j = 0; j < i; ++j) {
                sum -= at(i, j) * col[j];
            }
            col[i] = sum;
        }
        for (std::size_t ii = n; ii-- > 0;) {  // backward: U x = y
            double sum = col[ii];
            for (std::size_t j = ii + 1; j < n; ++j) {
                sum -= at(ii, j) * col[j];
            }
            col[ii] = sum / at(ii, ii);
        }
        for (std::size_t i = 0; i < n; ++i) {
            inv(i, e) = col[i];
        }
    }
    return inv;
}

}  // namespace

bool passes_pivot_test(const Matrix& a, double pivot_tol) {
    return !lu_factor(a, pivot_tol).singular;
}

Matrix invert(const Matrix& a, double pivot_tol) {
    LuFactors f = lu_factor(a, pivot_tol);
    if (f.singular) {
        throw SingularMatrixError("invert: pivot below " + std::to_string(pivot_tol) +
                                  " * max|a| for " + std::to_string(a.rows()) + "x" +
                                  std::to_string(a.cols()) + " matrix");
    }
    return lu_inverse(f);
}

std::optional<Matrix> try_invert(const Matrix& a, double pivot_tol) {
    LuFactors f = lu_factor(a, pivot_tol);
    if (f.singular) {
        return std::nullopt;
    }
    return lu_inverse(f);
}

SymEigen sym_eigen(const Matrix& a, double sweep_tol) {
    if (!a.square() || a.rows() == 0) {
        throw ShapeError("sym_eigen: matrix must be square and non-empty");
    }
    const std::size_t n = a.rows();
    const double scale = frobenius_norm(a);
    double asym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            asym = std::max(asym, std::abs(a(i, j) - a(j, i)));
        }
    }
    if (asym > sweep_tol * std::max(1.0, scale)) {
        throw DomainError("sym_eigen: matrix is not symmetric");
    }

    Matrix w = a;
    Matrix v = Matrix::identity(n);
    const double stop = sweep_tol * scale;

    auto off_diag_max = [&]() {
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                m = std::max(m, std::abs(w(i, j)));
            }
        }
        return m;
    };

    int sweep = 0;
    while (n > 1 && off_diag_max() > stop) {
        if (++sweep > kJacobiSweepBudget) {
            throw ConvergenceError("sym_eigen: sweep budget exhausted");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = w(p, q);
                if (std::abs(apq) <= stop) {
                    continue;
                }
                const double theta = (w(q, q) - w(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double wkp = w(k, p);
                    const double wkq = w(k, q);
                    w(k, p) = c * wkp - s * wkq;
                    w(k, q) = s * wkp + c * wkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double wpk = w(p, k);
                    const double wqk = w(q, k);
                    w(p, k) = c * wpk - s * wqk;
                    w(q, k) = s * wpk + c * wqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&w](std::size_t i, std::size_t j) { return w(i, i) < w(j, j); });

    SymEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        out.eigenvalues[idx] = w(order[idx], order[idx]);
        for (std::size_t r = 0; r < n; ++r) {
            out.eigenvectors(r, idx) = v(r, order[idx]);
        }
    }
    return out;
}

Matrix sym_matrix_fn(const Matrix& a, SymFn fn, double sweep_tol) {
    SymEigen eig = sym_eigen(a, sweep_tol);
    const std::size_t n = a.rows();
    std::vector<double> mapped(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lambda = eig.eigenvalues[i];
        switch (fn) {
            case SymFn::Cos: mapped[i] = std::cos(lambda); break;
            case SymFn::Sin: mapped[i] = std::sin(lambda); break;
            case SymFn::Cosh: mapped[i] = std::cosh(lambda); break;
            case SymFn::Sinh: mapped[i] = std::sinh(lambda); break;
            case SymFn::Exp: mapped[i] = std::exp(lambda); break;
        }
    }
    const Matrix& v = eig.eigenvectors;
    Matrix scaled = v;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            scaled(i, j) *= mapped[j];
        }
    }
    Matrix r = scaled * v.transposed();
    Matrix rt = r.transposed();
    r += rt;
    r *= 0.5;
    return r;
}

}  // namespace symtrig
