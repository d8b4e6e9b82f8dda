// Dense real matrices with the deterministic numerical kernels used by the
// symplectic system code: multiplication, LU inversion with a relative pivot
// threshold, Frobenius norms, and symmetric eigensolves (cyclic Jacobi) that
// back the spectral matrix functions cos/sin/cosh/sinh/exp.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symtrig {

/// Shape mismatch between operands (or bad construction sizes).
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside an operation's domain (non-finite entries, non-symmetric
/// matrix passed to a symmetric solver, invalid generator parameters, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by invert() when a pivot falls below the relative threshold.
class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an iterative solver exhausts its sweep budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense row-major matrix of doubles. Entries are validated to be finite
/// whenever a constructor receives data; arithmetic uses plain loops with a
/// fixed left-to-right summation order so results are bit-reproducible.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols);
    static Matrix diagonal(const std::vector<double>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& entries() const { return data_; }

    Matrix transposed() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(double s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator-(const Matrix& m);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(double s, Matrix m);
Matrix operator*(Matrix m, double s);

/// a * b with explicit i,j,k loops; the k-sum runs in ascending order.
Matrix multiply(const Matrix& a, const Matrix& b);

/// sqrt of the sum of squared entries, accumulated in row-major order.
double frobenius_norm(const Matrix& a);

double max_abs_entry(const Matrix& a);

/// Frobenius norm of (lhs - rhs).
double residual_norm(const Matrix& lhs, const Matrix& rhs);

/// residual_norm scaled by max(1, ||lhs||_F); used where values grow.
double relative_residual(const Matrix& lhs, const Matrix& rhs);

inline constexpr double kDefaultPivotTol = 1e-12;

/// True when LU elimination with partial pivoting keeps every pivot at or
/// above pivot_tol * max_abs_entry(a). This is the library's operational
/// definition of invertibility.
bool passes_pivot_test(const Matrix& a, double pivot_tol = kDefaultPivotTol);

/// Inverse via LU with partial pivoting. Throws SingularMatrixError when the
/// pivot test fails.
Matrix invert(const Matrix& a, double pivot_tol = kDefaultPivotTol);

/// invert() that reports singularity as an absent value instead of throwing.
std::optional<Matrix> try_invert(const Matrix& a, double pivot_tol = kDefaultPivotTol);

struct SymEigen {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // column i pairs with eigenvalues[i]
};

inline constexpr double kDefaultSweepTol = 1e-13;
inline constexpr int kJacobiSweepBudget = 100;

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Sweeps stop once every off-diagonal magnitude drops below
/// sweep_tol * ||a||_F; exceeding the sweep budget raises ConvergenceError.
SymEigen sym_eigen(const Matrix& a, double sweep_tol = kDefaultSweepTol);

enum class SymFn { Cos, Sin, Cosh, Sinh, Exp };

/// f(A) = V diag(f(lambda)) V^T for symmetric A; the result is symmetrized
/// exactly before returning.
Matrix sym_matrix_fn(const Matrix& a, SymFn fn, double sweep_tol = kDefaultSweepTol);

}  // namespace symtrig
