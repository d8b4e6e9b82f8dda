// Discrete symplectic systems z_{k+1} = S_k z_k in block form
//   X_{k+1} = A_k X_k + B_k U_k,   U_{k+1} = C_k X_k + D_k U_k,
// with Wronskian bookkeeping for conjoined solutions and recovery of the
// coefficient blocks from a normalized pair of solutions.
#pragma once

#include <cstddef>
#include <vector>

#include "symtrig/matrix.hpp"
#include "symtrig/report.hpp"

namespace symtrig {

enum class SystemKind { Trig, Hyperbolic, GeneralSymplectic };

/// One step matrix S = [[A, B], [C, D]] of a symplectic system, stored by
/// blocks. `checked` enforces the symplecticity conditions
///   A^T D - C^T B = I = D^T A - B^T C,  A D^T - B C^T = I = D A^T - C B^T,
///   A^T C - C^T A = 0 = B^T D - D^T B,  A B^T - B A^T = 0 = C D^T - D C^T;
/// `unchecked` only validates shapes.
class BlockSymplectic {
public:
    static BlockSymplectic checked(Matrix a, Matrix b, Matrix c, Matrix d, double tol = 1e-12);
    static BlockSymplectic unchecked(Matrix a, Matrix b, Matrix c, Matrix d);

    const Matrix& a() const { return a_; }
    const Matrix& b() const { return b_; }
    const Matrix& c() const { return c_; }
    const Matrix& d() const { return d_; }
    std::size_t dim() const { return a_.rows(); }

    /// Closed-form symplectic inverse [[D^T, -B^T], [-C^T, A^T]].
    BlockSymplectic inverse() const;

private:
    BlockSymplectic(Matrix a, Matrix b, Matrix c, Matrix d);
    Matrix a_, b_, c_, d_;
};

/// Max Frobenius residual over the eight symplecticity equalities.
double symplecticity_residual(const BlockSymplectic& s);

bool is_symplectic(const BlockSymplectic& s, double tol = 1e-12);

/// Matrix solution (X_k, U_k), k = 0..N+1, of a system with N+1 step
/// matrices.
struct Trajectory {
    std::vector<Matrix> x;
    std::vector<Matrix> u;

    std::size_t dim() const { return x.empty() ? 0 : x.front().rows(); }
    std::size_t length() const { return x.size(); }
};

/// Steps (x0, u0) forward through all coefficients. The returned trajectory
/// has steps.size() + 1 entries.
Trajectory propagate(const std::vector<BlockSymplectic>& steps, const Matrix& x0, const Matrix& u0);

/// Solution with X_{k0} = 0, U_{k0} = I: forward by the step matrices,
/// backward from k0 by their closed-form inverses.
Trajectory principal_solution(const std::vector<BlockSymplectic>& steps, std::size_t k0);

/// W(Z, Z~)(k) = X_k^T U~_k - U_k^T X~_k; constant in k for solutions of the
/// same system.
Matrix wronskian(const Trajectory& z1, const Trajectory& z2, std::size_t k);

/// Residuals of the normalized-pair identities
///   X^T U~ - U^T X~ = I = X U~^T - X~ U^T     (reported as eq4)
///   X X~^T - X~ X^T = 0,  U U~^T - U~ U^T = 0  (reported as eq5)
/// at every index. The pair order is canonicalized from the sign of
/// tr W(z1, z2)(0), so a normalized pair passes in either argument order.
ResidualReport check_normalized_conjoined(const Trajectory& z1, const Trajectory& z2, double tol);

/// Rebuilds S_k from a normalized pair (Z, Z~):
///   A_k = X_{k+1} U~_k^T - X~_{k+1} U_k^T,  B_k = X~_{k+1} X_k^T - X_{k+1} X~_k^T,
///   C_k = U_{k+1} U~_k^T - U~_{k+1} U_k^T,  D_k = U~_{k+1} X_k^T - U_{k+1} X~_k^T.
/// The result is deliberately unchecked; disagreement with the generating
/// blocks is data for the caller.
BlockSymplectic recover_blocks(const Trajectory& z1, const Trajectory& z2, std::size_t k);

}  // namespace symtrig
