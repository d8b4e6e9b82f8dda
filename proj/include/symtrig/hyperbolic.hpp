// Hyperbolic specialization: step matrices [[P, Q], [Q, P]] whose blocks
// satisfy P^T P - Q^T Q = I and P^T Q = Q^T P (P is then always invertible,
// with (P +- Q)^{-1} = P^T -+ Q^T). The principal solution defines Sinh and
// Cosh; values grow, so the identity suite reports residuals relative to
// max(1, ||lhs||_F).
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "symtrig/matrix.hpp"
#include "symtrig/report.hpp"
#include "symtrig/symplectic.hpp"
#include "symtrig/trig.hpp"

namespace symtrig {

struct HypCoefficients {
    std::vector<Matrix> p;
    std::vector<Matrix> q;

    std::size_t dim() const { return p.empty() ? 0 : p.front().rows(); }
    std::size_t horizon() const { return p.empty() ? 0 : p.size() - 1; }
};

/// Residuals at every k, reported as: eq53 (P^T P - Q^T Q = I, both orders),
/// eq54 (P^T Q = Q^T P, both orders), symplectic, p_invertible (pivot test on
/// every P_k), inv_plus / inv_minus ((P +- Q)^{-1} = P^T -+ Q^T), and
/// pinvq_symmetric (P^{-1} Q symmetric).
ResidualReport validate_hyp(const HypCoefficients& coeffs, double tol = kDefaultValidationTol);

/// Step matrices [[P, Q], [Q, P]] as block-symplectic values (unchecked).
std::vector<BlockSymplectic> assemble_hyp(const HypCoefficients& coeffs);

struct HypFunctions {
    std::size_t base_point = 0;
    std::vector<Matrix> sinh;
    std::vector<Matrix> cosh;

    std::size_t dim() const { return sinh.empty() ? 0 : sinh.front().rows(); }
    std::size_t length() const { return sinh.size(); }
};

/// Sinh/Cosh from the principal solution at k0; validates first.
HypFunctions hyp_functions(const HypCoefficients& coeffs, std::size_t k0);

/// X_k = Cosh_k X_0 + Sinh_k U_0, U_k = Sinh_k X_0 + Cosh_k U_0.
Trajectory hyp_general_solution(const HypCoefficients& coeffs, const Matrix& x0, const Matrix& u0);

/// (X, U) -> (U, X), again a solution of the same system.
Trajectory swap_solution(const Trajectory& z);

/// Sinh_{k;l} = Sinh_k Cosh_l^T - Cosh_k Sinh_l^T,
/// Cosh_{k;l} = Cosh_k Cosh_l^T - Sinh_k Sinh_l^T.
HypFunctions hyp_shifted_functions(const HypFunctions& funcs, std::size_t l);

struct HypParityResiduals {
    double sinh_residual = 0.0;  // || Sinh_{k;l} + Sinh_{l;k}^T ||
    double cosh_residual = 0.0;  // || Cosh_{k;l} - Cosh_{l;k}^T ||
};

HypParityResiduals hyp_parity_check(const HypFunctions& funcs, std::size_t k, std::size_t l);

/// Closed-form inverses
///   Cosh_k^{-1} = Cosh_k^T - Sinh_k^T Cosh_k^{T-1} Sinh_k^T,
///   Sinh_k^{-1} = Cosh_k^T Sinh_k^{T-1} Cosh_k^T - Sinh_k^T.
/// Cosh_k is invertible for every valid system, so a pivot failure there is
/// an internal inconsistency (DomainError); the Sinh slot is absent when
/// Sinh_k fails the pivot test.
struct HypInverses {
    Matrix cosh_inverse;
    std::optional<Matrix> sinh_inverse;
};

HypInverses hyp_closed_form_inverses(const HypFunctions& funcs, std::size_t k,
                                     double pivot_tol = kDefaultPivotTol);

/// Sinh+ = Sinh1 Cosh2^T + Cosh1 Sinh2^T,  Cosh+ = Cosh1 Cosh2^T + Sinh1 Sinh2^T,
/// Sinh- = Sinh1 Cosh2^T - Cosh1 Sinh2^T,  Cosh- = Cosh1 Cosh2^T - Sinh1 Sinh2^T.
struct HypPairCombination {
    std::vector<Matrix> plus_sinh;
    std::vector<Matrix> plus_cosh;
    std::vector<Matrix> minus_sinh;
    std::vector<Matrix> minus_cosh;
};

HypPairCombination hyp_combine_pair(const HypFunctions& f1, const HypFunctions& f2);

/// Evolves the combined system's one-step recurrence from (0, I).
Trajectory hyp_combination_system_step(const HypCoefficients& c1, const HypCoefficients& c2,
                                       CombinationSign sign);

/// X = 2 Sinh Cosh^T, U = Cosh Cosh^T + Sinh Sinh^T; X_k and U_k commute.
Trajectory hyp_double_angle(const HypFunctions& funcs);

/// Tanh_k = Cosh_k^{-1} Sinh_k; Cosh_k failing the pivot test is an internal
/// inconsistency (DomainError).
Matrix hyp_tangent(const HypFunctions& funcs, std::size_t k);

/// Cotanh_k = Sinh_k^{-1} Cosh_k; throws UndefinedAtIndexError when Sinh_k
/// fails the pivot test.
Matrix hyp_cotangent(const HypFunctions& funcs, std::size_t k,
                     double pivot_tol = kDefaultPivotTol);

/// Relative Frobenius residuals of eq55-eq61, step-P, step-Q, frobenius, and
/// eq67-eq91 for the pair (coeffs, partner). Same skip bookkeeping as the
/// trigonometric suite.
ResidualReport hyp_identity_suite(const HypCoefficients& coeffs, double tol,
                                  const HypCoefficients& partner);

ResidualReport hyp_identity_suite(const HypCoefficients& coeffs, double tol,
                                  std::uint64_t partner_seed = kDefaultPartnerSeed);

}  // namespace symtrig
