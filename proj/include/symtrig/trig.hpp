// Trigonometric specialization: step matrices [[P, Q], [-Q, P]] whose blocks
// satisfy P^T P + Q^T Q = I and P^T Q = Q^T P. The principal solution at a
// base point defines the matrix functions Sin and Cos; this module provides
// their shifted/combined variants, tangent and cotangent, and a residual
// suite over the full identity catalog (eq13-eq22, eq28-eq52).
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "symtrig/matrix.hpp"
#include "symtrig/report.hpp"
#include "symtrig/symplectic.hpp"

namespace symtrig {

/// Raised when a function that must be inverted at index k fails the pivot
/// test there.
class UndefinedAtIndexError : public std::runtime_error {
public:
    UndefinedAtIndexError(const std::string& what, std::size_t index)
        : std::runtime_error(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Coefficient blocks P_k, Q_k for k = 0..N (so horizon() returns N).
struct TrigCoefficients {
    std::vector<Matrix> p;
    std::vector<Matrix> q;

    std::size_t dim() const { return p.empty() ? 0 : p.front().rows(); }
    std::size_t horizon() const { return p.empty() ? 0 : p.size() - 1; }
};

inline constexpr double kDefaultValidationTol = 1e-10;

/// Residuals of the defining block identities at every k, reported as:
/// eq10 (P^T P + Q^T Q = I, both orders), eq11 (P^T Q = Q^T P, both orders),
/// symplectic (assembled step passes the eight symplecticity equalities),
/// self_reciprocal (J^T S J = S).
ResidualReport validate_trig(const TrigCoefficients& coeffs, double tol = kDefaultValidationTol);

/// Step matrices [[P, Q], [-Q, P]] as block-symplectic values (unchecked).
std::vector<BlockSymplectic> assemble_trig(const TrigCoefficients& coeffs);

/// Matrix sine and cosine relative to base_point: the principal solution
/// there is (Sin, Cos).
struct TrigFunctions {
    std::size_t base_point = 0;
    std::vector<Matrix> sin;
    std::vector<Matrix> cos;

    std::size_t dim() const { return sin.empty() ? 0 : sin.front().rows(); }
    std::size_t length() const { return sin.size(); }
};

/// Sin/Cos from the principal solution at k0. Validates the coefficients
/// first (throws DomainError when validation fails).
TrigFunctions trig_functions(const TrigCoefficients& coeffs, std::size_t k0);

/// X_k = Cos_k X_0 + Sin_k U_0, U_k = -Sin_k X_0 + Cos_k U_0; agrees with
/// direct propagation of (x0, u0).
Trajectory general_solution(const TrigCoefficients& coeffs, const Matrix& x0, const Matrix& u0);

/// (X, U) -> (U, -X), again a solution of the same system.
Trajectory rotate_solution(const Trajectory& z);

/// Shifted functions about l via
///   Sin_{k;l} = Sin_k Cos_l^T - Cos_k Sin_l^T,
///   Cos_{k;l} = Cos_k Cos_l^T + Sin_k Sin_l^T.
TrigFunctions shifted_functions(const TrigFunctions& funcs, std::size_t l);

struct ParityResiduals {
    double sin_residual = 0.0;  // || Sin_{k;l} + Sin_{l;k}^T ||
    double cos_residual = 0.0;  // || Cos_{k;l} - Cos_{l;k}^T ||
};

ParityResiduals parity_check(const TrigFunctions& funcs, std::size_t k, std::size_t l);

/// Closed-form inverses
///   Cos_k^{-1} = Cos_k^T + Sin_k^T Cos_k^{T-1} Sin_k^T,
///   Sin_k^{-1} = Sin_k^T + Cos_k^T Sin_k^{T-1} Cos_k^T;
/// a slot is absent when its function fails the pivot test at k.
struct TrigInverses {
    std::optional<Matrix> cos_inverse;
    std::optional<Matrix> sin_inverse;
};

TrigInverses closed_form_inverses(const TrigFunctions& funcs, std::size_t k,
                                  double pivot_tol = kDefaultPivotTol);

/// Sum/difference functions of two systems sharing (n, N):
///   Sin+ = Sin1 Cos2^T + Cos1 Sin2^T,  Cos+ = Cos1 Cos2^T - Sin1 Sin2^T,
///   Sin- = Sin1 Cos2^T - Cos1 Sin2^T,  Cos- = Cos1 Cos2^T + Sin1 Sin2^T.
struct PairCombination {
    std::vector<Matrix> plus_sin;
    std::vector<Matrix> plus_cos;
    std::vector<Matrix> minus_sin;
    std::vector<Matrix> minus_cos;
};

PairCombination combine_pair(const TrigFunctions& f1, const TrigFunctions& f2);

enum class CombinationSign { Plus, Minus };

/// Evolves the one-step recurrence of the combined system directly from
/// (X_0, U_0) = (0, I); equals the product construction up to roundoff.
Trajectory combination_system_step(const TrigCoefficients& c1, const TrigCoefficients& c2,
                                   CombinationSign sign);

/// Double-argument functions X = 2 Sin Cos^T, U = Cos Cos^T - Sin Sin^T;
/// X_k and U_k commute.
Trajectory double_angle(const TrigFunctions& funcs);

/// Tan_k = Cos_k^{-1} Sin_k; throws UndefinedAtIndexError when Cos_k fails
/// the pivot test.
Matrix tangent(const TrigFunctions& funcs, std::size_t k, double pivot_tol = kDefaultPivotTol);

/// Cotan_k = Sin_k^{-1} Cos_k; throws UndefinedAtIndexError when Sin_k fails
/// the pivot test.
Matrix cotangent(const TrigFunctions& funcs, std::size_t k, double pivot_tol = kDefaultPivotTol);

inline constexpr std::uint64_t kDefaultPartnerSeed = 0x9e3779b97f4a7c15ULL;

/// Frobenius residuals (absolute) of eq13-eq22 and eq28-eq52 for the pair
/// (coeffs, partner). Identities that invert a function are evaluated only at
/// indices where every inverted matrix passes the suite's pivot test; skipped
/// indices are recorded per identity. Entries appear in a fixed order.
ResidualReport trig_identity_suite(const TrigCoefficients& coeffs, double tol,
                                   const TrigCoefficients& partner);

/// Same, generating the partner system from partner_seed with matching
/// (n, N).
ResidualReport trig_identity_suite(const TrigCoefficients& coeffs, double tol,
                                   std::uint64_t partner_seed = kDefaultPartnerSeed);

}  // namespace symtrig
