#include "symtrig/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "suite_util.hpp"
#include "symtrig/generators.hpp"

namespace symtrig {

namespace {

void require_coeffs(const HypCoefficients& c, const char* who) {
    if (c.p.empty() || c.p.size() != c.q.size()) {
        throw ShapeError(std::string(who) + ": need matching non-empty P and Q lists");
    }
    const std::size_t n = c.p.front().rows();
    for (std::size_t k = 0; k < c.p.size(); ++k) {
        const Matrix& p = c.p[k];
        const Matrix& q = c.q[k];
        if (!p.square() || p.rows() != n || q.rows() != n || q.cols() != n) {
            throw ShapeError(std::string(who) + ": blocks must be square with one dimension");
        }
    }
}

HypFunctions functions_from_blocks(const std::vector<BlockSymplectic>& blocks, std::size_t k0) {
    Trajectory z = principal_solution(blocks, k0);
    HypFunctions f;
    f.base_point = k0;
    f.sinh = std::move(z.x);
    f.cosh = std::move(z.u);
    return f;
}

void require_index(const HypFunctions& f, std::size_t k, const char* who) {
    if (k >= f.length()) {
        throw DomainError(std::string(who) + ": index " + std::to_string(k) +
                          " beyond trajectory of length " + std::to_string(f.length()));
    }
}

void require_same_grid(const HypCoefficients& c1, const HypCoefficients& c2, const char* who) {
    if (c1.dim() != c2.dim() || c1.horizon() != c2.horizon()) {
        throw ShapeError(std::string(who) + ": systems must share dimension and horizon");
    }
}

}  // namespace

ResidualReport validate_hyp(const HypCoefficients& coeffs, double tol) {
    require_coeffs(coeffs, "validate_hyp");
    const std::size_t n = coeffs.dim();
    const Matrix id = Matrix::identity(n);
    const Matrix zero = Matrix::zero(n, n);

    IdentityCheck eq53("eq53", tol, true);
    IdentityCheck eq54("eq54", tol, true);
    IdentityCheck symplectic("symplectic", tol, true);
    IdentityCheck p_invertible("p_invertible", tol, true);
    IdentityCheck inv_plus("inv_plus", tol, true);
    IdentityCheck inv_minus("inv_minus", tol, true);
    IdentityCheck pinvq_symmetric("pinvq_symmetric", tol, true);

    for (std::size_t k = 0; k <= coeffs.horizon(); ++k) {
        const Matrix& p = coeffs.p[k];
        const Matrix& q = coeffs.q[k];
        const Matrix pt = p.transposed();
        const Matrix qt = q.transposed();
        const int ik = static_cast<int>(k);

        eq53.accumulate(ik, pt * p - qt * q, id);
        eq53.accumulate(ik, p * pt - q * qt, id);
        eq54.accumulate(ik, pt * q - qt * p, zero);
        eq54.accumulate(ik, p * qt - q * pt, zero);

        const BlockSymplectic s = BlockSymplectic::unchecked(p, q, q, p);
        symplectic.accumulate_scalar(ik, symplecticity_residual(s), 0.0);

        // A valid block has invertible P (and P +- Q); pivot failures are
        // scored as unit residuals so the entry fails the tolerance.
        const auto p_inv = try_invert(p);
        p_invertible.accumulate_scalar(ik, p_inv ? 0.0 : 1.0, 0.0);
        if (p_inv) {
            const Matrix ratio = (*p_inv) * q;
            pinvq_symmetric.accumulate(ik, ratio, ratio.transposed());
        } else {
            pinvq_symmetric.skip(ik);
        }
        if (auto plus_inv = try_invert(p + q)) {
            inv_plus.accumulate(ik, *plus_inv, pt - qt);
        } else {
            inv_plus.accumulate_scalar(ik, 1.0, 0.0);
        }
        if (auto minus_inv = try_invert(p - q)) {
            inv_minus.accumulate(ik, *minus_inv, pt + qt);
        } else {
            inv_minus.accumulate_scalar(ik, 1.0, 0.0);
        }
    }

    ResidualReport report;
    report.add(eq53.finish());
    report.add(eq54.finish());
    report.add(symplectic.finish());
    report.add(p_invertible.finish());
    report.add(inv_plus.finish());
    report.add(inv_minus.finish());
    report.add(pinvq_symmetric.finish());
    return report;
}

std::vector<BlockSymplectic> assemble_hyp(const HypCoefficients& coeffs) {
    require_coeffs(coeffs, "assemble_hyp");
    std::vector<BlockSymplectic> blocks;
    blocks.reserve(coeffs.p.size());
    for (std::size_t k = 0; k < coeffs.p.size(); ++k) {
        blocks.push_back(
            BlockSymplectic::unchecked(coeffs.p[k], coeffs.q[k], coeffs.q[k], coeffs.p[k]));
    }
    return blocks;
}

HypFunctions hyp_functions(const HypCoefficients& coeffs, std::size_t k0) {
    const ResidualReport validation = validate_hyp(coeffs);
    if (!validation.all_pass()) {
        throw DomainError("hyp_functions: coefficients fail validation, worst residual " +
                          std::to_string(validation.worst_residual()));
    }
    if (k0 > coeffs.horizon() + 1) {
        throw DomainError("hyp_functions: base point beyond trajectory");
    }
    return functions_from_blocks(assemble_hyp(coeffs), k0);
}

Trajectory hyp_general_solution(const HypCoefficients& coeffs, const Matrix& x0,
                                const Matrix& u0) {
    const HypFunctions f = hyp_functions(coeffs, 0);
    const std::size_t n = f.dim();
    if (x0.rows() != n || u0.rows() != n || x0.cols() != u0.cols() || x0.cols() == 0) {
        throw ShapeError("hyp_general_solution: initial values do not match the system dimension");
    }
    Trajectory z;
    z.x.reserve(f.length());
    z.u.reserve(f.length());
    for (std::size_t k = 0; k < f.length(); ++k) {
        z.x.push_back(f.cosh[k] * x0 + f.sinh[k] * u0);
        z.u.push_back(f.sinh[k] * x0 + f.cosh[k] * u0);
    }
    return z;
}

Trajectory swap_solution(const Trajectory& z) {
    Trajectory r;
    r.x = z.u;
    r.u = z.x;
    return r;
}

HypFunctions hyp_shifted_functions(const HypFunctions& funcs, std::size_t l) {
    require_index(funcs, l, "hyp_shifted_functions");
    const Matrix clt = funcs.cosh[l].transposed();
    const Matrix slt = funcs.sinh[l].transposed();
    HypFunctions out;
    out.base_point = l;
    out.sinh.reserve(funcs.length());
    out.cosh.reserve(funcs.length());
    for (std::size_t k = 0; k < funcs.length(); ++k) {
        out.sinh.push_back(funcs.sinh[k] * clt - funcs.cosh[k] * slt);
        out.cosh.push_back(funcs.cosh[k] * clt - funcs.sinh[k] * slt);
    }
    return out;
}

HypParityResiduals hyp_parity_check(const HypFunctions& funcs, std::size_t k, std::size_t l) {
    require_index(funcs, k, "hyp_parity_check");
    require_index(funcs, l, "hyp_parity_check");
    const auto shifted_sinh = [&funcs](std::size_t a, std::size_t b) {
        return funcs.sinh[a] * funcs.cosh[b].transposed() -
               funcs.cosh[a] * funcs.sinh[b].transposed();
    };
    const auto shifted_cosh = [&funcs](std::size_t a, std::size_t b) {
        return funcs.cosh[a] * funcs.cosh[b].transposed() -
               funcs.sinh[a] * funcs.sinh[b].transposed();
    };
    HypParityResiduals r;
    r.sinh_residual = frobenius_norm(shifted_sinh(k, l) + shifted_sinh(l, k).transposed());
    r.cosh_residual = residual_norm(shifted_cosh(k, l), shifted_cosh(l, k).transposed());
    return r;
}

HypInverses hyp_closed_form_inverses(const HypFunctions& funcs, std::size_t k, double pivot_tol) {
    require_index(funcs, k, "hyp_closed_form_inverses");
    const Matrix ct = funcs.cosh[k].transposed();
    const Matrix st = funcs.sinh[k].transposed();
    const auto ct_inv = try_invert(ct, pivot_tol);
    if (!ct_inv) {
        throw DomainError("hyp_closed_form_inverses: Cosh failed the pivot test at index " +
                          std::to_string(k) + "; the system is inconsistent");
    }
    HypInverses out;
    out.cosh_inverse = ct - st * (*ct_inv) * st;
    if (auto st_inv = try_invert(st, pivot_tol)) {
        out.sinh_inverse = ct * (*st_inv) * ct - st;
    }
    return out;
}

HypPairCombination hyp_combine_pair(const HypFunctions& f1, const HypFunctions& f2) {
    if (f1.length() != f2.length() || f1.dim() != f2.dim()) {
        throw ShapeError("hyp_combine_pair: function families must share shape");
    }
    HypPairCombination c;
    c.plus_sinh.reserve(f1.length());
    c.plus_cosh.reserve(f1.length());
    c.minus_sinh.reserve(f1.length());
    c.minus_cosh.reserve(f1.length());
    for (std::size_t k = 0; k < f1.length(); ++k) {
        const Matrix sc = f1.sinh[k] * f2.cosh[k].transposed();
        const Matrix cs = f1.cosh[k] * f2.sinh[k].transposed();
        const Matrix cc = f1.cosh[k] * f2.cosh[k].transposed();
        const Matrix ss = f1.sinh[k] * f2.sinh[k].transposed();
        c.plus_sinh.push_back(sc + cs);
        c.plus_cosh.push_back(cc + ss);
        c.minus_sinh.push_back(sc - cs);
        c.minus_cosh.push_back(cc - ss);
    }
    return c;
}

Trajectory hyp_combination_system_step(const HypCoefficients& c1, const HypCoefficients& c2,
                                       CombinationSign sign) {
    require_same_grid(c1, c2, "hyp_combination_system_step");
    const ResidualReport v1 = validate_hyp(c1);
    const ResidualReport v2 = validate_hyp(c2);
    if (!v1.all_pass() || !v2.all_pass()) {
        throw DomainError("hyp_combination_system_step: coefficients fail validation");
    }
    const std::size_t n = c1.dim();
    Trajectory z;
    z.x.push_back(Matrix::zero(n, n));
    z.u.push_back(Matrix::identity(n));
    for (std::size_t k = 0; k <= c1.horizon(); ++k) {
        const Matrix& p1 = c1.p[k];
        const Matrix& q1 = c1.q[k];
        const Matrix p2t = c2.p[k].transposed();
        const Matrix q2t = c2.q[k].transposed();
        const Matrix& x = z.x.back();
        const Matrix& u = z.u.back();
        if (sign == CombinationSign::Plus) {
            const Matrix r = x * p2t + u * q2t;
            const Matrix s = x * q2t + u * p2t;
            z.x.push_back(p1 * r + q1 * s);
            z.u.push_back(q1 * r + p1 * s);
        } else {
            const Matrix r = x * p2t - u * q2t;
            const Matrix s = u * p2t - x * q2t;
            z.x.push_back(p1 * r + q1 * s);
            z.u.push_back(q1 * r + p1 * s);
        }
    }
    return z;
}

Trajectory hyp_double_angle(const HypFunctions& funcs) {
    Trajectory z;
    z.x.reserve(funcs.length());
    z.u.reserve(funcs.length());
    for (std::size_t k = 0; k < funcs.length(); ++k) {
        const Matrix& s = funcs.sinh[k];
        const Matrix& c = funcs.cosh[k];
        z.x.push_back(2.0 * (s * c.transposed()));
        z.u.push_back(c * c.transposed() + s * s.transposed());
    }
    return z;
}

Matrix hyp_tangent(const HypFunctions& funcs, std::size_t k) {
    require_index(funcs, k, "hyp_tangent");
    auto inv = try_invert(funcs.cosh[k]);
    if (!inv) {
        throw DomainError("hyp_tangent: Cosh failed the pivot test at index " + std::to_string(k) +
                          "; the system is inconsistent");
    }
    return (*inv) * funcs.sinh[k];
}

Matrix hyp_cotangent(const HypFunctions& funcs, std::size_t k, double pivot_tol) {
    require_index(funcs, k, "hyp_cotangent");
    auto inv = try_invert(funcs.sinh[k], pivot_tol);
    if (!inv) {
        throw UndefinedAtIndexError("hyp_cotangent undefined at index " + std::to_string(k), k);
    }
    return (*inv) * funcs.cosh[k];
}

ResidualReport hyp_identity_suite(const HypCoefficients& coeffs, double tol,
                                  const HypCoefficients& partner) {
    using detail::OptMatrix;
    using detail::kSuitePivotTol;
    require_same_grid(coeffs, partner, "hyp_identity_suite");
    const HypFunctions f1 = hyp_functions(coeffs, 0);
    const HypFunctions f2 = hyp_functions(partner, 0);
    const std::size_t n = f1.dim();
    const std::size_t len = f1.length();
    const Matrix id = Matrix::identity(n);
    const Matrix zero = Matrix::zero(n, n);
    const std::vector<BlockSymplectic> blocks = assemble_hyp(coeffs);

    ResidualReport report;

    {
        IdentityCheck eq55("eq55", tol, true);
        IdentityCheck eq56("eq56", tol, true);
        for (std::size_t k = 0; k < len; ++k) {
            const Matrix& s = f1.sinh[k];
            const Matrix& c = f1.cosh[k];
            const Matrix st = s.transposed();
            const Matrix ct = c.transposed();
            const int ik = static_cast<int>(k);
            eq55.accumulate(ik, ct * c - st * s, id);
            eq55.accumulate(ik, c * ct - s * st, id);
            eq56.accumulate(ik, ct * s - st * c, zero);
            eq56.accumulate(ik, c * st - s * ct, zero);
        }
        report.add(eq55.finish());
        report.add(eq56.finish());
    }

    {
        IdentityCheck step_p("step-P", tol, true);
        IdentityCheck step_q("step-Q", tol, true);
        for (std::size_t k = 0; k + 1 < len; ++k) {
            const Matrix st = f1.sinh[k].transposed();
            const Matrix ct = f1.cosh[k].transposed();
            const int ik = static_cast<int>(k);
            step_p.accumulate(ik, f1.cosh[k + 1] * ct - f1.sinh[k + 1] * st, coeffs.p[k]);
            step_q.accumulate(ik, f1.sinh[k + 1] * ct - f1.cosh[k + 1] * st, coeffs.q[k]);
        }
        report.add(step_p.finish());
        report.add(step_q.finish());
    }

    {
        IdentityCheck frob("frobenius", tol, true);
        for (std::size_t k = 0; k < len; ++k) {
            const double c = frobenius_norm(f1.cosh[k]);
            const double s = frobenius_norm(f1.sinh[k]);
            frob.accumulate_scalar(static_cast<int>(k), c * c - s * s, static_cast<double>(n),
                                   c * c);
        }
        report.add(frob.finish());
    }

    {
        const std::vector<std::size_t> pts = detail::identity_base_points(len);
        std::vector<HypFunctions> at;
        at.reserve(pts.size());
        for (std::size_t l : pts) {
            at.push_back(functions_from_blocks(blocks, l));
        }
        IdentityCheck eq57("eq57", tol, true);
        IdentityCheck eq58("eq58", tol, true);
        IdentityCheck eq59("eq59", tol, true);
        IdentityCheck eq60("eq60", tol, true);
        IdentityCheck eq61("eq61", tol, true);
        for (std::size_t li = 0; li < pts.size(); ++li) {
            const std::size_t l = pts[li];
            const HypFunctions& prop = at[li];
            const HypFunctions formula = hyp_shifted_functions(f1, l);
            for (std::size_t k = 0; k < len; ++k) {
                const int ik = static_cast<int>(k);
                eq57.accumulate(ik, prop.sinh[k], formula.sinh[k]);
                eq58.accumulate(ik, prop.cosh[k], formula.cosh[k]);
                eq59.accumulate(ik, f1.sinh[k],
                                prop.sinh[k] * f1.cosh[l] + prop.cosh[k] * f1.sinh[l]);
                eq60.accumulate(ik, f1.cosh[k],
                                prop.cosh[k] * f1.cosh[l] + prop.sinh[k] * f1.sinh[l]);
            }
            for (std::size_t ki = 0; ki < pts.size(); ++ki) {
                const std::size_t k = pts[ki];
                const int ik = static_cast<int>(k);
                eq61.accumulate(ik, at[li].sinh[k], -at[ki].sinh[l].transposed());
                eq61.accumulate(ik, at[li].cosh[k], at[ki].cosh[l].transposed());
            }
        }
        report.add(eq57.finish());
        report.add(eq58.finish());
        report.add(eq59.finish());
        report.add(eq60.finish());
        report.add(eq61.finish());
    }

    const HypPairCombination combo = hyp_combine_pair(f1, f2);

    {
        IdentityCheck eq67("eq67", tol, true);
        IdentityCheck eq68("eq68", tol, true);
        IdentityCheck eq69("eq69", tol, true);
        IdentityCheck eq70("eq70", tol, true);
        IdentityCheck eq71("eq71", tol, true);
        IdentityCheck eq72("eq72", tol, true);
        IdentityCheck eq73("eq73", tol, true);
        for (std::size_t k = 0; k < len; ++k) {
            const int ik = static_cast<int>(k);
            const Matrix& sp = combo.plus_sinh[k];
            const Matrix& cp = combo.plus_cosh[k];
            const Matrix& sm = combo.minus_sinh[k];
            const Matrix& cm = combo.minus_cosh[k];
            eq67.accumulate(ik, cp.transposed() * cp - sp.transposed() * sp, id);
            eq67.accumulate(ik, cp * cp.transposed() - sp * sp.transposed(), id);
            eq68.accumulate(ik, cp.transposed() * sp - sp.transposed() * cp, zero);
            eq68.accumulate(ik, cp * sp.transposed() - sp * cp.transposed(), zero);
            eq69.accumulate(ik, cm.transposed() * cm - sm.transposed() * sm, id);
            eq69.accumulate(ik, cm * cm.transposed() - sm * sm.transposed(), id);
            eq70.accumulate(ik, cm.transposed() * sm - sm.transposed() * cm, zero);
            eq70.accumulate(ik, cm * sm.transposed() - sm * cm.transposed(), zero);
            eq71.accumulate(ik, f1.sinh[k] * f2.sinh[k].transposed(), 0.5 * (cp - cm));
            eq72.accumulate(ik, f1.cosh[k] * f2.cosh[k].transposed(), 0.5 * (cp + cm));
            eq73.accumulate(ik, f1.sinh[k] * f2.cosh[k].transposed(), 0.5 * (sp + sm));
        }
        report.add(eq67.finish());
        report.add(eq68.finish());
        report.add(eq69.finish());
        report.add(eq70.finish());
        report.add(eq71.finish());
        report.add(eq72.finish());
        report.add(eq73.finish());
    }

    const std::vector<OptMatrix> cosh1_inv = detail::inverse_cache(f1.cosh);
    const std::vector<OptMatrix> sinh1_inv = detail::inverse_cache(f1.sinh);
    const std::vector<OptMatrix> cosh2_inv = detail::inverse_cache(f2.cosh);
    const std::vector<OptMatrix> sinh2_inv = detail::inverse_cache(f2.sinh);
    const std::vector<OptMatrix> tanh1 = detail::ratio_cache(cosh1_inv, f1.sinh);
    const std::vector<OptMatrix> cot1 = detail::ratio_cache(sinh1_inv, f1.cosh);
    const std::vector<OptMatrix> tanh2 = detail::ratio_cache(cosh2_inv, f2.sinh);
    const std::vector<OptMatrix> cot2 = detail::ratio_cache(sinh2_inv, f2.cosh);

    {
        IdentityCheck eq74("eq74", tol, true);
        IdentityCheck eq75("eq75", tol, true);
        IdentityCheck eq77("eq77", tol, true);
        IdentityCheck eq78("eq78", tol, true);
        for (std::size_t k = 0; k < len; ++k) {
            const int ik = static_cast<int>(k);
            if (tanh1[k]) {
                const Matrix& t = *tanh1[k];
                const Matrix& ci = *cosh1_inv[k];
                eq74.accumulate(ik, t, t.transposed());
                eq75.accumulate(ik, ci * ci.transposed() + t * t, id);
            } else {
                eq74.skip(ik);
                eq75.skip(ik);
            }
            if (cot1[k]) {
                const Matrix& ct = *cot1[k];
                const Matrix& si = *sinh1_inv[k];
                eq77.accumulate(ik, ct, ct.transposed());
                eq78.accumulate(ik, ct * ct - si * si.transposed(), id);
            } else {
                eq77.skip(ik);
                eq78.skip(ik);
            }
        }
        IdentityCheck eq76("eq76", tol, true);
        IdentityCheck eq79("eq79", tol, true);
        for (std::size_t k = 0; k + 1 < len; ++k) {
            const int ik = static_cast<int>(k);
            if (tanh1[k] && tanh1[k + 1]) {
                eq76.accumulate(ik, *tanh1[k + 1] - *tanh1[k],
                                (*cosh1_inv[k + 1]) * coeffs.q[k] * cosh1_inv[k]->transposed());
            } else {
                eq76.skip(ik);
            }
            if (cot1[k] && cot1[k + 1]) {
                eq79.accumulate(ik, *cot1[k + 1] - *cot1[k],
                                -((*sinh1_inv[k + 1]) * coeffs.q[k] * sinh1_inv[k]->transposed()));
            } else {
                eq79.skip(ik);
            }
        }
        report.add(eq74.finish());
        report.add(eq75.finish());
        report.add(eq76.finish());
        report.add(eq77.finish());
        report.add(eq78.finish());
        report.add(eq79.finish());
    }

    {
        const std::vector<OptMatrix> coshp_inv = detail::inverse_cache(combo.plus_cosh);
        const std::vector<OptMatrix> coshm_inv = detail::inverse_cache(combo.minus_cosh);
        const std::vector<OptMatrix> sinhp_inv = detail::inverse_cache(combo.plus_sinh);
        const std::vector<OptMatrix> sinhm_inv = detail::inverse_cache(combo.minus_sinh);

        IdentityCheck eq80("eq80", tol, true);
        IdentityCheck eq81("eq81", tol, true);
        IdentityCheck eq82("eq82", tol, true);
        IdentityCheck eq83("eq83", tol, true);
        IdentityCheck eq84("eq84", tol, true);
        IdentityCheck eq85("eq85", tol, true);
        IdentityCheck eq86("eq86", tol, true);
        IdentityCheck eq87("eq87", tol, true);
        IdentityCheck eq88("eq88", tol, true);
        IdentityCheck eq89("eq89", tol, true);
        IdentityCheck eq90("eq90", tol, true);
        IdentityCheck eq91("eq91", tol, true);

        for (std::size_t k = 0; k < len; ++k) {
            const int ik = static_cast<int>(k);
            const bool tanhs = tanh1[k] && tanh2[k];
            const bool cots = cot1[k] && cot2[k];

            if (tanhs && cots) {
                eq80.accumulate(ik, *tanh1[k] + *tanh2[k],
                                (*tanh1[k]) * (*cot1[k] + *cot2[k]) * (*tanh2[k]));
                eq81.accumulate(ik, *tanh1[k] - *tanh2[k],
                                (*tanh1[k]) * (*cot2[k] - *cot1[k]) * (*tanh2[k]));
            } else {
                eq80.skip(ik);
                eq81.skip(ik);
            }

            if (tanhs) {
                eq82.accumulate(ik, *tanh1[k] + *tanh2[k],
                                (*cosh2_inv[k]) * combo.plus_sinh[k].transposed() *
                                    cosh1_inv[k]->transposed());
                eq83.accumulate(ik, *tanh1[k] - *tanh2[k],
                                (*cosh2_inv[k]) * combo.minus_sinh[k].transposed() *
                                    cosh1_inv[k]->transposed());
            } else {
                eq82.skip(ik);
                eq83.skip(ik);
            }

            if (tanhs && coshp_inv[k]) {
                const Matrix m = id + (*tanh1[k]) * (*tanh2[k]);
                if (auto m_inv = detail::capped_invert(m)) {
                    const Matrix tanh_plus = (*coshp_inv[k]) * combo.plus_sinh[k];
                    eq84.accumulate(ik, tanh_plus,
                                    cosh2_inv[k]->transposed() * (*m_inv) *
                                        (*tanh1[k] + *tanh2[k]) * f2.cosh[k].transposed());
                } else {
                    eq84.skip(ik);
                }
            } else {
                eq84.skip(ik);
            }

            if (tanhs && coshm_inv[k]) {
                const Matrix m = id - (*tanh1[k]) * (*tanh2[k]);
                if (auto m_inv = detail::capped_invert(m)) {
                    const Matrix tanh_minus = (*coshm_inv[k]) * combo.minus_sinh[k];
                    eq85.accumulate(ik, tanh_minus,
                                    cosh2_inv[k]->transposed() * (*m_inv) *
                                        (*tanh1[k] - *tanh2[k]) * f2.cosh[k].transposed());
                } else {
                    eq85.skip(ik);
                }
            } else {
                eq85.skip(ik);
            }

            if (tanhs && cots) {
                eq86.accumulate(ik, *cot1[k] + *cot2[k],
                                (*cot1[k]) * (*tanh1[k] + *tanh2[k]) * (*cot2[k]));
                eq87.accumulate(ik, *cot1[k] - *cot2[k],
                                (*cot1[k]) * (*tanh2[k] - *tanh1[k]) * (*cot2[k]));
            } else {
                eq86.skip(ik);
                eq87.skip(ik);
            }

            if (cots) {
                eq88.accumulate(ik, *cot1[k] + *cot2[k],
                                (*sinh2_inv[k]) * combo.plus_sinh[k].transposed() *
                                    sinh1_inv[k]->transposed());
                eq89.accumulate(ik, *cot1[k] - *cot2[k],
                                -((*sinh2_inv[k]) * combo.minus_sinh[k].transposed() *
                                  sinh1_inv[k]->transposed()));
            } else {
                eq88.skip(ik);
                eq89.skip(ik);
            }

            if (cots && sinhp_inv[k]) {
                const Matrix m = *cot1[k] + *cot2[k];
                if (auto m_inv = detail::capped_invert(m)) {
                    const Matrix cot_plus = (*sinhp_inv[k]) * combo.plus_cosh[k];
                    eq90.accumulate(ik, cot_plus,
                                    sinh2_inv[k]->transposed() * (*m_inv) *
                                        ((*cot1[k]) * (*cot2[k]) + id) * f2.sinh[k].transposed());
                } else {
                    eq90.skip(ik);
                }
            } else {
                eq90.skip(ik);
            }

            if (cots && sinhm_inv[k]) {
                const Matrix m = *cot2[k] - *cot1[k];
                if (auto m_inv = detail::capped_invert(m)) {
                    const Matrix cot_minus = (*sinhm_inv[k]) * combo.minus_cosh[k];
                    eq91.accumulate(ik, cot_minus,
                                    sinh2_inv[k]->transposed() * (*m_inv) *
                                        ((*cot1[k]) * (*cot2[k]) - id) * f2.sinh[k].transposed());
                } else {
                    eq91.skip(ik);
                }
            } else {
                eq91.skip(ik);
            }
        }

        report.add(eq80.finish());
        report.add(eq81.finish());
        report.add(eq82.finish());
        report.add(eq83.finish());
        report.add(eq84.finish());
        report.add(eq85.finish());
        report.add(eq86.finish());
        report.add(eq87.finish());
        report.add(eq88.finish());
        report.add(eq89.finish());
        report.add(eq90.finish());
        report.add(eq91.finish());
    }

    return report;
}

ResidualReport hyp_identity_suite(const HypCoefficients& coeffs, double tol,
                                  std::uint64_t partner_seed) {
    // Partner amplitude shrinks with the horizon: identities with an O(1)
    // left side are evaluated through intermediates of size ~(G1*G2)^2 for
    // solution growths G1, G2, so the partner's growth is held near e^2 to
    // keep that product inside the double-precision budget.
    const double amplitude = std::min(1.0, 2.0 / static_cast<double>(std::max<std::size_t>(
                                               coeffs.horizon(), 1)));
    const HypCoefficients partner =
        gen_hyp(coeffs.dim(), coeffs.horizon(), amplitude, std::nullopt, partner_seed);
    return hyp_identity_suite(coeffs, tol, partner);
}

}  // namespace symtrig
