#include "symtrig/trig.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "suite_util.hpp"
#include "symtrig/generators.hpp"

namespace symtrig {

namespace {

void require_coeffs(const TrigCoefficients& c, const char* who) {
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

TrigFunctions functions_from_blocks(const std::vector<BlockSymplectic>& blocks, std::size_t k0) {
    Trajectory z = principal_solution(blocks, k0);
    TrigFunctions f;
    f.base_point = k0;
    f.sin = std::move(z.x);
    f.cos = std::move(z.u);
    return f;
}

void require_index(const TrigFunctions& f, std::size_t k, const char* who) {
    if (k >= f.length()) {
        throw DomainError(std::string(who) + ": index " + std::to_string(k) +
                          " beyond trajectory of length " + std::to_string(f.length()));
    }
}

void require_same_grid(const TrigCoefficients& c1, const TrigCoefficients& c2, const char* who) {
    if (c1.dim() != c2.dim() || c1.horizon() != c2.horizon()) {
        throw ShapeError(std::string(who) + ": systems must share dimension and horizon");
    }
}

}  // namespace

ResidualReport validate_trig(const TrigCoefficients& coeffs, double tol) {
    require_coeffs(coeffs, "validate_trig");
    const std::size_t n = coeffs.dim();
    const Matrix id = Matrix::identity(n);
    const Matrix zero = Matrix::zero(n, n);

    IdentityCheck eq10("eq10", tol);
    IdentityCheck eq11("eq11", tol);
    IdentityCheck symplectic("symplectic", tol);
    IdentityCheck self_reciprocal("self_reciprocal", tol);

    for (std::size_t k = 0; k <= coeffs.horizon(); ++k) {
        const Matrix& p = coeffs.p[k];
        const Matrix& q = coeffs.q[k];
        const Matrix pt = p.transposed();
        const Matrix qt = q.transposed();
        const int ik = static_cast<int>(k);

        eq10.accumulate(ik, pt * p + qt * q, id);
        eq10.accumulate(ik, p * pt + q * qt, id);
        eq11.accumulate(ik, pt * q - qt * p, zero);
        eq11.accumulate(ik, p * qt - q * pt, zero);

        const BlockSymplectic s = BlockSymplectic::unchecked(p, q, -q, p);
        symplectic.accumulate_scalar(ik, symplecticity_residual(s), 0.0);
        // J^T S J = [[D, -C], [-B, A]]; equality to S reduces to D = A and
        // C = -B, which the trig block layout satisfies identically, so the
        // residual is evaluated on the assembled blocks.
        self_reciprocal.accumulate(ik, s.d(), s.a());
        self_reciprocal.accumulate(ik, s.c(), -s.b());
    }

    ResidualReport report;
    report.add(eq10.finish());
    report.add(eq11.finish());
    report.add(symplectic.finish());
    report.add(self_reciprocal.finish());
    return report;
}

std::vector<BlockSymplectic> assemble_trig(const TrigCoefficients& coeffs) {
    require_coeffs(coeffs, "assemble_trig");
    std::vector<BlockSymplectic> blocks;
    blocks.reserve(coeffs.p.size());
    for (std::size_t k = 0; k < coeffs.p.size(); ++k) {
        blocks.push_back(BlockSymplectic::unchecked(coeffs.p[k], coeffs.q[k], -coeffs.q[k],
                                                    coeffs.p[k]));
    }
    return blocks;
}

TrigFunctions trig_functions(const TrigCoefficients& coeffs, std::size_t k0) {
    const ResidualReport validation = validate_trig(coeffs);
    if (!validation.all_pass()) {
        throw DomainError("trig_functions: coefficients fail validation, worst residual " +
                          std::to_string(validation.worst_residual()));
    }
    if (k0 > coeffs.horizon() + 1) {
        throw DomainError("trig_functions: base point beyond trajectory");
    }
    return functions_from_blocks(assemble_trig(coeffs), k0);
}

Trajectory general_solution(const TrigCoefficients& coeffs, const Matrix& x0, const Matrix& u0) {
    const TrigFunctions f = trig_functions(coeffs, 0);
    const std::size_t n = f.dim();
    if (x0.rows() != n || u0.rows() != n || x0.cols() != u0.cols() || x0.cols() == 0) {
        throw ShapeError("general_solution: initial values do not match the system dimension");
    }
    Trajectory z;
    z.x.reserve(f.length());
    z.u.reserve(f.length());
    for (std::size_t k = 0; k < f.length(); ++k) {
        z.x.push_back(f.cos[k] * x0 + f.sin[k] * u0);
        z.u.push_back(-(f.sin[k] * x0) + f.cos[k] * u0);
    }
    return z;
}

Trajectory rotate_solution(const Trajectory& z) {
    Trajectory r;
    r.x = z.u;
    r.u.reserve(z.x.size());
    for (const Matrix& x : z.x) {
        r.u.push_back(-x);
    }
    return r;
}

TrigFunctions shifted_functions(const TrigFunctions& funcs, std::size_t l) {
    require_index(funcs, l, "shifted_functions");
    const Matrix clt = funcs.cos[l].transposed();
    const Matrix slt = funcs.sin[l].transposed();
    TrigFunctions out;
    out.base_point = l;
    out.sin.reserve(funcs.length());
    out.cos.reserve(funcs.length());
    for (std::size_t k = 0; k < funcs.length(); ++k) {
        out.sin.push_back(funcs.sin[k] * clt - funcs.cos[k] * slt);
        out.cos.push_back(funcs.cos[k] * clt + funcs.sin[k] * slt);
    }
    return out;
}

ParityResiduals parity_check(const TrigFunctions& funcs, std::size_t k, std::size_t l) {
    require_index(funcs, k, "parity_check");
    require_index(funcs, l, "parity_check");
    const auto shifted_sin = [&funcs](std::size_t a, std::size_t b) {
        return funcs.sin[a] * funcs.cos[b].transposed() - funcs.cos[a] * funcs.sin[b].transposed();
    };
    const auto shifted_cos = [&funcs](std::size_t a, std::size_t b) {
        return funcs.cos[a] * funcs.cos[b].transposed() + funcs.sin[a] * funcs.sin[b].transposed();
    };
    ParityResiduals r;
    r.sin_residual = frobenius_norm(shifted_sin(k, l) + shifted_sin(l, k).transposed());
    r.cos_residual = residual_norm(shifted_cos(k, l), shifted_cos(l, k).transposed());
    return r;
}

TrigInverses closed_form_inverses(const TrigFunctions& funcs, std::size_t k, double pivot_tol) {
    require_index(funcs, k, "closed_form_inverses");
    const Matrix ct = funcs.cos[k].transposed();
    const Matrix st = funcs.sin[k].transposed();
    TrigInverses out;
    if (auto ct_inv = try_invert(ct, pivot_tol)) {
        out.cos_inverse = ct + st * (*ct_inv) * st;
    }
    if (auto st_inv = try_invert(st, pivot_tol)) {
        out.sin_inverse = st + ct * (*st_inv) * ct;
    }
    return out;
}

PairCombination combine_pair(const TrigFunctions& f1, const TrigFunctions& f2) {
    if (f1.length() != f2.length() || f1.dim() != f2.dim()) {
        throw ShapeError("combine_pair: function families must share shape");
    }
    PairCombination c;
    c.plus_sin.reserve(f1.length());
    c.plus_cos.reserve(f1.length());
    c.minus_sin.reserve(f1.length());
    c.minus_cos.reserve(f1.length());
    for (std::size_t k = 0; k < f1.length(); ++k) {
        const Matrix sc = f1.sin[k] * f2.cos[k].transposed();
        const Matrix cs = f1.cos[k] * f2.sin[k].transposed();
        const Matrix cc = f1.cos[k] * f2.cos[k].transposed();
        const Matrix ss = f1.sin[k] * f2.sin[k].transposed();
        c.plus_sin.push_back(sc + cs);
        c.plus_cos.push_back(cc - ss);
        c.minus_sin.push_back(sc - cs);
        c.minus_cos.push_back(cc + ss);
    }
    return c;
}

Trajectory combination_system_step(const TrigCoefficients& c1, const TrigCoefficients& c2,
                                   CombinationSign sign) {
    require_same_grid(c1, c2, "combination_system_step");
    const ResidualReport v1 = validate_trig(c1);
    const ResidualReport v2 = validate_trig(c2);
    if (!v1.all_pass() || !v2.all_pass()) {
        throw DomainError("combination_system_step: coefficients fail validation");
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
            const Matrix s = u * p2t - x * q2t;
            z.x.push_back(p1 * r + q1 * s);
            z.u.push_back(p1 * s - q1 * r);
        } else {
            const Matrix r = x * p2t - u * q2t;
            const Matrix s = x * q2t + u * p2t;
            z.x.push_back(p1 * r + q1 * s);
            z.u.push_back(p1 * s - q1 * r);
        }
    }
    return z;
}

Trajectory double_angle(const TrigFunctions& funcs) {
    Trajectory z;
    z.x.reserve(funcs.length());
    z.u.reserve(funcs.length());
    for (std::size_t k = 0; k < funcs.length(); ++k) {
        const Matrix& s = funcs.sin[k];
        const Matrix& c = funcs.cos[k];
        z.x.push_back(2.0 * (s * c.transposed()));
        z.u.push_back(c * c.transposed() - s * s.transposed());
    }
    return z;
}

Matrix tangent(const TrigFunctions& funcs, std::size_t k, double pivot_tol) {
    require_index(funcs, k, "tangent");
    auto inv = try_invert(funcs.cos[k], pivot_tol);
    if (!inv) {
        throw UndefinedAtIndexError("tangent undefined at index " + std::to_string(k), k);
    }
    return (*inv) * funcs.sin[k];
}

Matrix cotangent(const TrigFunctions& funcs, std::size_t k, double pivot_tol) {
    require_index(funcs, k, "cotangent");
    auto inv = try_invert(funcs.sin[k], pivot_tol);
    if (!inv) {
        throw UndefinedAtIndexError("cotangent undefined at index " + std::to_string(k), k);
    }
    return (*inv) * funcs.cos[k];
}

ResidualReport trig_identity_suite(const TrigCoefficients& coeffs, double tol,
                                   const TrigCoefficients& partner) {
    using detail::OptMatrix;
    using detail::kSuitePivotTol;
    require_same_grid(coeffs, partner, "trig_identity_suite");
    const TrigFunctions f1 = trig_functions(coeffs, 0);
    const TrigFunctions f2 = trig_functions(partner, 0);
    const std::size_t n = f1.dim();
    const std::size_t len = f1.length();
    const Matrix id = Matrix::identity(n);
    const Matrix zero = Matrix::zero(n, n);
    const std::vector<BlockSymplectic> blocks = assemble_trig(coeffs);

    ResidualReport report;

    {
        IdentityCheck eq13("eq13", tol);
        IdentityCheck eq14("eq14", tol);
        for (std::size_t k = 0; k < len; ++k) {
            const Matrix& s = f1.sin[k];
            const Matrix& c = f1.cos[k];
            const Matrix st = s.transposed();
            const Matrix ct = c.transposed();
            const int ik = static_cast<int>(k);
            eq13.accumulate(ik, ct * c + st * s, id);
            eq13.accumulate(ik, c * ct + s * st, id);
            eq14.accumulate(ik, ct * s - st * c, zero);
            eq14.accumulate(ik, c * st - s * ct, zero);
        }
        report.add(eq13.finish());
        report.add(eq14.finish());
    }

    {
        IdentityCheck eq15("eq15", tol);
        IdentityCheck eq16("eq16", tol);
        for (std::size_t k = 0; k + 1 < len; ++k) {
            const Matrix st = f1.sin[k].transposed();
            const Matrix ct = f1.cos[k].transposed();
            const int ik = static_cast<int>(k);
            eq15.accumulate(ik, f1.cos[k + 1] * ct + f1.sin[k + 1] * st, coeffs.p[k]);
            eq16.accumulate(ik, f1.sin[k + 1] * ct - f1.cos[k + 1] * st, coeffs.q[k]);
        }
        report.add(eq15.finish());
        report.add(eq16.finish());
    }

    {
        IdentityCheck eq17("eq17", tol);
        for (std::size_t k = 0; k < len; ++k) {
            const double c = frobenius_norm(f1.cos[k]);
            const double s = frobenius_norm(f1.sin[k]);
            eq17.accumulate_scalar(static_cast<int>(k), c * c + s * s,
                                   static_cast<double>(n));
        }
        report.add(eq17.finish());
    }

    {
        // Shifted functions against an independently propagated principal
        // solution at each base point l, then reconstruction and parity.
        const std::vector<std::size_t> pts = detail::identity_base_points(len);
        std::vector<TrigFunctions> at;
        at.reserve(pts.size());
        for (std::size_t l : pts) {
            at.push_back(functions_from_blocks(blocks, l));
        }
        IdentityCheck eq18("eq18", tol);
        IdentityCheck eq19("eq19", tol);
        IdentityCheck eq20("eq20", tol);
        IdentityCheck eq21("eq21", tol);
        IdentityCheck eq22("eq22", tol);
        for (std::size_t li = 0; li < pts.size(); ++li) {
            const std::size_t l = pts[li];
            const TrigFunctions& prop = at[li];
            const TrigFunctions formula = shifted_functions(f1, l);
            for (std::size_t k = 0; k < len; ++k) {
                const int ik = static_cast<int>(k);
                eq18.accumulate(ik, prop.sin[k], formula.sin[k]);
                eq19.accumulate(ik, prop.cos[k], formula.cos[k]);
                eq20.accumulate(ik, f1.sin[k], prop.sin[k] * f1.cos[l] + prop.cos[k] * f1.sin[l]);
                eq21.accumulate(ik, f1.cos[k], prop.cos[k] * f1.cos[l] - prop.sin[k] * f1.sin[l]);
            }
            for (std::size_t ki = 0; ki < pts.size(); ++ki) {
                const std::size_t k = pts[ki];
                const int ik = static_cast<int>(k);
                eq22.accumulate(ik, at[li].sin[k], -at[ki].sin[l].transposed());
                eq22.accumulate(ik, at[li].cos[k], at[ki].cos[l].transposed());
            }
        }
        report.add(eq18.finish());
        report.add(eq19.finish());
        report.add(eq20.finish());
        report.add(eq21.finish());
        report.add(eq22.finish());
    }

    const PairCombination combo = combine_pair(f1, f2);

    {
        IdentityCheck eq28("eq28", tol);
        IdentityCheck eq29("eq29", tol);
        IdentityCheck eq30("eq30", tol);
        IdentityCheck eq31("eq31", tol);
        IdentityCheck eq32("eq32", tol);
        IdentityCheck eq33("eq33", tol);
        IdentityCheck eq34("eq34", tol);
        for (std::size_t k = 0; k < len; ++k) {
            const int ik = static_cast<int>(k);
            const Matrix& sp = combo.plus_sin[k];
            const Matrix& cp = combo.plus_cos[k];
            const Matrix& sm = combo.minus_sin[k];
            const Matrix& cm = combo.minus_cos[k];
            eq28.accumulate(ik, cp.transposed() * cp + sp.transposed() * sp, id);
            eq28.accumulate(ik, cp * cp.transposed() + sp * sp.transposed(), id);
            eq29.accumulate(ik, cp.transposed() * sp - sp.transposed() * cp, zero);
            eq29.accumulate(ik, cp * sp.transposed() - sp * cp.transposed(), zero);
            eq30.accumulate(ik, cm.transposed() * cm + sm.transposed() * sm, id);
            eq30.accumulate(ik, cm * cm.transposed() + sm * sm.transposed(), id);
            eq31.accumulate(ik, cm.transposed() * sm - sm.transposed() * cm, zero);
            eq31.accumulate(ik, cm * sm.transposed() - sm * cm.transposed(), zero);
            eq32.accumulate(ik, f1.sin[k] * f2.sin[k].transposed(), 0.5 * (cm - cp));
            eq33.accumulate(ik, f1.cos[k] * f2.cos[k].transposed(), 0.5 * (cm + cp));
            eq34.accumulate(ik, f1.sin[k] * f2.cos[k].transposed(), 0.5 * (sm + sp));
        }
        report.add(eq28.finish());
        report.add(eq29.finish());
        report.add(eq30.finish());
        report.add(eq31.finish());
        report.add(eq32.finish());
        report.add(eq33.finish());
        report.add(eq34.finish());
    }

    const std::vector<OptMatrix> cos1_inv = detail::inverse_cache(f1.cos);
    const std::vector<OptMatrix> sin1_inv = detail::inverse_cache(f1.sin);
    const std::vector<OptMatrix> cos2_inv = detail::inverse_cache(f2.cos);
    const std::vector<OptMatrix> sin2_inv = detail::inverse_cache(f2.sin);
    const std::vector<OptMatrix> tan1 = detail::ratio_cache(cos1_inv, f1.sin);
    const std::vector<OptMatrix> cot1 = detail::ratio_cache(sin1_inv, f1.cos);
    const std::vector<OptMatrix> tan2 = detail::ratio_cache(cos2_inv, f2.sin);
    const std::vector<OptMatrix> cot2 = detail::ratio_cache(sin2_inv, f2.cos);

    {
        IdentityCheck eq35("eq35", tol);
        IdentityCheck eq36("eq36", tol);
        IdentityCheck eq38("eq38", tol);
        IdentityCheck eq39("eq39", tol);
        for (std::size_t k = 0; k < len; ++k) {
            const int ik = static_cast<int>(k);
            if (tan1[k]) {
                const Matrix& t = *tan1[k];
                const Matrix& ci = *cos1_inv[k];
                eq35.accumulate(ik, t, t.transposed());
                eq36.accumulate(ik, ci * ci.transposed() - t * t, id);
            } else {
                eq35.skip(ik);
                eq36.skip(ik);
            }
            if (cot1[k]) {
                const Matrix& ct = *cot1[k];
                const Matrix& si = *sin1_inv[k];
                eq38.accumulate(ik, ct, ct.transposed());
                eq39.accumulate(ik, si * si.transposed() - ct * ct, id);
            } else {
                eq38.skip(ik);
                eq39.skip(ik);
            }
        }
        IdentityCheck eq37("eq37", tol);
        IdentityCheck eq40("eq40", tol);
        for (std::size_t k = 0; k + 1 < len; ++k) {
            const int ik = static_cast<int>(k);
            if (tan1[k] && tan1[k + 1]) {
                eq37.accumulate(ik, *tan1[k + 1] - *tan1[k],
                                (*cos1_inv[k + 1]) * coeffs.q[k] * cos1_inv[k]->transposed());
            } else {
                eq37.skip(ik);
            }
            if (cot1[k] && cot1[k + 1]) {
                eq40.accumulate(ik, *cot1[k + 1] - *cot1[k],
                                -((*sin1_inv[k + 1]) * coeffs.q[k] * sin1_inv[k]->transposed()));
            } else {
                eq40.skip(ik);
            }
        }
        report.add(eq35.finish());
        report.add(eq36.finish());
        report.add(eq37.finish());
        report.add(eq38.finish());
        report.add(eq39.finish());
        report.add(eq40.finish());
    }

    {
        const std::vector<OptMatrix> cosp_inv = detail::inverse_cache(combo.plus_cos);
        const std::vector<OptMatrix> cosm_inv = detail::inverse_cache(combo.minus_cos);
        const std::vector<OptMatrix> sinp_inv = detail::inverse_cache(combo.plus_sin);
        const std::vector<OptMatrix> sinm_inv = detail::inverse_cache(combo.minus_sin);

        IdentityCheck eq41("eq41", tol);
        IdentityCheck eq42("eq42", tol);
        IdentityCheck eq43("eq43", tol);
        IdentityCheck eq44("eq44", tol);
        IdentityCheck eq45("eq45", tol);
        IdentityCheck eq46("eq46", tol);
        IdentityCheck eq47("eq47", tol);
        IdentityCheck eq48("eq48", tol);
        IdentityCheck eq49("eq49", tol);
        IdentityCheck eq50("eq50", tol);
        IdentityCheck eq51("eq51", tol);
        IdentityCheck eq52("eq52", tol);

        for (std::size_t k = 0; k < len; ++k) {
            const int ik = static_cast<int>(k);
            const bool tans = tan1[k] && tan2[k];
            const bool cots = cot1[k] && cot2[k];

            if (tans && cots) {
                eq41.accumulate(ik, *tan1[k] + *tan2[k],
                                (*tan1[k]) * (*cot1[k] + *cot2[k]) * (*tan2[k]));
                eq42.accumulate(ik, *tan1[k] - *tan2[k],
                                (*tan1[k]) * (*cot2[k] - *cot1[k]) * (*tan2[k]));
            } else {
                eq41.skip(ik);
                eq42.skip(ik);
            }

            if (tans) {
                const Matrix rhs_base = (*cos2_inv[k]);
                eq43.accumulate(ik, *tan1[k] + *tan2[k],
                                rhs_base * combo.plus_sin[k].transposed() *
                                    cos1_inv[k]->transposed());
                eq44.accumulate(ik, *tan1[k] - *tan2[k],
                                rhs_base * combo.minus_sin[k].transposed() *
                                    cos1_inv[k]->transposed());
            } else {
                eq43.skip(ik);
                eq44.skip(ik);
            }

            if (tans && cosp_inv[k]) {
                const Matrix m = id - (*tan1[k]) * (*tan2[k]);
                if (auto m_inv = detail::capped_invert(m)) {
                    const Matrix tan_plus = (*cosp_inv[k]) * combo.plus_sin[k];
                    eq45.accumulate(ik, tan_plus,
                                    cos2_inv[k]->transposed() * (*m_inv) *
                                        (*tan1[k] + *tan2[k]) * f2.cos[k].transposed());
                } else {
                    eq45.skip(ik);
                }
            } else {
                eq45.skip(ik);
            }

            if (tans && cosm_inv[k]) {
                const Matrix m = id + (*tan1[k]) * (*tan2[k]);
                if (auto m_inv = detail::capped_invert(m)) {
                    const Matrix tan_minus = (*cosm_inv[k]) * combo.minus_sin[k];
                    eq46.accumulate(ik, tan_minus,
                                    cos2_inv[k]->transposed() * (*m_inv) *
                                        (*tan1[k] - *tan2[k]) * f2.cos[k].transposed());
                } else {
                    eq46.skip(ik);
                }
            } else {
                eq46.skip(ik);
            }

            if (tans && cots) {
                eq47.accumulate(ik, *cot1[k] + *cot2[k],
                                (*cot1[k]) * (*tan1[k] + *tan2[k]) * (*cot2[k]));
                eq48.accumulate(ik, *cot1[k] - *cot2[k],
                                (*cot1[k]) * (*tan2[k] - *tan1[k]) * (*cot2[k]));
            } else {
                eq47.skip(ik);
                eq48.skip(ik);
            }

            if (cots) {
                eq49.accumulate(ik, *cot1[k] + *cot2[k],
                                (*sin2_inv[k]) * combo.plus_sin[k].transposed() *
                                    sin1_inv[k]->transposed());
                eq50.accumulate(ik, *cot1[k] - *cot2[k],
                                -((*sin2_inv[k]) * combo.minus_sin[k].transposed() *
                                  sin1_inv[k]->transposed()));
            } else {
                eq49.skip(ik);
                eq50.skip(ik);
            }

            if (cots && sinp_inv[k]) {
                const Matrix m = *cot1[k] + *cot2[k];
                if (auto m_inv = detail::capped_invert(m)) {
                    const Matrix cot_plus = (*sinp_inv[k]) * combo.plus_cos[k];
                    eq51.accumulate(ik, cot_plus,
                                    sin2_inv[k]->transposed() * (*m_inv) *
                                        ((*cot1[k]) * (*cot2[k]) - id) * f2.sin[k].transposed());
                } else {
                    eq51.skip(ik);
                }
            } else {
                eq51.skip(ik);
            }

            if (cots && sinm_inv[k]) {
                const Matrix m = *cot2[k] - *cot1[k];
                if (auto m_inv = detail::capped_invert(m)) {
                    const Matrix cot_minus = (*sinm_inv[k]) * combo.minus_cos[k];
                    eq52.accumulate(ik, cot_minus,
                                    sin2_inv[k]->transposed() * (*m_inv) *
                                        ((*cot1[k]) * (*cot2[k]) + id) * f2.sin[k].transposed());
                } else {
                    eq52.skip(ik);
                }
            } else {
                eq52.skip(ik);
            }
        }

        report.add(eq41.finish());
        report.add(eq42.finish());
        report.add(eq43.finish());
        report.add(eq44.finish());
        report.add(eq45.finish());
        report.add(eq46.finish());
        report.add(eq47.finish());
        report.add(eq48.finish());
        report.add(eq49.finish());
        report.add(eq50.finish());
        report.add(eq51.finish());
        report.add(eq52.finish());
    }

    return report;
}

ResidualReport trig_identity_suite(const TrigCoefficients& coeffs, double tol,
                                   std::uint64_t partner_seed) {
    const TrigCoefficients partner =
        gen_trig(coeffs.dim(), coeffs.horizon(), 1.0, partner_seed);
    return trig_identity_suite(coeffs, tol, partner);
}

}  // namespace symtrig
