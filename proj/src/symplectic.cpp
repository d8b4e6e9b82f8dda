#include "symtrig/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace symtrig {

namespace {

void require_square_same(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    if (!a.square() || a.rows() == 0) {
        throw ShapeError("symplectic blocks must be square and non-empty");
    }
    const std::size_t n = a.rows();
    for (const Matrix* m : {&b, &c, &d}) {
        if (m->rows() != n || m->cols() != n) {
            throw ShapeError("symplectic blocks must share one dimension");
        }
    }
}

}  // namespace

BlockSymplectic::BlockSymplectic(Matrix a, Matrix b, Matrix c, Matrix d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    require_square_same(a_, b_, c_, d_);
}

BlockSymplectic BlockSymplectic::checked(Matrix a, Matrix b, Matrix c, Matrix d, double tol) {
    BlockSymplectic s(std::move(a), std::move(b), std::move(c), std::move(d));
    const double r = symplecticity_residual(s);
    if (r > tol) {
        throw DomainError("blocks violate symplecticity, residual " + std::to_string(r));
    }
    return s;
}

BlockSymplectic BlockSymplectic::unchecked(Matrix a, Matrix b, Matrix c, Matrix d) {
    return BlockSymplectic(std::move(a), std::move(b), std::move(c), std::move(d));
}

BlockSymplectic BlockSymplectic::inverse() const {
    return BlockSymplectic(d_.transposed(), -b_.transposed(), -c_.transposed(), a_.transposed());
}

double symplecticity_residual(const BlockSymplectic& s) {
    const Matrix& a = s.a();
    const Matrix& b = s.b();
    const Matrix& c = s.c();
    const Matrix& d = s.d();
    const Matrix at = a.transposed();
    const Matrix bt = b.transposed();
    const Matrix ct = c.transposed();
    const Matrix dt = d.transposed();
    const Matrix id = Matrix::identity(s.dim());
    const Matrix zero = Matrix::zero(s.dim(), s.dim());

    double r = 0.0;
    r = std::max(r, residual_norm(at * d - ct * b, id));
    r = std::max(r, residual_norm(dt * a - bt * c, id));
    r = std::max(r, residual_norm(a * dt - b * ct, id));
    r = std::max(r, residual_norm(d * at - c * bt, id));
    r = std::max(r, residual_norm(at * c - ct * a, zero));
    r = std::max(r, residual_norm(bt * d - dt * b, zero));
    r = std::max(r, residual_norm(a * bt - b * at, zero));
    r = std::max(r, residual_norm(c * dt - d * ct, zero));
    return r;
}

bool is_symplectic(const BlockSymplectic& s, double tol) {
    return symplecticity_residual(s) <= tol;
}

namespace {

void require_initial(const std::vector<BlockSymplectic>& steps, const Matrix& x0,
                     const Matrix& u0) {
    if (steps.empty()) {
        throw ShapeError("propagate: coefficient list is empty");
    }
    const std::size_t n = steps.front().dim();
    for (const auto& s : steps) {
        if (s.dim() != n) {
            throw ShapeError("propagate: coefficient dimensions differ");
        }
    }
    if (x0.rows() != n || u0.rows() != n || x0.cols() != u0.cols() || x0.cols() == 0) {
        throw ShapeError("propagate: initial values do not match the system dimension");
    }
}

}  // namespace

Trajectory propagate(const std::vector<BlockSymplectic>& steps, const Matrix& x0,
                     const Matrix& u0) {
    require_initial(steps, x0, u0);
    Trajectory z;
    z.x.reserve(steps.size() + 1);
    z.u.reserve(steps.size() + 1);
    z.x.push_back(x0);
    z.u.push_back(u0);
    for (const auto& s : steps) {
        const Matrix& x = z.x.back();
        const Matrix& u = z.u.back();
        z.x.push_back(s.a() * x + s.b() * u);
        z.u.push_back(s.c() * x + s.d() * u);
    }
    return z;
}

Trajectory principal_solution(const std::vector<BlockSymplectic>& steps, std::size_t k0) {
    if (steps.empty()) {
        throw ShapeError("principal_solution: coefficient list is empty");
    }
    if (k0 > steps.size() + 1) {
        throw DomainError("principal_solution: base point beyond trajectory");
    }
    const std::size_t n = steps.front().dim();
    const std::size_t len = steps.size() + 1;
    Trajectory z;
    z.x.assign(len, Matrix());
    z.u.assign(len, Matrix());
    z.x[k0] = Matrix::zero(n, n);
    z.u[k0] = Matrix::identity(n);
    for (std::size_t k = k0; k + 1 < len; ++k) {
        const BlockSymplectic& s = steps[k];
        z.x[k + 1] = s.a() * z.x[k] + s.b() * z.u[k];
        z.u[k + 1] = s.c() * z.x[k] + s.d() * z.u[k];
    }
    for (std::size_t k = k0; k-- > 0;) {
        const BlockSymplectic inv = steps[k].inverse();
        z.x[k] = inv.a() * z.x[k + 1] + inv.b() * z.u[k + 1];
        z.u[k] = inv.c() * z.x[k + 1] + inv.d() * z.u[k + 1];
    }
    return z;
}

Matrix wronskian(const Trajectory& z1, const Trajectory& z2, std::size_t k) {
    if (k >= z1.length() || k >= z2.length()) {
        throw DomainError("wronskian: index beyond trajectory");
    }
    return z1.x[k].transposed() * z2.u[k] - z1.u[k].transposed() * z2.x[k];
}

ResidualReport check_normalized_conjoined(const Trajectory& z1, const Trajectory& z2, double tol) {
    if (z1.length() != z2.length() || z1.length() == 0) {
        throw ShapeError("check_normalized_conjoined: trajectories must have equal length");
    }
    const Matrix w0 = wronskian(z1, z2, 0);
    double trace = 0.0;
    for (std::size_t i = 0; i < w0.rows(); ++i) {
        trace += w0(i, i);
    }
    const Trajectory& za = (trace < 0.0) ? z2 : z1;
    const Trajectory& zb = (trace < 0.0) ? z1 : z2;

    const std::size_t n = za.dim();
    const Matrix id = Matrix::identity(n);
    const Matrix zero = Matrix::zero(n, n);
    IdentityCheck eq4("eq4", tol);
    IdentityCheck eq5("eq5", tol);
    for (std::size_t k = 0; k < za.length(); ++k) {
        const Matrix& x = za.x[k];
        const Matrix& u = za.u[k];
        const Matrix& xt = zb.x[k];
        const Matrix& ut = zb.u[k];
        eq4.accumulate(static_cast<int>(k), x.transposed() * ut - u.transposed() * xt, id);
        eq4.accumulate(static_cast<int>(k), x * ut.transposed() - xt * u.transposed(), id);
        eq5.accumulate(static_cast<int>(k), x * xt.transposed() - xt * x.transposed(), zero);
        eq5.accumulate(static_cast<int>(k), u * ut.transposed() - ut * u.transposed(), zero);
    }
    ResidualReport report;
    report.add(eq4.finish());
    report.add(eq5.finish());
    return report;
}

BlockSymplectic recover_blocks(const Trajectory& z1, const Trajectory& z2, std::size_t k) {
    if (k + 1 >= z1.length() || k + 1 >= z2.length()) {
        throw DomainError("recover_blocks: needs indices k and k+1");
    }
    const Matrix& x = z1.x[k];
    const Matrix& u = z1.u[k];
    const Matrix& xn = z1.x[k + 1];
    const Matrix& un = z1.u[k + 1];
    const Matrix& xt = z2.x[k];
    const Matrix& ut = z2.u[k];
    const Matrix& xtn = z2.x[k + 1];
    const Matrix& utn = z2.u[k + 1];
    return BlockSymplectic::unchecked(
        xn * ut.transposed() - xtn * u.transposed(), xtn * x.transposed() - xn * xt.transposed(),
        un * ut.transposed() - utn * u.transposed(), utn * x.transposed() - un * xt.transposed());
}

}  // namespace symtrig
