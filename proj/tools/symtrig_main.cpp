// symtrig: generate, simulate, and verify discrete trigonometric and
// hyperbolic symplectic systems.
//
// Exit codes: 0 all checks pass, 1 an identity failed, 2 the input failed
// validation, 3 usage or I/O error.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symtrig/generators.hpp"
#include "symtrig/hyperbolic.hpp"
#include "symtrig/io.hpp"
#include "symtrig/matrix.hpp"
#include "symtrig/report.hpp"
#include "symtrig/symplectic.hpp"
#include "symtrig/trig.hpp"

namespace {

using namespace symtrig;

void print_report_summary(const ResidualReport& report, std::FILE* stream) {
    for (const IdentityResult& e : report.entries()) {
        std::fprintf(stream, "  %-16s %s  max residual %.3e  (tol %.3e, evaluated %d)\n",
                     e.id.c_str(), e.pass ? "pass" : "FAIL", e.max_residual, e.tolerance,
                     e.evaluated_count);
    }
}

ResidualReport symplecticity_report(const std::vector<BlockSymplectic>& blocks, std::size_t n,
                                    double tol) {
    IdentityCheck eq2("eq2", tol);
    IdentityCheck eq3("eq3", tol);
    const Matrix id = Matrix::identity(n);
    const Matrix zero = Matrix::zero(n, n);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const Matrix& a = blocks[k].a();
        const Matrix& b = blocks[k].b();
        const Matrix& c = blocks[k].c();
        const Matrix& d = blocks[k].d();
        const int ik = static_cast<int>(k);
        eq2.accumulate(ik, a.transposed() * d - c.transposed() * b, id);
        eq2.accumulate(ik, d.transposed() * a - b.transposed() * c, id);
        eq2.accumulate(ik, a * d.transposed() - b * c.transposed(), id);
        eq2.accumulate(ik, d * a.transposed() - c * b.transposed(), id);
        eq3.accumulate(ik, a.transposed() * c - c.transposed() * a, zero);
        eq3.accumulate(ik, b.transposed() * d - d.transposed() * b, zero);
        eq3.accumulate(ik, a * b.transposed() - b * a.transposed(), zero);
        eq3.accumulate(ik, c * d.transposed() - d * c.transposed(), zero);
    }
    ResidualReport report;
    report.add(eq2.finish());
    report.add(eq3.finish());
    return report;
}

ResidualReport validate_for_kind(const CoefficientFile& file) {
    switch (file.kind) {
        case SystemKind::Trig:
            return validate_trig(to_trig(file));
        case SystemKind::Hyperbolic:
            return validate_hyp(to_hyp(file));
        case SystemKind::GeneralSymplectic:
            break;
    }
    return symplecticity_report(to_blocks(file), file.n, kDefaultValidationTol);
}

/// Normalized-pair identities (eq4..eq5) and block recovery (eq6..eq9) for
/// the solution pair Z = (I, 0)-start, Z~ = principal at 0; their Wronskian
/// at 0 is exactly I. Hyperbolic solutions grow, so those residuals are
/// scaled by the product of the two solutions' magnitudes.
void append_pair_checks(ResidualReport& report, const std::vector<BlockSymplectic>& blocks,
                        double tol, bool scaled) {
    const std::size_t n = blocks.front().dim();
    const Matrix id = Matrix::identity(n);
    const Trajectory z1 = propagate(blocks, id, Matrix::zero(n, n));
    const Trajectory z2 = principal_solution(blocks, 0);

    std::vector<double> magnitude(z1.x.size(), 1.0);
    if (scaled) {
        for (std::size_t k = 0; k < z1.x.size(); ++k) {
            magnitude[k] = (frobenius_norm(z1.x[k]) + frobenius_norm(z1.u[k])) *
                           (frobenius_norm(z2.x[k]) + frobenius_norm(z2.u[k]));
        }
    }

    IdentityCheck eq4("eq4", tol);
    IdentityCheck eq5("eq5", tol);
    for (std::size_t k = 0; k < z1.x.size(); ++k) {
        const Matrix xt = z1.x[k].transposed();
        const Matrix ut = z1.u[k].transposed();
        const int ik = static_cast<int>(k);
        eq4.accumulate_scalar(ik, residual_norm(xt * z2.u[k] - ut * z2.x[k], id), 0.0,
                              magnitude[k]);
        eq4.accumulate_scalar(
            ik,
            residual_norm(z1.x[k] * z2.u[k].transposed() - z2.x[k] * z1.u[k].transposed(), id),
            0.0, magnitude[k]);
        eq5.accumulate_scalar(
            ik, frobenius_norm(z1.x[k] * z2.x[k].transposed() - z2.x[k] * z1.x[k].transposed()),
            0.0, magnitude[k]);
        eq5.accumulate_scalar(
            ik, frobenius_norm(z1.u[k] * z2.u[k].transposed() - z2.u[k] * z1.u[k].transposed()),
            0.0, magnitude[k]);
    }
    report.add(eq4.finish());
    report.add(eq5.finish());

    IdentityCheck eq6("eq6", tol);
    IdentityCheck eq7("eq7", tol);
    IdentityCheck eq8("eq8", tol);
    IdentityCheck eq9("eq9", tol);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const BlockSymplectic rec = recover_blocks(z1, z2, k);
        const double scale = std::max(magnitude[k], magnitude[k + 1]);
        const int ik = static_cast<int>(k);
        eq6.accumulate_scalar(ik, residual_norm(rec.a(), blocks[k].a()), 0.0, scale);
        eq7.accumulate_scalar(ik, residual_norm(rec.b(), blocks[k].b()), 0.0, scale);
        eq8.accumulate_scalar(ik, residual_norm(rec.c(), blocks[k].c()), 0.0, scale);
        eq9.accumulate_scalar(ik, residual_norm(rec.d(), blocks[k].d()), 0.0, scale);
    }
    report.add(eq6.finish());
    report.add(eq7.finish());
    report.add(eq8.finish());
    report.add(eq9.finish());
}

struct GenerateArgs {
    std::string kind;
    std::size_t n = 0;
    std::size_t horizon = 0;
    double amplitude = 1.0;
    std::uint64_t seed = 1;
    std::string out;
};

int run_generate(const GenerateArgs& args) {
    CoefficientFile file;
    if (args.kind == "trig") {
        file = from_trig(gen_trig(args.n, args.horizon, args.amplitude, args.seed));
    } else {
        file = from_hyp(gen_hyp(args.n, args.horizon, args.amplitude, std::nullopt, args.seed));
    }
    file.seed = args.seed;
    file.amplitude = args.amplitude;
    save_coefficient_file(file, args.out);
    std::printf("wrote %s system n=%zu N=%zu to %s\n", args.kind.c_str(), args.n, args.horizon,
                args.out.c_str());
    return 0;
}

struct SimulateArgs {
    std::string in;
    std::size_t k0 = 0;
    std::string out;
};

int run_simulate(const SimulateArgs& args) {
    const CoefficientFile file = load_coefficient_file(args.in);
    if (args.k0 > file.horizon + 1) {
        std::fprintf(stderr, "error: --k0 %zu out of range 0..%zu\n", args.k0, file.horizon + 1);
        return 3;
    }
    const ResidualReport validation = validate_for_kind(file);
    if (!validation.all_pass()) {
        std::fprintf(stderr, "error: %s failed %s validation\n", args.in.c_str(),
                     kind_name(file.kind).c_str());
        print_report_summary(validation, stderr);
        return 2;
    }
    const Trajectory z = principal_solution(to_blocks(file), args.k0);
    save_trajectory_csv(z, args.out);
    std::printf("wrote trajectory (%zu steps, n=%zu) to %s\n", z.x.size(), file.n,
                args.out.c_str());
    return 0;
}

struct VerifyArgs {
    std::string in;
    std::optional<double> tol;
    std::uint64_t partner_seed = kDefaultPartnerSeed;
    std::string out;
};

int run_verify(const VerifyArgs& args) {
    const CoefficientFile file = load_coefficient_file(args.in);
    const bool hyperbolic = file.kind == SystemKind::Hyperbolic;
    const double tol = args.tol.value_or(hyperbolic ? 1e-8 : 1e-10);

    ReportContext ctx;
    ctx.kind = file.kind;
    ctx.n = file.n;
    ctx.horizon = file.horizon;
    ctx.tol = tol;

    const ResidualReport validation = validate_for_kind(file);
    if (!validation.all_pass()) {
        ReportContext vctx = ctx;
        vctx.tol = kDefaultValidationTol;
        save_report_json(validation, vctx, args.out);
        std::fprintf(stderr, "error: %s failed %s validation; report written to %s\n",
                     args.in.c_str(), kind_name(file.kind).c_str(), args.out.c_str());
        print_report_summary(validation, stderr);
        return 2;
    }

    ResidualReport report;
    if (file.kind == SystemKind::Trig) {
        ctx.partner_seed = args.partner_seed;
        report = trig_identity_suite(to_trig(file), tol, args.partner_seed);
    } else if (file.kind == SystemKind::Hyperbolic) {
        ctx.partner_seed = args.partner_seed;
        report = hyp_identity_suite(to_hyp(file), tol, args.partner_seed);
    } else {
        report = symplecticity_report(to_blocks(file), file.n, tol);
    }

    append_pair_checks(report, to_blocks(file), tol, hyperbolic);
    save_report_json(report, ctx, args.out);

    const bool ok = report.all_pass();
    std::printf("%s: %s (worst residual %.3e, report in %s)\n", args.in.c_str(),
                ok ? "all identities pass" : "identity FAILURES", report.worst_residual(),
                args.out.c_str());
    if (!ok) {
        print_report_summary(report, stderr);
    }
    return ok ? 0 : 1;
}

struct ScalarDemoArgs {
    std::string kind;
    std::size_t steps = 0;
    double angle = 0.0;
    std::string out;
};

int run_scalar_demo(const ScalarDemoArgs& args) {
    if (!std::isfinite(args.angle)) {
        std::fprintf(stderr, "error: --angle must be finite\n");
        return 3;
    }
    std::vector<ScalarDemoRow> rows;
    rows.reserve(args.steps + 1);
    if (args.kind == "trig") {
        TrigCoefficients coeffs;
        const Matrix p(1, 1, {std::cos(args.angle)});
        const Matrix q(1, 1, {std::sin(args.angle)});
        coeffs.p.assign(args.steps, p);
        coeffs.q.assign(args.steps, q);
        const TrigFunctions f = trig_functions(coeffs, 0);
        for (std::size_t k = 0; k <= args.steps; ++k) {
            const double rec = f.sin[k](0, 0);
            const double ref = std::sin(static_cast<double>(k) * args.angle);
            rows.push_back({k, rec, ref, std::fabs(rec - ref)});
        }
    } else {
        HypCoefficients coeffs;
        const Matrix p(1, 1, {std::cosh(args.angle)});
        const Matrix q(1, 1, {std::sinh(args.angle)});
        coeffs.p.assign(args.steps, p);
        coeffs.q.assign(args.steps, q);
        const HypFunctions f = hyp_functions(coeffs, 0);
        for (std::size_t k = 0; k <= args.steps; ++k) {
            const double rec = f.sinh[k](0, 0);
            const double ref = std::sinh(static_cast<double>(k) * args.angle);
            rows.push_back({k, rec, ref, std::fabs(rec - ref)});
        }
    }
    double max_err = 0.0;
    for (const ScalarDemoRow& row : rows) {
        max_err = std::max(max_err, row.abs_err);
    }
    save_scalar_demo_csv(rows, args.out);
    std::printf("max abs_err %.17g over %zu steps (%s)\n", max_err, args.steps, args.out.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete trigonometric / hyperbolic symplectic system toolkit"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    CLI::App* gen = app.add_subcommand("generate", "generate a random coefficient file");
    gen->add_option("--kind", gen_args.kind, "system kind")
        ->required()
        ->check(CLI::IsMember({"trig", "hyperbolic"}));
    gen->add_option("--n", gen_args.n, "block dimension")->required()->check(CLI::PositiveNumber);
    gen->add_option("--N", gen_args.horizon, "horizon (steps are indexed 0..N)")->required();
    gen->add_option("--amplitude", gen_args.amplitude, "coefficient angle bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen->add_option("--seed", gen_args.seed, "RNG seed")->capture_default_str();
    gen->add_option("--out", gen_args.out, "output coefficient file (JSON)")->required();

    SimulateArgs sim_args;
    CLI::App* sim = app.add_subcommand("simulate", "propagate the principal solution");
    sim->add_option("--in", sim_args.in, "coefficient file")->required();
    sim->add_option("--k0", sim_args.k0, "base point of the principal solution")
        ->capture_default_str();
    sim->add_option("--out", sim_args.out, "output trajectory (CSV)")->required();

    VerifyArgs verify_args;
    double verify_tol = 0.0;
    CLI::App* ver = app.add_subcommand("verify", "run the identity suite and write a report");
    ver->add_option("--in", verify_args.in, "coefficient file")->required();
    CLI::Option* tol_opt =
        ver->add_option("--tol", verify_tol,
                        "residual tolerance (default 1e-10 absolute; hyperbolic 1e-8 relative)");
    ver->add_option("--partner-seed", verify_args.partner_seed,
                    "seed of the generated partner system for two-system identities")
        ->capture_default_str();
    ver->add_option("--out", verify_args.out, "output report (JSON)")->required();

    ScalarDemoArgs demo_args;
    CLI::App* demo =
        app.add_subcommand("scalar-demo", "n=1 constant-angle recurrence vs closed form");
    demo->add_option("--kind", demo_args.kind, "system kind")
        ->required()
        ->check(CLI::IsMember({"trig", "hyperbolic"}));
    demo->add_option("--steps", demo_args.steps, "number of recurrence steps")
        ->required()
        ->check(CLI::PositiveNumber);
    demo->add_option("--angle", demo_args.angle, "step angle (trig) or step rate a (hyperbolic)")
        ->required();
    demo->add_option("--out", demo_args.out, "output comparison table (CSV)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }
    if (tol_opt->count() > 0) {
        verify_args.tol = verify_tol;
    }

    try {
        if (gen->parsed()) {
            return run_generate(gen_args);
        }
        if (sim->parsed()) {
            return run_simulate(sim_args);
        }
        if (ver->parsed()) {
            return run_verify(verify_args);
        }
        if (demo->parsed()) {
            return run_scalar_demo(demo_args);
        }
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {  // DomainError, ShapeError
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 3;
}
