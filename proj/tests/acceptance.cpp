// Acceptance gate: runs the ten release criteria end to end and prints one
// PASS/FAIL line per criterion with the measured figure and runtime. Exits
// nonzero when anything fails. No tolerances are adjusted here; the numbers
// are the contract.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "symtrig/generators.hpp"
#include "symtrig/hyperbolic.hpp"
#include "symtrig/trig.hpp"

using namespace symtrig;

namespace {

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

int g_failed = 0;

void report_line(int number, const char* title, bool pass, const std::string& detail,
                 double seconds) {
    std::printf("[%s] criterion %2d: %s (%s; %.2f s)\n", pass ? "PASS" : "FAIL", number, title,
                detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) {
        ++g_failed;
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// Aggregates suite reports across a grid of runs so later criteria can
// re-examine the same evidence.
struct SuiteStats {
    bool all_pass = true;
    double worst = 0.0;
    int runs = 0;
    std::map<std::string, long> evaluated;
    std::map<std::string, double> max_residual;
    std::map<std::string, bool> id_pass;

    void fold(const ResidualReport& r) {
        ++runs;
        if (!r.all_pass()) {
            all_pass = false;
        }
        for (const IdentityResult& e : r.entries()) {
            evaluated[e.id] += e.evaluated_count;
            double& m = max_residual[e.id];
            m = std::max(m, e.max_residual);
            auto it = id_pass.find(e.id);
            id_pass[e.id] = (it == id_pass.end() ? true : it->second) && e.pass;
            worst = std::max(worst, e.max_residual);
        }
    }

    bool every_id_evaluated() const {
        for (const auto& [id, count] : evaluated) {
            if (count <= 0) {
                return false;
            }
        }
        return true;
    }
};

SuiteStats g_trig_stats;
SuiteStats g_hyp_stats;

double hyp_amplitude_for(std::size_t horizon) {
    if (horizon <= 1) {
        return 1.0;
    }
    if (horizon <= 16) {
        return 0.25;
    }
    return 0.10;
}

// --- criterion 1 ------------------------------------------------------------

void criterion_scalar_trig() {
    Clock clock;
    const std::size_t horizon = 128;
    double worst = 0.0;
    for (Seed seed = 1; seed <= 50; ++seed) {
        Rng rng(seed);
        TrigCoefficients c;
        std::vector<double> phi;
        for (std::size_t k = 0; k <= horizon; ++k) {
            const double angle = (2.0 * rng.uniform() - 1.0) * M_PI;
            phi.push_back(angle);
            c.p.push_back(Matrix(1, 1, {std::cos(angle)}));
            c.q.push_back(Matrix(1, 1, {std::sin(angle)}));
        }
        TrigFunctions f = trig_functions(c, 0);
        // Compensated prefix sums keep the reference itself at full accuracy.
        double sum = 0.0;
        double carry = 0.0;
        for (std::size_t k = 0; k < f.length(); ++k) {
            worst = std::max(worst, std::abs(f.sin[k](0, 0) - std::sin(sum)));
            worst = std::max(worst, std::abs(f.cos[k](0, 0) - std::cos(sum)));
            if (k < phi.size()) {
                const double y = phi[k] - carry;
                const double t = sum + y;
                carry = (t - sum) - y;
                sum = t;
            }
        }
    }
    const double elapsed = clock.seconds();
    const bool pass = worst <= 1e-12 && elapsed < 1.0;
    report_line(1, "scalar trig oracle, 50 seeds, N=128", pass, "max err " + fmt(worst), elapsed);
}

// --- criterion 2 ------------------------------------------------------------

void criterion_scalar_hyp() {
    Clock clock;
    const std::size_t horizon = 40;
    HypCoefficients c;
    HypCoefficients neg;
    for (std::size_t k = 0; k <= horizon; ++k) {
        c.p.push_back(Matrix(1, 1, {1.25}));
        c.q.push_back(Matrix(1, 1, {0.75}));
        neg.p.push_back(Matrix(1, 1, {-1.25}));
        neg.q.push_back(Matrix(1, 1, {0.75}));
    }
    HypFunctions f = hyp_functions(c, 0);
    double worst = 0.0;
    for (std::size_t k = 0; k < f.length(); ++k) {
        const int ik = static_cast<int>(k);
        const double closed = std::ldexp(1.0, ik - 1) - std::ldexp(1.0, -ik - 1);
        const double err = std::abs(f.sinh[k](0, 0) - closed) / std::max(1.0, std::abs(closed));
        worst = std::max(worst, err);
    }

    // Flipping the sign of every p scales the functions by the running sign
    // product: Sinh picks up (-1)^{k+1}, Cosh picks up (-1)^k, bit for bit.
    HypFunctions g = hyp_functions(neg, 0);
    bool signs_exact = true;
    for (std::size_t k = 0; k < f.length(); ++k) {
        const double s = f.sinh[k](0, 0);
        const double ch = f.cosh[k](0, 0);
        if (g.sinh[k](0, 0) != ((k % 2 == 1) ? s : -s)) {
            signs_exact = false;
        }
        if (g.cosh[k](0, 0) != ((k % 2 == 0) ? ch : -ch)) {
            signs_exact = false;
        }
    }

    const double elapsed = clock.seconds();
    const bool pass = worst <= 1e-13 && signs_exact && elapsed < 1.0;
    report_line(2, "scalar hyperbolic oracle, ln 2 lattice, N=40", pass,
                "max rel err " + fmt(worst) + (signs_exact ? ", sign law exact" : ", SIGN LAW BROKEN"),
                elapsed);
}

// --- criteria 3 and 4 -------------------------------------------------------

void criterion_trig_suite() {
    Clock clock;
    for (std::size_t n : {1, 2, 3, 5, 8}) {
        for (std::size_t horizon : {1, 16, 128}) {
            for (Seed seed = 1; seed <= 10; ++seed) {
                const Seed sys_seed = seed * 7919 + n * 104729 + horizon;
                TrigCoefficients c = gen_trig(n, horizon, 1.0, sys_seed);
                g_trig_stats.fold(trig_identity_suite(c, 1e-9, sys_seed + 500009));
            }
        }
    }
    const double elapsed = clock.seconds();
    const bool pass =
        g_trig_stats.all_pass && g_trig_stats.every_id_evaluated() && elapsed < 30.0;
    report_line(3, "trig identity suite, n in {1,2,3,5,8}, N in {1,16,128}, 10 seeds", pass,
                "150 runs, worst residual " + fmt(g_trig_stats.worst), elapsed);
}

void criterion_hyp_suite() {
    Clock clock;
    for (std::size_t n : {1, 2, 3}) {
        for (std::size_t horizon : {1, 16, 48}) {
            const double amplitude = hyp_amplitude_for(horizon);
            for (Seed seed = 1; seed <= 10; ++seed) {
                const Seed sys_seed = seed * 6263 + n * 15485863 + horizon;
                HypCoefficients c = gen_hyp(n, horizon, amplitude, std::nullopt, sys_seed);
                g_hyp_stats.fold(hyp_identity_suite(c, 1e-8, sys_seed + 500009));
            }
        }
    }
    const double elapsed = clock.seconds();
    const bool pass = g_hyp_stats.all_pass && g_hyp_stats.every_id_evaluated() && elapsed < 30.0;
    report_line(4, "hyperbolic identity suite, n in {1,2,3}, N in {1,16,48}, 10 seeds", pass,
                "90 runs, worst relative residual " + fmt(g_hyp_stats.worst), elapsed);
}

// --- criterion 5 ------------------------------------------------------------

struct PairProbe {
    double wronskian_dev = 0.0;
    double recovery_err = 0.0;
};

PairProbe probe_pair(const std::vector<BlockSymplectic>& steps, const std::vector<Matrix>& p,
                     const std::vector<Matrix>& q, double c_sign) {
    const std::size_t n = steps.front().dim();
    Trajectory z1 = propagate(steps, Matrix::identity(n), Matrix::zero(n, n));
    Trajectory z2 = principal_solution(steps, 0);
    PairProbe out;
    const Matrix w0 = wronskian(z1, z2, 0);
    for (std::size_t k = 0; k < z1.length(); ++k) {
        out.wronskian_dev = std::max(out.wronskian_dev, residual_norm(wronskian(z1, z2, k), w0));
    }
    for (std::size_t k = 0; k < steps.size(); ++k) {
        BlockSymplectic rec = recover_blocks(z1, z2, k);
        out.recovery_err = std::max(out.recovery_err, residual_norm(rec.a(), p[k]));
        out.recovery_err = std::max(out.recovery_err, residual_norm(rec.b(), q[k]));
        out.recovery_err = std::max(out.recovery_err, residual_norm(rec.c(), c_sign * q[k]));
        out.recovery_err = std::max(out.recovery_err, residual_norm(rec.d(), p[k]));
    }
    return out;
}

void criterion_wronskian_recovery() {
    Clock clock;
    double worst_w = 0.0;
    double worst_rec = 0.0;
    for (Seed seed = 1; seed <= 20; ++seed) {
        TrigCoefficients t = gen_trig(2, 20, 1.0, seed);
        PairProbe pt = probe_pair(assemble_trig(t), t.p, t.q, -1.0);
        worst_w = std::max(worst_w, pt.wronskian_dev);
        worst_rec = std::max(worst_rec, pt.recovery_err);

        HypCoefficients h = gen_hyp(2, 24, 0.2, std::nullopt, seed);
        PairProbe ph = probe_pair(assemble_hyp(h), h.p, h.q, 1.0);
        worst_w = std::max(worst_w, ph.wronskian_dev);
        worst_rec = std::max(worst_rec, ph.recovery_err);
    }
    const double elapsed = clock.seconds();
    const bool pass = worst_w <= 1e-10 && worst_rec <= 1e-10;
    report_line(5, "wronskian constancy and block recovery, 20 systems per kind", pass,
                "max dev " + fmt(worst_w) + ", max recovery err " + fmt(worst_rec), elapsed);
}

// --- criterion 6 ------------------------------------------------------------

void criterion_frobenius() {
    Clock clock;
    const double trig_res = g_trig_stats.max_residual.count("eq17")
                                ? g_trig_stats.max_residual.at("eq17")
                                : 1.0;
    const double hyp_res = g_hyp_stats.max_residual.count("frobenius")
                               ? g_hyp_stats.max_residual.at("frobenius")
                               : 1.0;
    const long trig_eval = g_trig_stats.evaluated.count("eq17") ? g_trig_stats.evaluated.at("eq17") : 0;
    const long hyp_eval =
        g_hyp_stats.evaluated.count("frobenius") ? g_hyp_stats.evaluated.at("frobenius") : 0;
    const bool pass = trig_res <= 1e-10 && hyp_res <= 1e-8 && trig_eval > 0 && hyp_eval > 0;
    report_line(6, "frobenius identities at every index of every suite run", pass,
                "trig " + fmt(trig_res) + " abs, hyp " + fmt(hyp_res) + " rel", clock.seconds());
}

// --- criterion 7 ------------------------------------------------------------

void criterion_combination_equivalence() {
    Clock clock;
    double worst_trig = 0.0;
    double worst_hyp = 0.0;
    for (Seed seed = 1; seed <= 10; ++seed) {
        {
            TrigCoefficients c1 = gen_trig(2, 32, 1.0, seed);
            TrigCoefficients c2 = gen_trig(2, 32, 1.0, seed + 100);
            PairCombination combo =
                combine_pair(trig_functions(c1, 0), trig_functions(c2, 0));
            Trajectory plus = combination_system_step(c1, c2, CombinationSign::Plus);
            Trajectory minus = combination_system_step(c1, c2, CombinationSign::Minus);
            for (std::size_t k = 0; k < plus.length(); ++k) {
                worst_trig = std::max(worst_trig, max_abs_entry(plus.x[k] - combo.plus_sin[k]));
                worst_trig = std::max(worst_trig, max_abs_entry(plus.u[k] - combo.plus_cos[k]));
                worst_trig = std::max(worst_trig, max_abs_entry(minus.x[k] - combo.minus_sin[k]));
                worst_trig = std::max(worst_trig, max_abs_entry(minus.u[k] - combo.minus_cos[k]));
            }
        }
        {
            HypCoefficients c1 = gen_hyp(2, 32, 0.2, std::nullopt, seed);
            HypCoefficients c2 = gen_hyp(2, 32, 0.2, std::nullopt, seed + 100);
            HypPairCombination combo =
                hyp_combine_pair(hyp_functions(c1, 0), hyp_functions(c2, 0));
            Trajectory plus = hyp_combination_system_step(c1, c2, CombinationSign::Plus);
            Trajectory minus = hyp_combination_system_step(c1, c2, CombinationSign::Minus);
            for (std::size_t k = 0; k < plus.length(); ++k) {
                worst_hyp = std::max(worst_hyp, relative_residual(plus.x[k], combo.plus_sinh[k]));
                worst_hyp = std::max(worst_hyp, relative_residual(plus.u[k], combo.plus_cosh[k]));
                worst_hyp = std::max(worst_hyp, relative_residual(minus.x[k], combo.minus_sinh[k]));
                worst_hyp = std::max(worst_hyp, relative_residual(minus.u[k], combo.minus_cosh[k]));
            }
        }
    }
    const double elapsed = clock.seconds();
    const bool pass = worst_trig <= 1e-9 && worst_hyp <= 1e-8;
    report_line(7, "combination recurrence equals product construction, n=2, N=32", pass,
                "trig " + fmt(worst_trig) + " abs, hyp " + fmt(worst_hyp) + " rel", elapsed);
}

// --- criterion 8 ------------------------------------------------------------

void criterion_double_angle() {
    Clock clock;
    double worst_trig = 0.0;
    double worst_hyp = 0.0;
    for (std::size_t n : {1, 2, 3, 5, 8}) {
        for (std::size_t horizon : {1, 16, 128}) {
            for (Seed seed = 1; seed <= 10; ++seed) {
                const Seed sys_seed = seed * 7919 + n * 104729 + horizon;
                TrigFunctions f = trig_functions(gen_trig(n, horizon, 1.0, sys_seed), 0);
                Trajectory d = double_angle(f);
                for (std::size_t k = 0; k < d.length(); ++k) {
                    worst_trig = std::max(
                        worst_trig, residual_norm(d.x[k] * d.u[k], d.u[k] * d.x[k]));
                }
            }
        }
    }
    for (std::size_t n : {1, 2, 3}) {
        for (std::size_t horizon : {1, 16, 48}) {
            const double amplitude = hyp_amplitude_for(horizon);
            for (Seed seed = 1; seed <= 10; ++seed) {
                const Seed sys_seed = seed * 6263 + n * 15485863 + horizon;
                HypFunctions f =
                    hyp_functions(gen_hyp(n, horizon, amplitude, std::nullopt, sys_seed), 0);
                Trajectory d = hyp_double_angle(f);
                for (std::size_t k = 0; k < d.length(); ++k) {
                    worst_hyp = std::max(
                        worst_hyp, relative_residual(d.x[k] * d.u[k], d.u[k] * d.x[k]));
                }
            }
        }
    }
    const double elapsed = clock.seconds();
    const bool pass = worst_trig <= 1e-10 && worst_hyp <= 1e-8;
    report_line(8, "double-angle commutation across the suite grids", pass,
                "trig " + fmt(worst_trig) + " abs, hyp " + fmt(worst_hyp) + " rel", elapsed);
}

// --- criterion 9 ------------------------------------------------------------

void criterion_difference_formulas() {
    Clock clock;
    bool pass = true;
    std::string detail;
    const std::vector<std::pair<const SuiteStats*, const char*>> wanted = {
        {&g_trig_stats, "eq37"},
        {&g_trig_stats, "eq40"},
        {&g_hyp_stats, "eq76"},
        {&g_hyp_stats, "eq79"},
    };
    for (const auto& [stats, id] : wanted) {
        const bool present = stats->id_pass.count(id) != 0;
        const bool ok = present && stats->id_pass.at(id) && stats->evaluated.at(id) > 0;
        if (!ok) {
            pass = false;
        }
        if (!detail.empty()) {
            detail += ", ";
        }
        detail += std::string(id) + (ok ? " ok (" : " FAIL (") +
                  std::to_string(present ? stats->evaluated.at(id) : 0) + " pairs)";
    }
    report_line(9, "difference formulas at consecutive non-skipped pairs", pass, detail,
                clock.seconds());
}

// --- criterion 10 -----------------------------------------------------------

bool trig_mutation_detected(const TrigCoefficients& m) {
    if (!validate_trig(m).all_pass()) {
        return true;
    }
    const std::vector<BlockSymplectic> steps = assemble_trig(m);
    const std::size_t n = m.dim();
    const Matrix id = Matrix::identity(n);
    Trajectory z2 = principal_solution(steps, 0);
    for (std::size_t k = 0; k < z2.length(); ++k) {
        if (residual_norm(z2.x[k].transposed() * z2.x[k] + z2.u[k].transposed() * z2.u[k], id) >
            1e-10) {
            return true;
        }
    }
    Trajectory z1 = propagate(steps, id, Matrix::zero(n, n));
    const Matrix w0 = wronskian(z1, z2, 0);
    for (std::size_t k = 0; k < z1.length(); ++k) {
        if (residual_norm(wronskian(z1, z2, k), w0) > 1e-10) {
            return true;
        }
    }
    return false;
}

bool hyp_mutation_detected(const HypCoefficients& m) {
    if (!validate_hyp(m).all_pass()) {
        return true;
    }
    const std::vector<BlockSymplectic> steps = assemble_hyp(m);
    const std::size_t n = m.dim();
    const Matrix id = Matrix::identity(n);
    Trajectory z2 = principal_solution(steps, 0);
    for (std::size_t k = 0; k < z2.length(); ++k) {
        const Matrix lhs =
            z2.u[k].transposed() * z2.u[k] - z2.x[k].transposed() * z2.x[k];
        if (relative_residual(lhs, id) > 1e-8) {
            return true;
        }
    }
    Trajectory z1 = propagate(steps, id, Matrix::zero(n, n));
    const Matrix w0 = wronskian(z1, z2, 0);
    for (std::size_t k = 0; k < z1.length(); ++k) {
        if (residual_norm(wronskian(z1, z2, k), w0) > 1e-10) {
            return true;
        }
    }
    return false;
}

void criterion_mutation_sensitivity() {
    Clock clock;
    int total = 0;
    int detected = 0;

    TrigCoefficients t = gen_trig(2, 3, 1.0, 5);
    for (std::size_t k = 0; k < t.p.size(); ++k) {
        for (int block = 0; block < 2; ++block) {
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                    TrigCoefficients m = t;
                    Matrix& target = (block == 0) ? m.p[k] : m.q[k];
                    target(i, j) += 1e-3;
                    ++total;
                    if (trig_mutation_detected(m)) {
                        ++detected;
                    }
                }
            }
        }
    }

    HypCoefficients h = gen_hyp(2, 3, 0.4, std::nullopt, 5);
    for (std::size_t k = 0; k < h.p.size(); ++k) {
        for (int block = 0; block < 2; ++block) {
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                    HypCoefficients m = h;
                    Matrix& target = (block == 0) ? m.p[k] : m.q[k];
                    target(i, j) += 1e-3;
                    ++total;
                    if (hyp_mutation_detected(m)) {
                        ++detected;
                    }
                }
            }
        }
    }

    const bool pass = detected == total;
    report_line(10, "mutation sensitivity, 1e-3 single-entry perturbations", pass,
                std::to_string(detected) + "/" + std::to_string(total) + " detected",
                clock.seconds());
}

}  // namespace

int main() {
    Clock total;
    std::printf("acceptance gate: discrete trigonometric and hyperbolic systems\n");
    criterion_scalar_trig();
    criterion_scalar_hyp();
    criterion_trig_suite();
    criterion_hyp_suite();
    criterion_wronskian_recovery();
    criterion_frobenius();
    criterion_combination_equivalence();
    criterion_double_angle();
    criterion_difference_formulas();
    criterion_mutation_sensitivity();
    std::printf("%d of 10 criteria failed; total runtime %.2f s\n", g_failed, total.seconds());
    return g_failed == 0 ? 0 : 1;
}
