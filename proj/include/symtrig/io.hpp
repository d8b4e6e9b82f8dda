// File formats: coefficient files and residual reports are JSON, trajectories
// and the scalar demo table are CSV. Serialization is deterministic — the
// same in-memory value always produces the same bytes — so generated files
// can be compared verbatim.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symtrig/hyperbolic.hpp"
#include "symtrig/report.hpp"
#include "symtrig/symplectic.hpp"
#include "symtrig/trig.hpp"

namespace symtrig {

/// Filesystem-level failure (missing file, unwritable path). Malformed or
/// inconsistent file *content* throws DomainError / ShapeError instead.
class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// In-memory image of a coefficient file. Trig and hyperbolic systems carry
/// P/Q block lists; a general symplectic system carries A/B/C/D. Each list
/// holds horizon+1 matrices (steps 0..N). seed and amplitude are optional
/// provenance fields recorded by the generator.
struct CoefficientFile {
    SystemKind kind = SystemKind::Trig;
    std::size_t n = 0;
    std::size_t horizon = 0;
    std::optional<std::uint64_t> seed;
    std::optional<double> amplitude;
    std::vector<Matrix> p;
    std::vector<Matrix> q;
    std::vector<Matrix> a;
    std::vector<Matrix> b;
    std::vector<Matrix> c;
    std::vector<Matrix> d;
};

CoefficientFile from_trig(const TrigCoefficients& coeffs);
CoefficientFile from_hyp(const HypCoefficients& coeffs);
CoefficientFile from_blocks(const std::vector<BlockSymplectic>& blocks);

/// Throw DomainError when the file's kind does not match.
TrigCoefficients to_trig(const CoefficientFile& file);
HypCoefficients to_hyp(const CoefficientFile& file);
/// Works for every kind; trig and hyperbolic files are assembled into their
/// block form.
std::vector<BlockSymplectic> to_blocks(const CoefficientFile& file);

std::string kind_name(SystemKind kind);
SystemKind parse_kind(const std::string& name);

std::string coefficient_json(const CoefficientFile& file);
CoefficientFile parse_coefficient_json(const std::string& text);

void save_coefficient_file(const CoefficientFile& file, const std::string& path);
CoefficientFile load_coefficient_file(const std::string& path);

/// CSV with header `k,i,j,X,U`: one row per entry of each step's (X_k, U_k),
/// entries printed with %.17g so reading them back is exact.
std::string trajectory_csv(const Trajectory& z);
void save_trajectory_csv(const Trajectory& z, const std::string& path);

struct ScalarDemoRow {
    std::size_t k = 0;
    double recurrence = 0.0;
    double closed_form = 0.0;
    double abs_err = 0.0;
};

/// CSV with header `k,recurrence,closed_form,abs_err`.
std::string scalar_demo_csv(const std::vector<ScalarDemoRow>& rows);
void save_scalar_demo_csv(const std::vector<ScalarDemoRow>& rows, const std::string& path);

/// Metadata echoed into a residual report.
struct ReportContext {
    SystemKind kind = SystemKind::Trig;
    std::size_t n = 0;
    std::size_t horizon = 0;
    double tol = 0.0;
    std::optional<std::uint64_t> partner_seed;
};

std::string report_json(const ResidualReport& report, const ReportContext& ctx);
void save_report_json(const ResidualReport& report, const ReportContext& ctx,
                      const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace symtrig
