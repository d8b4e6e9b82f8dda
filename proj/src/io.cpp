#include "symtrig/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace symtrig {

namespace {

using nlohmann::json;

void require_block_list(const std::vector<Matrix>& list, std::size_t n, std::size_t horizon,
                        const char* name) {
    if (list.size() != horizon + 1) {
        throw ShapeError(std::string("coefficient file: ") + name + " must hold N+1 blocks");
    }
    for (const Matrix& m : list) {
        if (m.rows() != n || m.cols() != n) {
            throw ShapeError(std::string("coefficient file: ") + name +
                             " block does not match the declared dimension");
        }
    }
}

json matrix_to_flat(const Matrix& m) {
    json arr = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            arr.push_back(m(i, j));
        }
    }
    return arr;
}

json block_list_to_json(const std::vector<Matrix>& list) {
    json arr = json::array();
    for (const Matrix& m : list) {
        arr.push_back(matrix_to_flat(m));
    }
    return arr;
}

const json& field(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw DomainError(std::string("coefficient file: missing field '") + key + "'");
    }
    return *it;
}

std::size_t read_size(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_unsigned()) {
        throw DomainError(std::string("coefficient file: '") + key +
                          "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::vector<Matrix> read_block_list(const json& j, const char* key, std::size_t n,
                                    std::size_t horizon) {
    const json& v = field(j, key);
    if (!v.is_array() || v.size() != horizon + 1) {
        throw DomainError(std::string("coefficient file: '") + key +
                          "' must be an array of N+1 blocks");
    }
    std::vector<Matrix> list;
    list.reserve(v.size());
    for (const json& entry : v) {
        if (!entry.is_array() || entry.size() != n * n) {
            throw DomainError(std::string("coefficient file: each '") + key +
                              "' block must hold n*n numbers in row-major order");
        }
        std::vector<double> data;
        data.reserve(n * n);
        for (const json& number : entry) {
            if (!number.is_number()) {
                throw DomainError(std::string("coefficient file: non-numeric entry in '") + key +
                                  "'");
            }
            data.push_back(number.get<double>());
        }
        list.emplace_back(n, n, std::move(data));
    }
    return list;
}

void append_row(std::string& out, std::size_t k, std::size_t i, std::size_t j, double x,
                double u) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.17g,%.17g\n", k, i, j, x, u);
    out += buf;
}

}  // namespace

CoefficientFile from_trig(const TrigCoefficients& coeffs) {
    CoefficientFile file;
    file.kind = SystemKind::Trig;
    file.n = coeffs.dim();
    file.horizon = coeffs.horizon();
    file.p = coeffs.p;
    file.q = coeffs.q;
    return file;
}

CoefficientFile from_hyp(const HypCoefficients& coeffs) {
    CoefficientFile file;
    file.kind = SystemKind::Hyperbolic;
    file.n = coeffs.dim();
    file.horizon = coeffs.horizon();
    file.p = coeffs.p;
    file.q = coeffs.q;
    return file;
}

CoefficientFile from_blocks(const std::vector<BlockSymplectic>& blocks) {
    if (blocks.empty()) {
        throw ShapeError("from_blocks: need at least one step matrix");
    }
    CoefficientFile file;
    file.kind = SystemKind::GeneralSymplectic;
    file.n = blocks.front().dim();
    file.horizon = blocks.size() - 1;
    for (const BlockSymplectic& s : blocks) {
        if (s.dim() != file.n) {
            throw ShapeError("from_blocks: steps must share one dimension");
        }
        file.a.push_back(s.a());
        file.b.push_back(s.b());
        file.c.push_back(s.c());
        file.d.push_back(s.d());
    }
    return file;
}

TrigCoefficients to_trig(const CoefficientFile& file) {
    if (file.kind != SystemKind::Trig) {
        throw DomainError("to_trig: coefficient file is not trigonometric");
    }
    require_block_list(file.p, file.n, file.horizon, "P");
    require_block_list(file.q, file.n, file.horizon, "Q");
    TrigCoefficients coeffs;
    coeffs.p = file.p;
    coeffs.q = file.q;
    return coeffs;
}

HypCoefficients to_hyp(const CoefficientFile& file) {
    if (file.kind != SystemKind::Hyperbolic) {
        throw DomainError("to_hyp: coefficient file is not hyperbolic");
    }
    require_block_list(file.p, file.n, file.horizon, "P");
    require_block_list(file.q, file.n, file.horizon, "Q");
    HypCoefficients coeffs;
    coeffs.p = file.p;
    coeffs.q = file.q;
    return coeffs;
}

std::vector<BlockSymplectic> to_blocks(const CoefficientFile& file) {
    switch (file.kind) {
        case SystemKind::Trig:
            return assemble_trig(to_trig(file));
        case SystemKind::Hyperbolic:
            return assemble_hyp(to_hyp(file));
        case SystemKind::GeneralSymplectic:
            break;
    }
    require_block_list(file.a, file.n, file.horizon, "A");
    require_block_list(file.b, file.n, file.horizon, "B");
    require_block_list(file.c, file.n, file.horizon, "C");
    require_block_list(file.d, file.n, file.horizon, "D");
    std::vector<BlockSymplectic> blocks;
    blocks.reserve(file.a.size());
    for (std::size_t k = 0; k < file.a.size(); ++k) {
        blocks.push_back(BlockSymplectic::unchecked(file.a[k], file.b[k], file.c[k], file.d[k]));
    }
    return blocks;
}

std::string kind_name(SystemKind kind) {
    switch (kind) {
        case SystemKind::Trig:
            return "trig";
        case SystemKind::Hyperbolic:
            return "hyperbolic";
        case SystemKind::GeneralSymplectic:
            return "symplectic";
    }
    throw DomainError("kind_name: unknown system kind");
}

SystemKind parse_kind(const std::string& name) {
    if (name == "trig") {
        return SystemKind::Trig;
    }
    if (name == "hyperbolic") {
        return SystemKind::Hyperbolic;
    }
    if (name == "symplectic") {
        return SystemKind::GeneralSymplectic;
    }
    throw DomainError("unknown system kind '" + name +
                      "' (expected trig, hyperbolic, or symplectic)");
}

std::string coefficient_json(const CoefficientFile& file) {
    if (file.n == 0) {
        throw ShapeError("coefficient file: dimension must be positive");
    }
    json j;
    j["kind"] = kind_name(file.kind);
    j["n"] = file.n;
    j["N"] = file.horizon;
    if (file.seed) {
        j["seed"] = *file.seed;
    }
    if (file.amplitude) {
        j["amplitude"] = *file.amplitude;
    }
    if (file.kind == SystemKind::GeneralSymplectic) {
        require_block_list(file.a, file.n, file.horizon, "A");
        require_block_list(file.b, file.n, file.horizon, "B");
        require_block_list(file.c, file.n, file.horizon, "C");
        require_block_list(file.d, file.n, file.horizon, "D");
        j["A"] = block_list_to_json(file.a);
        j["B"] = block_list_to_json(file.b);
        j["C"] = block_list_to_json(file.c);
        j["D"] = block_list_to_json(file.d);
    } else {
        require_block_list(file.p, file.n, file.horizon, "P");
        require_block_list(file.q, file.n, file.horizon, "Q");
        j["P"] = block_list_to_json(file.p);
        j["Q"] = block_list_to_json(file.q);
    }
    return j.dump(2) + "\n";
}

CoefficientFile parse_coefficient_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("coefficient file: malformed JSON (") + e.what() + ")");
    }
    if (!j.is_object()) {
        throw DomainError("coefficient file: top level must be an object");
    }
    CoefficientFile file;
    const json& kind = field(j, "kind");
    if (!kind.is_string()) {
        throw DomainError("coefficient file: 'kind' must be a string");
    }
    file.kind = parse_kind(kind.get<std::string>());
    file.n = read_size(j, "n");
    if (file.n == 0) {
        throw DomainError("coefficient file: 'n' must be positive");
    }
    file.horizon = read_size(j, "N");
    if (const auto it = j.find("seed"); it != j.end()) {
        if (!it->is_number_unsigned()) {
            throw DomainError("coefficient file: 'seed' must be a non-negative integer");
        }
        file.seed = it->get<std::uint64_t>();
    }
    if (const auto it = j.find("amplitude"); it != j.end()) {
        if (!it->is_number()) {
            throw DomainError("coefficient file: 'amplitude' must be a number");
        }
        file.amplitude = it->get<double>();
    }
    if (file.kind == SystemKind::GeneralSymplectic) {
        file.a = read_block_list(j, "A", file.n, file.horizon);
        file.b = read_block_list(j, "B", file.n, file.horizon);
        file.c = read_block_list(j, "C", file.n, file.horizon);
        file.d = read_block_list(j, "D", file.n, file.horizon);
    } else {
        file.p = read_block_list(j, "P", file.n, file.horizon);
        file.q = read_block_list(j, "Q", file.n, file.horizon);
    }
    return file;
}

void save_coefficient_file(const CoefficientFile& file, const std::string& path) {
    write_text_file(path, coefficient_json(file));
}

CoefficientFile load_coefficient_file(const std::string& path) {
    return parse_coefficient_json(read_text_file(path));
}

std::string trajectory_csv(const Trajectory& z) {
    if (z.x.size() != z.u.size()) {
        throw ShapeError("trajectory_csv: X and U lists must have equal length");
    }
    std::string out = "k,i,j,X,U\n";
    for (std::size_t k = 0; k < z.x.size(); ++k) {
        const Matrix& x = z.x[k];
        const Matrix& u = z.u[k];
        if (x.rows() != u.rows() || x.cols() != u.cols()) {
            throw ShapeError("trajectory_csv: X and U must share shape at every step");
        }
        for (std::size_t i = 0; i < x.rows(); ++i) {
            for (std::size_t j = 0; j < x.cols(); ++j) {
                append_row(out, k, i, j, x(i, j), u(i, j));
            }
        }
    }
    return out;
}

void save_trajectory_csv(const Trajectory& z, const std::string& path) {
    write_text_file(path, trajectory_csv(z));
}

std::string scalar_demo_csv(const std::vector<ScalarDemoRow>& rows) {
    std::string out = "k,recurrence,closed_form,abs_err\n";
    char buf[160];
    for (const ScalarDemoRow& row : rows) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", row.k, row.recurrence,
                      row.closed_form, row.abs_err);
        out += buf;
    }
    return out;
}

void save_scalar_demo_csv(const std::vector<ScalarDemoRow>& rows, const std::string& path) {
    write_text_file(path, scalar_demo_csv(rows));
}

std::string report_json(const ResidualReport& report, const ReportContext& ctx) {
    json j;
    j["kind"] = kind_name(ctx.kind);
    j["n"] = ctx.n;
    j["N"] = ctx.horizon;
    j["tol"] = ctx.tol;
    if (ctx.partner_seed) {
        j["partner_seed"] = *ctx.partner_seed;
    }
    json ids = json::array();
    for (const IdentityResult& e : report.entries()) {
        json o;
        o["id"] = e.id;
        o["max_residual"] = e.max_residual;
        o["tolerance"] = e.tolerance;
        o["pass"] = e.pass;
        o["skipped_indices"] = e.skipped_indices;
        o["evaluated_count"] = e.evaluated_count;
        ids.push_back(std::move(o));
    }
    j["identities"] = std::move(ids);
    j["all_pass"] = report.all_pass();
    return j.dump(2) + "\n";
}

void save_report_json(const ResidualReport& report, const ReportContext& ctx,
                      const std::string& path) {
    write_text_file(path, report_json(report, ctx));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failure on '" + path + "'");
    }
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoError("write failure on '" + path + "'");
    }
}

}  // namespace symtrig
