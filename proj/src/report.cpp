#include "symtrig/report.hpp"

#include <algorithm>
#include <cmath>

namespace symtrig {

const IdentityResult* ResidualReport::find(const std::string& id) const {
    for (const auto& e : entries_) {
        if (e.id == id) {
            return &e;
        }
    }
    return nullptr;
}

bool ResidualReport::all_pass() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const IdentityResult& e) { return e.pass; });
}

double ResidualReport::worst_residual() const {
    double worst = 0.0;
    for (const auto& e : entries_) {
        worst = std::max(worst, e.max_residual);
    }
    return worst;
}

void IdentityCheck::accumulate(int index, const Matrix& lhs, const Matrix& rhs) {
    (void)index;
    const double r = relative_ ? relative_residual(lhs, rhs) : residual_norm(lhs, rhs);
    result_.max_residual = std::max(result_.max_residual, r);
    ++result_.evaluated_count;
}

void IdentityCheck::accumulate_scalar(int index, double lhs, double rhs, double scale) {
    (void)index;
    const double r = std::abs(lhs - rhs) / std::max(1.0, scale);
    result_.max_residual = std::max(result_.max_residual, r);
    ++result_.evaluated_count;
}

IdentityResult IdentityCheck::finish() const {
    IdentityResult out = result_;
    out.pass = out.max_residual <= out.tolerance;
    return out;
}

}  // namespace symtrig
