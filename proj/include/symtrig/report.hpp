// Residual bookkeeping: each verified identity contributes one record with
// its max residual over the evaluated trajectory indices, the tolerance it
// was judged against, and any indices the pivot test excluded.
#pragma once

#include <string>
#include <vector>

#include "symtrig/matrix.hpp"

namespace symtrig {

struct IdentityResult {
    std::string id;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    std::vector<int> skipped_indices;
    int evaluated_count = 0;
};

class ResidualReport {
public:
    void add(IdentityResult r) { entries_.push_back(std::move(r)); }

    const IdentityResult* find(const std::string& id) const;
    const std::vector<IdentityResult>& entries() const { return entries_; }

    bool all_pass() const;
    double worst_residual() const;

private:
    std::vector<IdentityResult> entries_;
};

/// Accumulates one identity across indices. In relative mode each residual is
/// scaled by max(1, ||lhs||_F) before entering the max. An identity whose
/// every index was skipped passes with residual 0.
class IdentityCheck {
public:
    IdentityCheck(std::string id, double tolerance, bool relative = false)
        : result_{std::move(id), 0.0, tolerance, true, {}, 0}, relative_(relative) {}

    void accumulate(int index, const Matrix& lhs, const Matrix& rhs);
    void accumulate_scalar(int index, double lhs, double rhs, double scale = 1.0);
    void skip(int index) { result_.skipped_indices.push_back(index); }

    IdentityResult finish() const;

private:
    IdentityResult result_;
    bool relative_;
};

}  // namespace symtrig
