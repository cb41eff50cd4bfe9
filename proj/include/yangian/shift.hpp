#pragma once

#include <optional>
#include <vector>

#include "yangian/series.hpp"

namespace yangian {

// A shift matrix: nonnegative integers with s_{i,j} + s_{j,k} = s_{i,k}
// whenever |i-j| + |j-k| = |i-k|.
struct ShiftMatrix {
    int n = 0;
    std::vector<int> entries;  // row-major

    static ShiftMatrix zero(int n);

    int at(int i, int j) const { return entries[(i - 1) * n + (j - 1)]; }
    int& at(int i, int j) { return entries[(i - 1) * n + (j - 1)]; }

    // Checks nonnegativity and the collinear additivity condition; returns
    // the first violating triple (i, j, k) if any.
    std::optional<std::array<int, 3>> violation() const;
    bool is_zero() const;
    bool operator==(const ShiftMatrix&) const = default;
};

// Error payload for a composition that is not admissible for sigma.
struct AdmissibilityError {
    int i = 0, j = 0;  // offending entry inside a diagonal block
};

// A validated (sigma, mu) pair together with the block-level shift table
// s^mu_{a,b}.
struct ShiftData {
    ShiftMatrix sigma;
    Composition mu;
    std::vector<int> block_shift;  // m x m row-major

    int m() const { return mu.length(); }
    int s(int a, int b) const { return block_shift[(a - 1) * m() + (b - 1)]; }
};

// Builds ShiftData, rejecting ill-formed shift matrices and non-admissible
// pairs loudly.
ShiftData make_shift_data(const ShiftMatrix& sigma, const Composition& mu);

// Convenience: is mu admissible for sigma (no exception path)?
std::optional<AdmissibilityError> admissibility_violation(
    const ShiftMatrix& sigma, const Composition& mu);

}  // namespace yangian
