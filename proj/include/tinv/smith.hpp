// Smith normal form of an integer matrix by unimodular row and column
// operations, with checked arithmetic.  Matrices here are tiny (4x4), so a
// plain pivot-and-reduce loop is plenty.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tinv/golden.hpp"  // checked_add / checked_mul helpers

namespace tinv {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Diagonal d1 | d2 | ... of the Smith normal form, all entries >= 0, with
/// length min(rows, cols).  For square nonsingular input the product of the
/// diagonal equals |det|.
inline std::vector<std::int64_t> smith_normal_form(IntMatrix m) {
    const std::size_t rows = m.size();
    if (rows == 0) return {};
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols)
            throw std::invalid_argument("smith_normal_form: ragged matrix");

    const std::size_t n = std::min(rows, cols);
    std::vector<std::int64_t> diag;

    const auto sub_row_mult = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        for (std::size_t j = 0; j < cols; ++j)
            m[dst][j] = detail::checked_sub(m[dst][j], detail::checked_mul(q, m[src][j]));
    };
    const auto sub_col_mult = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        for (std::size_t i = 0; i < rows; ++i)
            m[i][dst] = detail::checked_sub(m[i][dst], detail::checked_mul(q, m[i][src]));
    };

    for (std::size_t t = 0; t < n; ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pi = t, pj = t;
        bool any = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (!any || std::llabs(m[i][j]) < std::llabs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                    any = true;
                }
        if (!any) break;  // trailing block is zero
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                sub_row_mult(i, t, m[i][t] / m[t][t]);
                if (m[i][t] != 0) {  // remainder smaller than pivot: promote it
                    std::swap(m[t], m[i]);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                sub_col_mult(j, t, m[t][j] / m[t][t]);
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    dirty = true;
                }
            }
        }
        diag.push_back(std::llabs(m[t][t]));
    }

    // Enforce the divisibility chain d_i | d_j for i < j.
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            const std::int64_t a = diag[i], b = diag[j];
            const std::int64_t g = std::gcd(a, b);
            diag[i] = g;
            diag[j] = detail::checked_mul(a / g, b);
        }

    diag.resize(n, 0);
    return diag;
}

}  // namespace tinv
