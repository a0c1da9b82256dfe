#pragma once

#include <vector>

#include "macshift/errors.hpp"
#include "macshift/mpoly.hpp"

namespace macshift {

// Dense Gaussian elimination over an exact field.
template <class K>
std::vector<K> solve_linear(std::vector<std::vector<K>> a, std::vector<K> b) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && FieldOps<K>::is_zero(a[pivot][col])) ++pivot;
        if (pivot == n) throw linear_solve_error("singular linear system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (size_t row = 0; row < n; ++row) {
            if (row == col || FieldOps<K>::is_zero(a[row][col])) continue;
            K factor = a[row][col] / a[col][col];
            for (size_t k = col; k < n; ++k) a[row][k] = a[row][k] - factor * a[col][k];
            b[row] = b[row] - factor * b[col];
        }
    }
    std::vector<K> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Coefficients (ascending) of the unique polynomial of degree < #nodes
// through the given points.
template <class K>
std::vector<K> lagrange_coeffs(const std::vector<K>& nodes, const std::vector<K>& values) {
    const size_t m = nodes.size();
    std::vector<K> acc(m, FieldOps<K>::zero());
    for (size_t i = 0; i < m; ++i) {
        // basis polynomial prod_{j != i} (d - node_j) / (node_i - node_j)
        std::vector<K> basis{FieldOps<K>::one()};
        K denom = FieldOps<K>::one();
        for (size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            std::vector<K> next(basis.size() + 1, FieldOps<K>::zero());
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] = next[k + 1] + basis[k];
                next[k] = next[k] - nodes[j] * basis[k];
            }
            basis = std::move(next);
            denom = denom * (nodes[i] - nodes[j]);
        }
        K scale = values[i] / denom;
        for (size_t k = 0; k < basis.size(); ++k) acc[k] = acc[k] + scale * basis[k];
    }
    while (acc.size() > 1 && FieldOps<K>::is_zero(acc.back())) acc.pop_back();
    return acc;
}

} // namespace macshift
