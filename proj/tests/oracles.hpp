#pragma once

// Test-only oracles, independent of the library construction paths.

#include "macshift/mpoly.hpp"
#include "macshift/partitions.hpp"

namespace macshift::oracles {

// Schur polynomial as the monomial sum over semistandard tableaux (rows
// weakly increasing, columns strictly increasing), entries 1..n.
inline XPoly schur_ssyt(const Partition& mu, int n) {
    XPoly out(n);
    if (mu.empty()) return XPoly::one(n);
    if (mu.length() > n) return out;
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= mu.length(); ++i) rows.emplace_back(mu.part(i), 0);
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i > mu.length()) {
            Exps e(n, 0);
            for (int r = 1; r <= mu.length(); ++r)
                for (int c = 1; c <= mu.part(r); ++c) e[rows[r - 1][c - 1] - 1] += 1;
            out.add_term(e, QtRat(1));
            return;
        }
        int ni = i, nj = j + 1;
        if (nj > mu.part(i)) { ni = i + 1; nj = 1; }
        int lo = 1;
        if (j > 1) lo = std::max(lo, rows[i - 1][j - 2]);
        if (i > 1) lo = std::max(lo, rows[i - 2][j - 1] + 1);
        for (int v = lo; v <= n; ++v) {
            rows[i - 1][j - 1] = v;
            self(self, ni, nj);
        }
    };
    rec(rec, 1, 1);
    return out;
}

} // namespace macshift::oracles
