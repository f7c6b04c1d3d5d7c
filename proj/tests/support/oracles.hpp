#pragma once

// Independent test oracles. These deliberately avoid the library's own
// algorithms: the Smith form here is a plain textbook row/column elimination
// with no pivoting strategy, divisibility loop or transform bookkeeping.

#include <vector>

#include "friends/abelian.hpp"

namespace oracles {

// Naive Smith normal form diagonal (invariant factors, unsorted fixups done
// the slow way). Returns the nonzero diagonal entries.
inline std::vector<friends::Int> naiveInvariantFactors(friends::IntMatrix a) {
    using friends::Int;
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    std::vector<Int> diag;
    int top = 0, left = 0;
    while (top < m && left < n) {
        // smallest nonzero entry as pivot (plain magnitude scan; without
        // this, coefficient growth makes 30x30 cases intractable)
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = top; i < m; ++i)
            for (int j = left; j < n; ++j) {
                if (a[i][j] == 0) continue;
                Int v = abs(a[i][j]);
                if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
            }
        if (pi < 0) break;
        std::swap(a[top], a[pi]);
        for (int i = 0; i < m; ++i) std::swap(a[i][left], a[i][pj]);
        // reduce until pivot divides its row and column and they are clear;
        // re-pick the smallest remainder as the new pivot each round
        bool again = true;
        while (again) {
            again = false;
            for (int i = top + 1; i < m; ++i) {
                if (a[i][left] == 0) continue;
                Int q = a[i][left] / a[top][left];
                for (int j = left; j < n; ++j) a[i][j] -= q * a[top][j];
                if (a[i][left] != 0) {
                    std::swap(a[top], a[i]);
                    again = true;
                }
            }
            for (int j = left + 1; j < n; ++j) {
                if (a[top][j] == 0) continue;
                Int q = a[top][j] / a[top][left];
                for (int i = top; i < m; ++i) a[i][j] -= q * a[i][left];
                if (a[top][j] != 0) {
                    for (int i = 0; i < m; ++i) std::swap(a[i][left], a[i][j]);
                    again = true;
                }
            }
        }
        diag.push_back(abs(a[top][left]));
        ++top; ++left;
    }
    // enforce the divisibility chain pairwise, slowly
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] % diag[i] == 0) continue;
            Int aa = diag[i], bb = diag[i + 1];
            Int g = aa, h = bb;
            while (h != 0) { Int t = g % h; g = h; h = t; }
            Int l = aa / g * bb;
            diag[i] = g;
            diag[i + 1] = l;
            changed = true;
        }
    }
    return diag;
}

inline friends::AbelianGroup naiveQuotient(int gens, const friends::IntMatrix& rel) {
    friends::AbelianGroup g;
    auto diag = naiveInvariantFactors(rel);
    int r = 0;
    for (const auto& d : diag)
        if (d != 0) {
            ++r;
            if (d > 1) g.torsion.push_back(d);
        }
    g.rank = gens - r;
    return g;
}

}  // namespace oracles
