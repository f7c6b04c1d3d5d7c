#include "friends/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace friends {

std::string AbelianGroup::str() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank == 1) { os << "Z"; first = false; }
    else if (rank > 1) { os << "Z^" << rank; first = false; }
    for (const Int& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

namespace {

int rowsOf(const IntMatrix& A) { return static_cast<int>(A.size()); }
int colsOf(const IntMatrix& A) { return A.empty() ? 0 : static_cast<int>(A[0].size()); }

void swapRows(IntMatrix& A, int i, int j) { if (i != j) std::swap(A[i], A[j]); }
void swapCols(IntMatrix& A, int i, int j) {
    if (i == j) return;
    for (auto& row : A) std::swap(row[i], row[j]);
}
void addRow(IntMatrix& A, int dst, int src, const Int& k) {  // row dst += k * row src
    if (k == 0) return;
    for (size_t c = 0; c < A[dst].size(); ++c) A[dst][c] += k * A[src][c];
}
void addCol(IntMatrix& A, int dst, int src, const Int& k) {
    if (k == 0) return;
    for (auto& row : A) row[dst] += k * row[src];
}
void negRow(IntMatrix& A, int i) { for (auto& x : A[i]) x = -x; }

}  // namespace

void smithNormalForm(IntMatrix& A, IntMatrix* U, IntMatrix* V, IntMatrix* Vinv) {
    const int m = rowsOf(A), n = colsOf(A);
    if (U) *U = identityMatrix(m);
    if (V) *V = identityMatrix(n);
    if (Vinv) *Vinv = identityMatrix(n);
    const int nmin = std::min(m, n);

    auto doSwapRows = [&](int i, int j) {
        swapRows(A, i, j);
        if (U) swapRows(*U, i, j);
    };
    auto doSwapCols = [&](int i, int j) {
        swapCols(A, i, j);
        if (V) swapCols(*V, i, j);
        if (Vinv) swapRows(*Vinv, i, j);
    };
    auto doAddRow = [&](int dst, int src, const Int& k) {
        addRow(A, dst, src, k);
        if (U) addRow(*U, dst, src, k);
    };
    auto doAddCol = [&](int dst, int src, const Int& k) {
        addCol(A, dst, src, k);
        if (V) addCol(*V, dst, src, k);
        if (Vinv) addRow(*Vinv, src, dst, -k);
    };
    auto doNegRow = [&](int i) {
        negRow(A, i);
        if (U) negRow(*U, i);
    };

    for (int s = 0; s < nmin; ++s) {
        while (true) {
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = s; i < m; ++i)
                for (int j = s; j < n; ++j) {
                    if (A[i][j] == 0) continue;
                    Int a = abs(A[i][j]);
                    if (pi < 0 || a < best) { best = a; pi = i; pj = j; }
                }
            if (pi < 0) {  // block is zero; everything from here stays zero
                s = nmin;
                break;
            }
            doSwapRows(s, pi);
            doSwapCols(s, pj);

            bool clean = true;
            for (int i = s + 1; i < m; ++i) {
                if (A[i][s] == 0) continue;
                Int q = A[i][s] / A[s][s];
                doAddRow(i, s, -q);
                if (A[i][s] != 0) clean = false;
            }
            for (int j = s + 1; j < n; ++j) {
                if (A[s][j] == 0) continue;
                Int q = A[s][j] / A[s][s];
                doAddCol(j, s, -q);
                if (A[s][j] != 0) clean = false;
            }
            if (!clean) continue;  // smaller remainders appeared; re-pivot

            // Pivot row/column clear; enforce divisibility on the rest.
            int bi = -1;
            for (int i = s + 1; i < m && bi < 0; ++i)
                for (int j = s + 1; j < n; ++j)
                    if (A[i][j] % A[s][s] != 0) { bi = i; break; }
            if (bi >= 0) {
                doAddRow(s, bi, 1);
                continue;
            }
            if (A[s][s] < 0) doNegRow(s);
            break;
        }
        if (s >= nmin) break;
    }
}

AbelianGroup quotientByRows(int gens, const IntMatrix& rel) {
    AbelianGroup g;
    if (rel.empty() || gens == 0) {
        g.rank = gens;
        return g;
    }
    IntMatrix A = rel;
    smithNormalForm(A);
    int r = 0;
    int nmin = std::min(rowsOf(A), colsOf(A));
    for (int i = 0; i < nmin; ++i) {
        if (A[i][i] == 0) break;
        ++r;
        if (A[i][i] > 1) g.torsion.push_back(A[i][i]);
    }
    g.rank = gens - r;
    return g;
}

IntMatrix integerKernel(const IntMatrix& A) {
    const int n = colsOf(A);
    IntMatrix D = A, V;
    smithNormalForm(D, nullptr, &V, nullptr);
    int r = 0;
    int nmin = std::min(rowsOf(D), n);
    for (int i = 0; i < nmin; ++i)
        if (D[i][i] != 0) ++r;
    IntMatrix K = zeroMatrix(rowsOf(V), n - r);
    for (int i = 0; i < rowsOf(V); ++i)
        for (int j = r; j < n; ++j) K[i][j - r] = V[i][j];
    return K;
}

std::vector<Int> cokernelZMap(int gens, const IntMatrix& rel) {
    // coker of M = rel^T (gens x m): Z^gens / im(M) maps to normal form by U.
    const int m = rowsOf(rel);
    IntMatrix M = zeroMatrix(gens, std::max(m, 1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < gens; ++j) M[j][i] = rel[i][j];
    IntMatrix U;
    smithNormalForm(M, &U, nullptr, nullptr);
    int nmin = std::min(gens, std::max(m, 1));
    int r = 0;
    for (int i = 0; i < nmin; ++i)
        if (M[i][i] != 0) ++r;
    if (gens - r != 1) return {};  // free rank not 1
    std::vector<Int> phi(gens);
    for (int j = 0; j < gens; ++j) phi[j] = U[r][j];
    return phi;
}

}  // namespace friends
