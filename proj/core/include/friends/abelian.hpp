#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace friends {

// Exact integer type for all homological algebra. Intermediate entries in
// Smith reductions explode well past 64 bits even for modest inputs.
using Int = boost::multiprecision::cpp_int;

using IntMatrix = std::vector<std::vector<Int>>;

inline IntMatrix zeroMatrix(int rows, int cols) {
    return IntMatrix(rows, std::vector<Int>(cols, 0));
}
inline IntMatrix identityMatrix(int n) {
    IntMatrix m = zeroMatrix(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Finitely generated abelian group in invariant-factor form:
// Z^rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, every di >= 2.
struct AbelianGroup {
    int rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool isZ() const { return rank == 1 && torsion.empty(); }
    bool isCyclic(const Int& n) const {
        if (n == 0) return isZ();
        if (n == 1) return trivial();
        return rank == 0 && torsion.size() == 1 && torsion[0] == n;
    }
    std::string str() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// In-place Smith normal form. On return A is diagonal with the divisibility
// chain. If U/V are supplied they accumulate the unimodular transforms with
// D = U * A_in * V; Vinv accumulates V^-1 alongside.
void smithNormalForm(IntMatrix& A, IntMatrix* U = nullptr, IntMatrix* V = nullptr,
                     IntMatrix* Vinv = nullptr);

// The quotient Z^gens / <rows of rel>.
AbelianGroup quotientByRows(int gens, const IntMatrix& rel);

// Integer kernel of A (columns span ker as a direct summand basis).
IntMatrix integerKernel(const IntMatrix& A);

// Solves for the cokernel projection when coker(rel) has free rank 1:
// returns phi with phi[j] = image of generator j in Z. Empty if coker != Z
// up to torsion... (exactly: free rank must be 1; torsion is ignored by the
// caller's contract).
std::vector<Int> cokernelZMap(int gens, const IntMatrix& rel);

}  // namespace friends
