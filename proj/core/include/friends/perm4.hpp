#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace friends {

// Permutation of {0,1,2,3}, stored as images packed two bits apiece.
// Used for tetrahedron face gluings and relabellings.
class Perm4 {
public:
    constexpr Perm4() : code_(0b11100100) {}  // identity
    constexpr Perm4(int a, int b, int c, int d)
        : code_(static_cast<uint8_t>(a | (b << 2) | (c << 4) | (d << 6))) {}

    static Perm4 fromIndex(int idx);          // idx in 0..23
    int index() const;                        // inverse of fromIndex

    constexpr int operator[](int i) const { return (code_ >> (2 * i)) & 3; }

    Perm4 inverse() const {
        int im[4];
        for (int i = 0; i < 4; ++i) im[(*this)[i]] = i;
        return Perm4(im[0], im[1], im[2], im[3]);
    }

    // (a * b)[i] = a[b[i]]
    friend Perm4 operator*(Perm4 a, Perm4 b) {
        return Perm4(a[b[0]], a[b[1]], a[b[2]], a[b[3]]);
    }

    int sign() const {
        int s = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if ((*this)[i] > (*this)[j]) s = -s;
        return s;
    }

    bool isIdentity() const { return code_ == 0b11100100; }

    friend bool operator==(Perm4 a, Perm4 b) { return a.code_ == b.code_; }
    friend bool operator!=(Perm4 a, Perm4 b) { return a.code_ != b.code_; }
    friend bool operator<(Perm4 a, Perm4 b) { return a.index() < b.index(); }

    // Transposition (i j).
    static constexpr Perm4 swap(int i, int j) {
        int im[4] = {0, 1, 2, 3};
        int t = im[i]; im[i] = im[j]; im[j] = t;
        return Perm4(im[0], im[1], im[2], im[3]);
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < 4; ++i) s += static_cast<char>('0' + (*this)[i]);
        return s + ")";
    }

private:
    uint8_t code_;
};

namespace detail {
// All 24 permutations in a fixed order (lexicographic on images).
inline const std::array<Perm4, 24>& allPerms() {
    static const std::array<Perm4, 24> table = [] {
        std::array<Perm4, 24> t{};
        int n = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                if (b == a) continue;
                for (int c = 0; c < 4; ++c) {
                    if (c == a || c == b) continue;
                    int d = 6 - a - b - c;
                    t[n++] = Perm4(a, b, c, d);
                }
            }
        return t;
    }();
    return table;
}
}  // namespace detail

inline Perm4 Perm4::fromIndex(int idx) { return detail::allPerms()[idx]; }

inline int Perm4::index() const {
    int a = (*this)[0], b = (*this)[1], c = (*this)[2];
    int i1 = b - (b > a ? 1 : 0);
    int i2 = c - (c > a ? 1 : 0) - (c > b ? 1 : 0);
    return a * 6 + i1 * 2 + i2;
}

}  // namespace friends
